#include "ldu/counters.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace ldu {

namespace {

std::atomic<std::uint64_t> g_mults{0};

unsigned initial_budget() {
    if (const char* env = std::getenv("LDU_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::atomic<int> g_slots{-1};  // -1: not yet initialized from the budget
std::atomic<unsigned> g_budget{0};

void ensure_init() {
    int expected = -1;
    if (g_slots.load(std::memory_order_acquire) == -1) {
        unsigned b = initial_budget();
        int slots = b <= 1 ? 0 : static_cast<int>(b) - 1;
        if (g_slots.compare_exchange_strong(expected, slots))
            g_budget.store(b, std::memory_order_release);
    }
}

}  // namespace

std::uint64_t mult_count() noexcept { return g_mults.load(std::memory_order_relaxed); }

void reset_mult_count() noexcept { g_mults.store(0, std::memory_order_relaxed); }

void detail::add_mults(std::uint64_t n) noexcept {
    g_mults.fetch_add(n, std::memory_order_relaxed);
}

unsigned thread_budget() noexcept {
    ensure_init();
    return g_budget.load(std::memory_order_acquire);
}

void set_thread_budget(unsigned budget) noexcept {
    g_budget.store(budget, std::memory_order_release);
    g_slots.store(budget <= 1 ? 0 : static_cast<int>(budget) - 1,
                  std::memory_order_release);
}

bool detail::acquire_thread_slot() noexcept {
    ensure_init();
    int cur = g_slots.load(std::memory_order_acquire);
    while (cur > 0) {
        if (g_slots.compare_exchange_weak(cur, cur - 1)) return true;
    }
    return false;
}

void detail::release_thread_slot() noexcept {
    g_slots.fetch_add(1, std::memory_order_acq_rel);
}

}  // namespace ldu
