#pragma once

#include <cstdint>

namespace ldu {

// Global element-multiplication counter. Dense matrix products add the number
// of scalar multiplications they execute; the total is schedule-independent.
std::uint64_t mult_count() noexcept;
void reset_mult_count() noexcept;

namespace detail {
void add_mults(std::uint64_t n) noexcept;
}

// Worker-thread budget for the two independent half-size recursions.
// 0 or 1 means sequential. The default comes from LDU_THREADS, falling back
// to the hardware concurrency when unset.
unsigned thread_budget() noexcept;
void set_thread_budget(unsigned budget) noexcept;

namespace detail {
bool acquire_thread_slot() noexcept;
void release_thread_slot() noexcept;
}

}  // namespace ldu
