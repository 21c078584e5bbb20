#include "ldu/gen.hpp"

#include <random>

#include "ldu/errors.hpp"
#include "ldu/factorize.hpp"
#include "ldu/oracle.hpp"

namespace ldu {

namespace {

// std::uniform_int_distribution is implementation-defined, so draw by modulo
// to keep output byte-identical across standard libraries.
std::int64_t draw(std::mt19937_64& rng, std::int64_t bound) {
    std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    return static_cast<std::int64_t>(rng() % span) - bound;
}

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                        std::int64_t bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Int(draw(rng, bound));
    return m;
}

std::size_t rank_of(const IntMatrix& m) {
    if (m.rows() <= 8) return oracle_rank(m);
    return rank(m);
}

}  // namespace

IntMatrix gen_matrix(std::size_t n, std::size_t rank, std::uint64_t seed,
                     std::int64_t bound) {
    if (n == 0) throw ShapeMismatch("matrix size must be positive");
    if (rank > n) throw ShapeMismatch("rank cannot exceed size");
    if (bound < 1) throw ShapeMismatch("bound must be at least 1");
    if (rank == 0) return IntMatrix(n, n);
    std::mt19937_64 rng(seed);
    for (;;) {
        IntMatrix p = random_matrix(n, rank, rng, bound);
        IntMatrix q = random_matrix(rank, n, rng, bound);
        IntMatrix a = p * q;
        if (rank_of(a) == rank) return a;
    }
}

}  // namespace ldu
