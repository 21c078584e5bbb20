#pragma once

#include <cstdint>

#include "ldu/matrix.hpp"

namespace ldu {

// Deterministic random test matrix of exact rank `rank` with entries produced
// from factors whose coefficients lie in [-bound, bound]. Same arguments,
// same matrix, on every platform.
IntMatrix gen_matrix(std::size_t n, std::size_t rank, std::uint64_t seed,
                     std::int64_t bound = 9);

}  // namespace ldu
