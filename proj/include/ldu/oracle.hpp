#pragma once

#include <cstddef>
#include <vector>

#include "ldu/matrix.hpp"
#include "ldu/report.hpp"
#include "ldu/ring.hpp"

namespace ldu {

// Reference determinant: cofactor expansion up to 8 x 8, fraction-free
// elimination with row pivoting beyond.
Int det_naive(const IntMatrix& m);
Rat det_naive(const RatMatrix& m);

// Classical adjugate from cofactors; adj(A) * A = det(A) * E.
IntMatrix adjugate(const IntMatrix& m);
RatMatrix adjugate(const RatMatrix& m);

// Bordered determinant det [[a, c], [r, w]] evaluated through the adjugate:
// det(a) * w - r * adj(a) * c. r is 1 x n, c is n x 1.
Int surround_det(const IntMatrix& a, const IntMatrix& r, const IntMatrix& c, const Int& w);

// The matrix of minors surrounding the leading k x k block of m: entry
// (i, j) is the bordered determinant of the leading block extended by row
// k+i and column k+j. Requires det of the leading block nonzero for k > 0.
IntMatrix surround_matrix(const IntMatrix& m, std::size_t k);

// One descent step between surrounding-minor matrices: a surrounds a minor
// det_k, its leading t x t block has determinant det_s * det_k^(t-1), and
// the result surrounds det_s. Every division is exact.
IntMatrix descent_matrix(const IntMatrix& a, const Int& det_k, const Int& det_s,
                         std::size_t t);

// Minor of m picked by explicit (possibly repeating) row and column index
// lists; repeated indices give 0.
Int bordered_minor(const IntMatrix& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols);

// Rank by plain Gaussian elimination over the quotient field.
std::size_t oracle_rank(const IntMatrix& m);

// Checks a pivot sequence against brute-force minors: every prefix
// determinant must equal the pivot-ordered minor of a, and the prefix
// determinants must satisfy the Sylvester relation on the surrounding-minor
// matrices built from prefixes (det over the next t pivots of the prefix-k
// surround equals det_{k+t} * det_k^(t-1), det_0 = alpha).
Report check_nested_minors(const IntMatrix& a, const std::vector<PivotInfo>& pivots,
                           const Int& alpha);

}  // namespace ldu
