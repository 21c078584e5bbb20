#pragma once

#include <cstddef>
#include <vector>

#include "ldu/matrix.hpp"
#include "ldu/report.hpp"
#include "ldu/ring.hpp"
#include "ldu/wperm.hpp"

namespace ldu {

// Output of the block-recursive fraction-free LDU factorization of A with
// external scale alpha:
//   alpha * L * D * U = A,   L * Dhat * M = E,   W * Dhat * U = E,
// L lower triangular, U upper triangular, L/U/M/W over the ring, D and Dhat
// weighted permutations, alpha_r the last nonzero nested minor (alpha when
// the rank is 0). pivots lists positions and nested minors in discovery
// order, det_0 = alpha. Interior recursion levels carry M and W over the
// quotient field (pivot rows of M and pivot columns of W pick up alpha-power
// denominators); the result is demoted to the ring at the top, which is
// always exact for alpha = 1.
struct LduFactorization {
    Int alpha = 1;
    Int alpha_r = 1;
    IntMatrix L, U, M, W;
    WeightedPermMatrix D, Dhat;
    std::vector<PivotInfo> pivots;
    std::size_t original_rows = 0;
    std::size_t original_cols = 0;

    std::size_t size() const { return L.rows(); }
    std::size_t rank() const { return pivots.size(); }
};

// Top-level intermediates of one recursive step, captured on request for
// cross-checking against the minor oracles. Populated only when the call
// actually splits (size >= 2 and A != 0).
struct RecursionIntermediates {
    bool populated = false;
    Int alpha_k, alpha_l, alpha_m, alpha_s;
    Rat lambda;
    RatMatrix a12_0, a21_0;     // M11*A12, A21*W11
    RatMatrix a12_1, a21_1;     // A'_12, A'_21 (field values in general)
    IntMatrix a12_2, a21_2;     // A''_12, A''_21
    RatMatrix a22_0;            // A'_21 * D11+ * A'_12
    IntMatrix a22_1;            // A'_22
    RatMatrix a22_2;            // A''_22 = Dhat21*M21*A'_22*W12*I^(1/lambda)_12*Dhat12
    IntMatrix a22_3;            // A'''_22
    RatMatrix l_tilde12, u_tilde12;  // L12*I^lambda_12, J^lambda_12*U12
    WeightedPermMatrix d_tilde12, dhat_tilde12;
    RatMatrix m_tilde12, w_tilde12;
    WeightedPermMatrix i_lambda12, j_lambda12;
    IntMatrix u2, l3;
};

// Recursive kernel. A must be square with power-of-two size and entries that
// are minors surrounding a nonzero alpha (any A qualifies for alpha = 1).
LduFactorization ldu_recursive(const IntMatrix& a, const Int& alpha,
                               RecursionIntermediates* top = nullptr);

// Dhat = alpha_r^-1 * (alpha * D + Dbar).
WeightedPermMatrix make_dhat(const WeightedPermMatrix& d, const Int& alpha,
                             const Int& alpha_r);

// Factorization of an arbitrary rectangular matrix: zero-pads to the next
// power of two, runs the kernel, and records the original shape for
// trimming.
LduFactorization factorize(const IntMatrix& a, const Int& alpha = Int(1));

// Every defining identity of a factorization, checked exactly. When deep is
// true and the matrix is at desk scale (n <= 8) the pivot minors are also
// re-derived by brute force.
Report verify_factorization(const IntMatrix& a, const LduFactorization& f,
                            bool deep = false);

std::size_t rank(const IntMatrix& a);

// Exact determinant through the factorization: zero when rank deficient,
// otherwise the signed last pivot minor.
Int determinant(const IntMatrix& a);

// Exact inverse of a full-rank square matrix over the quotient field.
RatMatrix inverse(const IntMatrix& a);

// Solves A x = b exactly for square full-rank A; b is n x 1.
RatMatrix solve(const IntMatrix& a, const IntMatrix& b);

}  // namespace ldu
