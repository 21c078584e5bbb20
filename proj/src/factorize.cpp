#include "ldu/factorize.hpp"

#include <future>
#include <string>
#include <utility>

#include "ldu/counters.hpp"
#include "ldu/oracle.hpp"

namespace ldu {

namespace {

struct SlotGuard {
    bool held = false;
    ~SlotGuard() {
        if (held) detail::release_thread_slot();
    }
};

// Interior result of one recursive call. M and W live over the quotient
// field: for a nonunit alpha the pivot rows of M and pivot columns of W
// carry alpha-power denominators, and only the top-level call (alpha = 1)
// is guaranteed to land back in the ring.
struct RecResult {
    Int alpha_r;
    IntMatrix L, U;
    RatMatrix M, W;
    WeightedPermMatrix D, Dhat;
    std::vector<PivotInfo> pivots;
};

RecResult base_zero(std::size_t n, const Int& alpha) {
    RecResult f;
    f.alpha_r = alpha;
    f.L = IntMatrix::identity(n);
    f.U = IntMatrix::identity(n);
    f.M = promote(alpha * IntMatrix::identity(n));
    f.W = f.M;
    f.D = WeightedPermMatrix(n);
    f.Dhat = scale_weights(WeightedPermMatrix::identity(n), Rat(Int(1), alpha));
    return f;
}

RecResult base_scalar(const Int& a, const Int& alpha) {
    RecResult f;
    f.alpha_r = a;
    f.L = f.U = IntMatrix(1, 1, {a});
    f.M = f.W = promote(f.L);
    f.D = WeightedPermMatrix(1, {{0, 0, Rat(Int(1), alpha * a)}});
    f.Dhat = WeightedPermMatrix(1, {{0, 0, Rat(Int(1), a * a)}});
    f.pivots = {{0, 0, a}};
    return f;
}

RecResult recurse(const IntMatrix& a, const Int& alpha,
                  RecursionIntermediates* top) {
    std::size_t n = a.rows();
    if (a.is_zero()) return base_zero(n, alpha);
    if (n == 1) return base_scalar(a(0, 0), alpha);

    std::size_t h = n / 2;
    BlockQuad<Int> q = split4(a);

    // (3.1) top-left block
    RecResult f11 = recurse(q.a11, alpha, nullptr);
    const Int& ak = f11.alpha_r;

    RatMatrix a12_0 = f11.M * q.a12;
    RatMatrix a21_0 = q.a21 * f11.W;

    // alpha_k * Dhat11 = alpha*D11 + Dbar11 has fractional weights on the
    // pivot rows, so A'_12 and A'_21 live in the field of quotients.
    WeightedPermMatrix dhat11_ak = scale_weights(f11.Dhat, Rat(ak));
    RatMatrix a12_1 = dhat11_ak * a12_0;
    RatMatrix a21_1 = a21_0 * dhat11_ak;

    // Dbar11 keeps only the kernel rows (columns) of M11 (W11), which stay
    // over the ring, so the inputs of the half-size recursions demote.
    WeightedPermMatrix dbar11 = complement(f11.D);
    IntMatrix a12_2 = demote(Rat(Int(1), alpha) * (dbar11 * a12_0));
    IntMatrix a21_2 = demote(Rat(Int(1), alpha) * (a21_0 * dbar11));

    // (3.2)/(3.3) the two independent half-size recursions
    RecResult f21, f12;
    SlotGuard slot;
    if (h >= 8) slot.held = detail::acquire_thread_slot();
    if (slot.held) {
        auto fut = std::async(std::launch::async,
                              [&] { return recurse(a21_2, ak, nullptr); });
        f12 = recurse(a12_2, ak, nullptr);
        f21 = fut.get();
    } else {
        f21 = recurse(a21_2, ak, nullptr);
        f12 = recurse(a12_2, ak, nullptr);
    }
    const Int& al = f21.alpha_r;
    const Int& am = f12.alpha_r;

    Rat lambda(al, ak);
    Int as = exact_div(al * am, ak);

    WeightedPermMatrix dplus11 = pseudo_inverse(f11.D);
    RatMatrix a22_0 = (a21_1 * dplus11) * a12_1;
    Int akk = alpha * ak * ak;
    IntMatrix a22_1 =
        demote(Rat(Int(1), alpha * ak) * (promote(akk * q.a22) - a22_0));

    WeightedPermMatrix dbar21 = complement(f21.D);
    WeightedPermMatrix dbar12 = complement(f12.D);
    RatMatrix m21_a22_1 = f21.M * a22_1;
    RatMatrix m21_a22_1_w12 = m21_a22_1 * f12.W;
    RatMatrix dbar_m = dbar21 * m21_a22_1_w12;
    RatMatrix a22_2 = dbar_m * dbar12;
    IntMatrix a22_3 = demote(Rat(Int(1), ak * ak * alpha) * a22_2);

    // (3.4) trailing block
    RecResult f22 = recurse(a22_3, as, nullptr);
    const Int& ar = f22.alpha_r;

    Supports s11 = supports(f11.D);
    Supports s21 = supports(f21.D);
    Supports s12 = supports(f12.D);

    Rat lambda_inv = lambda.reciprocal();
    WeightedPermMatrix ilam12 = lambda_blend(s12.row, lambda);
    WeightedPermMatrix jlam12 = lambda_blend(s12.col, lambda);
    WeightedPermMatrix ilaminv12 = lambda_blend(s12.row, lambda_inv);
    WeightedPermMatrix jlaminv12 = lambda_blend(s12.col, lambda_inv);

    // Blocks of L and U are matrices of bordering minors, so the sums demote
    // even though the individual terms are field values.
    IntMatrix u2 = demote(Rat(Int(1), ak) * (s11.col * a12_0) +
                          Rat(Int(1), al * alpha) * (s21.col * m21_a22_1));
    IntMatrix l3 = demote(Rat(Int(1), ak) * (a21_0 * s11.row) +
                          Rat(Int(1), am * ak * alpha) * (dbar_m * s12.row));

    RatMatrix l_tilde12 = promote(f12.L) * ilam12;
    RatMatrix u_tilde12 = jlam12 * promote(f12.U);

    IntMatrix l_tl = demote(promote(f11.L) * l_tilde12);
    IntMatrix u_br = demote(promote(f22.U) * u_tilde12);
    IntMatrix big_l = join4(l_tl, IntMatrix(h, h), l3, f21.L * f22.L);
    IntMatrix big_u = join4(f21.U * f11.U, u2, IntMatrix(h, h), u_br);

    WeightedPermMatrix d_tilde12 = scale_weights(f12.D, lambda_inv * lambda_inv);
    WeightedPermMatrix big_d = wperm_join4(f11.D, d_tilde12, f21.D, f22.D);

    std::vector<PivotInfo> pivots = f11.pivots;
    for (const PivotInfo& p : f21.pivots) pivots.push_back({p.row + h, p.col, p.det});
    for (const PivotInfo& p : f12.pivots)
        pivots.push_back({p.row, p.col + h, exact_div(al * p.det, ak)});
    for (const PivotInfo& p : f22.pivots) pivots.push_back({p.row + h, p.col + h, p.det});

    WeightedPermMatrix big_dhat = make_dhat(big_d, alpha, ar);

    // M = Dhat^-1 * [[m_tl, 0], [-m_br*L3*m_tl, m_br]]
    RatMatrix m_tl = ((ilaminv12 * f12.Dhat) * f12.M) * (f11.Dhat * f11.M);
    RatMatrix m_br = (f22.Dhat * f22.M) * (f21.Dhat * f21.M);
    RatMatrix m_bl = -(m_br * (promote(l3) * m_tl));
    RatMatrix big_m =
        pseudo_inverse(big_dhat) * join4(m_tl, RatMatrix(h, h), m_bl, m_br);

    // W = [[w_tl, -w_tl*U2*w_br], [0, w_br]] * Dhat^-1
    RatMatrix w_tl = (f11.W * f11.Dhat) * (f21.W * f21.Dhat);
    RatMatrix w_br = (f12.W * (f12.Dhat * jlaminv12)) * (f22.W * f22.Dhat);
    RatMatrix w_tr = -((w_tl * promote(u2)) * w_br);
    RatMatrix big_w =
        join4(w_tl, w_tr, RatMatrix(h, h), w_br) * pseudo_inverse(big_dhat);

    if (top) {
        top->populated = true;
        top->alpha_k = ak;
        top->alpha_l = al;
        top->alpha_m = am;
        top->alpha_s = as;
        top->lambda = lambda;
        top->a12_0 = a12_0;
        top->a21_0 = a21_0;
        top->a12_1 = a12_1;
        top->a21_1 = a21_1;
        top->a12_2 = a12_2;
        top->a21_2 = a21_2;
        top->a22_0 = a22_0;
        top->a22_1 = a22_1;
        top->a22_2 = (f21.Dhat * m21_a22_1_w12) * (ilaminv12 * f12.Dhat);
        top->a22_3 = a22_3;
        top->l_tilde12 = l_tilde12;
        top->u_tilde12 = u_tilde12;
        top->d_tilde12 = d_tilde12;
        top->dhat_tilde12 = scale_weights(ilaminv12 * f12.Dhat, lambda_inv);
        top->m_tilde12 = lambda * f12.M;
        top->w_tilde12 = lambda * f12.W;
        top->i_lambda12 = ilam12;
        top->j_lambda12 = jlam12;
        top->u2 = u2;
        top->l3 = l3;
    }

    RecResult f;
    f.alpha_r = ar;
    f.L = std::move(big_l);
    f.U = std::move(big_u);
    f.M = std::move(big_m);
    f.W = std::move(big_w);
    f.D = std::move(big_d);
    f.Dhat = std::move(big_dhat);
    f.pivots = std::move(pivots);
    return f;
}

}  // namespace

WeightedPermMatrix make_dhat(const WeightedPermMatrix& d, const Int& alpha,
                             const Int& alpha_r) {
    return union_disjoint(scale_weights(d, Rat(alpha, alpha_r)),
                          scale_weights(complement(d), Rat(Int(1), alpha_r)));
}

LduFactorization ldu_recursive(const IntMatrix& a, const Int& alpha,
                               RecursionIntermediates* top) {
    if (!a.is_square()) throw NonSquare("ldu_recursive needs a square matrix");
    if (!is_pow2(a.rows())) throw NotPowerOfTwo("ldu_recursive needs a power-of-two size");
    if (alpha == 0) throw DivisionByZero("alpha must be nonzero");
    RecResult r = recurse(a, alpha, top);
    LduFactorization f;
    f.alpha = alpha;
    f.alpha_r = std::move(r.alpha_r);
    f.L = std::move(r.L);
    f.U = std::move(r.U);
    f.M = demote(r.M);
    f.W = demote(r.W);
    f.D = std::move(r.D);
    f.Dhat = std::move(r.Dhat);
    f.pivots = std::move(r.pivots);
    f.original_rows = f.original_cols = a.rows();
    return f;
}

LduFactorization factorize(const IntMatrix& a, const Int& alpha) {
    IntMatrix padded = pad_pow2(a);
    LduFactorization f = ldu_recursive(padded, alpha, nullptr);
    f.original_rows = a.rows();
    f.original_cols = a.cols();
    return f;
}

std::size_t rank(const IntMatrix& a) { return factorize(a).rank(); }

Int determinant(const IntMatrix& a) {
    if (!a.is_square()) throw NonSquare("determinant of a non-square matrix");
    LduFactorization f = factorize(a);
    if (f.rank() < a.rows()) return Int(0);
    std::vector<std::size_t> rows, cols;
    for (const PivotInfo& p : f.pivots) {
        rows.push_back(p.row);
        cols.push_back(p.col);
    }
    int sign = permutation_sign(rows) * permutation_sign(cols);
    return sign > 0 ? f.alpha_r : Int(-f.alpha_r);
}

RatMatrix inverse(const IntMatrix& a) {
    if (!a.is_square()) throw NonSquare("inverse of a non-square matrix");
    std::size_t n = a.rows();
    std::size_t padded = next_pow2(std::max(n, std::size_t{1}));
    // Identity in the padding block keeps the padded matrix invertible; the
    // leading block of its inverse is the inverse of A.
    IntMatrix ap(padded, padded);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ap(i, j) = a(i, j);
    for (std::size_t i = n; i < padded; ++i) ap(i, i) = 1;
    LduFactorization f = ldu_recursive(ap, Int(1), nullptr);
    if (f.rank() < padded) throw SingularMatrix("matrix is rank deficient");
    RatMatrix inv = ((promote(f.W) * f.Dhat) * pseudo_inverse(f.D)) *
                    (f.Dhat * promote(f.M));
    return trim(inv, n, n);
}

RatMatrix solve(const IntMatrix& a, const IntMatrix& b) {
    if (b.cols() != 1 || b.rows() != a.rows())
        throw ShapeMismatch("right-hand side must be a column of matching length");
    return inverse(a) * promote(b);
}

namespace {

void add_check(Report& report, const std::string& name, bool pass,
               const std::string& detail = "") {
    report.push_back({name, pass, pass ? "" : detail});
}

}  // namespace

Report verify_factorization(const IntMatrix& a, const LduFactorization& f, bool deep) {
    Report report;
    std::size_t n = f.size();

    IntMatrix apad = pad_pow2(a);
    bool shapes_ok = f.L.rows() == n && f.L.cols() == n && f.U.rows() == n &&
                     f.U.cols() == n && f.M.rows() == n && f.M.cols() == n &&
                     f.W.rows() == n && f.W.cols() == n && f.D.size() == n &&
                     f.Dhat.size() == n && apad.rows() == n && apad.cols() == n;
    add_check(report, "shape_agreement", shapes_ok,
              "factor shapes disagree with the padded input");
    if (!shapes_ok) return report;

    RatMatrix left = Rat(f.alpha) * ((promote(f.L) * f.D) * promote(f.U));
    add_check(report, "product_identity", left == promote(apad),
              "alpha*L*D*U differs from A");

    RatMatrix ident = RatMatrix::identity(n);
    add_check(report, "left_inverse_identity",
              (promote(f.L) * f.Dhat) * promote(f.M) == ident, "L*Dhat*M is not I");
    add_check(report, "right_inverse_identity",
              (promote(f.W) * f.Dhat) * promote(f.U) == ident, "W*Dhat*U is not I");

    bool lower = true, upper = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (f.L(i, j) != 0) lower = false;
            if (f.U(j, i) != 0) upper = false;
        }
    add_check(report, "lower_triangular_L", lower, "L has nonzeros above the diagonal");
    add_check(report, "upper_triangular_U", upper, "U has nonzeros below the diagonal");

    Supports s = supports(f.D);
    RatMatrix ibar = s.row_comp.to_dense();
    RatMatrix jbar = s.col_comp.to_dense();
    add_check(report, "l_row_complement", promote(f.L) * s.row_comp == ibar,
              "L*Ibar differs from Ibar");
    add_check(report, "u_col_complement", jbar * promote(f.U) == jbar,
              "Jbar*U differs from Jbar");

    bool rank_ok = f.D.rank() == f.pivots.size();
    add_check(report, "rank_consistency", rank_ok, "rank(D) != |pivots|");

    bool weights_ok = rank_ok;
    if (rank_ok) {
        Int prev = f.alpha;
        for (const PivotInfo& p : f.pivots) {
            if (p.det == 0 || f.D.at(p.row, p.col) != Rat(Int(1), prev * p.det)) {
                weights_ok = false;
                break;
            }
            prev = p.det;
        }
    }
    add_check(report, "d_weight_law", weights_ok,
              "a D weight differs from 1/(det_{i-1}*det_i)");

    add_check(report, "dhat_relation", f.Dhat == make_dhat(f.D, f.alpha, f.alpha_r),
              "Dhat != alpha_r^-1*(alpha*D + Dbar)");

    bool diag_ok = true;
    {
        std::vector<bool> prow(n, false), pcol(n, false);
        for (const PivotInfo& p : f.pivots) {
            prow[p.row] = true;
            pcol[p.col] = true;
            if (f.L(p.row, p.row) != p.det || f.U(p.col, p.col) != p.det) diag_ok = false;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!prow[i] && f.L(i, i) != 1) diag_ok = false;
            if (!pcol[i] && f.U(i, i) != 1) diag_ok = false;
        }
    }
    add_check(report, "diagonal_law", diag_ok,
              "diagonal entries disagree with the pivot minors");

    bool ar_ok = f.pivots.empty() ? f.alpha_r == f.alpha : f.alpha_r == f.pivots.back().det;
    add_check(report, "alpha_r_consistency", ar_ok,
              "alpha_r is not the last nested minor");

    if (deep && n <= 8) {
        Report minors = check_nested_minors(apad, f.pivots, f.alpha);
        report.insert(report.end(), minors.begin(), minors.end());
        add_check(report, "oracle_rank", oracle_rank(apad) == f.pivots.size(),
                  "elimination rank disagrees with |pivots|");
    }
    return report;
}

}  // namespace ldu
