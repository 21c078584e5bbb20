#include "ldu/wperm.hpp"

#include <algorithm>
#include <string>
#include <type_traits>

namespace ldu {

namespace {

void sort_by_row(std::vector<WeightedPermMatrix::Pivot>& pivots) {
    std::sort(pivots.begin(), pivots.end(),
              [](const auto& a, const auto& b) { return a.row < b.row; });
}

}  // namespace

WeightedPermMatrix::WeightedPermMatrix(std::size_t n, std::vector<Pivot> pivots)
    : n_(n), pivots_(std::move(pivots)) {
    sort_by_row(pivots_);
    validate();
}

void WeightedPermMatrix::validate() const {
    std::vector<bool> row_seen(n_, false), col_seen(n_, false);
    for (const Pivot& p : pivots_) {
        if (p.row >= n_ || p.col >= n_)
            throw ShapeMismatch("pivot index out of range");
        if (p.w.is_zero())
            throw NotWeightedPermutation("zero weight at a pivot cell");
        if (row_seen[p.row] || col_seen[p.col])
            throw NotWeightedPermutation("more than one nonzero in a row or column");
        row_seen[p.row] = true;
        col_seen[p.col] = true;
    }
}

WeightedPermMatrix WeightedPermMatrix::identity(std::size_t n) {
    std::vector<Pivot> pivots(n);
    for (std::size_t i = 0; i < n; ++i) pivots[i] = {i, i, Rat(1)};
    return WeightedPermMatrix(n, std::move(pivots));
}

bool WeightedPermMatrix::is_diagonal() const {
    return std::all_of(pivots_.begin(), pivots_.end(),
                       [](const Pivot& p) { return p.row == p.col; });
}

bool WeightedPermMatrix::is_unit_weighted() const {
    return std::all_of(pivots_.begin(), pivots_.end(),
                       [](const Pivot& p) { return p.w == Rat(1); });
}

bool WeightedPermMatrix::is_integral() const {
    return std::all_of(pivots_.begin(), pivots_.end(),
                       [](const Pivot& p) { return p.w.is_integer(); });
}

Rat WeightedPermMatrix::at(std::size_t i, std::size_t j) const {
    for (const Pivot& p : pivots_) {
        if (p.row == i) return p.col == j ? p.w : Rat(0);
        if (p.row > i) break;
    }
    return Rat(0);
}

RatMatrix WeightedPermMatrix::to_dense() const {
    RatMatrix m(n_, n_);
    for (const Pivot& p : pivots_) m(p.row, p.col) = p.w;
    return m;
}

namespace {

template <typename T>
WeightedPermMatrix from_dense_impl(const Matrix<T>& m) {
    if (!m.is_square()) throw NonSquare("weighted permutations are square");
    std::vector<WeightedPermMatrix::Pivot> pivots;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != T(0)) pivots.push_back({i, j, Rat(m(i, j))});
    return WeightedPermMatrix(m.rows(), std::move(pivots));
}

}  // namespace

WeightedPermMatrix wperm_from_dense(const RatMatrix& m) { return from_dense_impl(m); }
WeightedPermMatrix wperm_from_dense(const IntMatrix& m) { return from_dense_impl(m); }

WeightedPermMatrix unit_map(const WeightedPermMatrix& d) {
    std::vector<WeightedPermMatrix::Pivot> pivots = d.pivots();
    for (auto& p : pivots) p.w = Rat(1);
    return WeightedPermMatrix(d.size(), std::move(pivots));
}

WeightedPermMatrix extended_map(const WeightedPermMatrix& d) {
    std::size_t n = d.size();
    std::vector<bool> row_used(n, false), col_used(n, false);
    std::vector<WeightedPermMatrix::Pivot> pivots = d.pivots();
    for (const auto& p : pivots) {
        row_used[p.row] = true;
        col_used[p.col] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!col_used[j]) free_cols.push_back(j);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (!row_used[i]) pivots.push_back({i, free_cols[next++], Rat(1)});
    return WeightedPermMatrix(n, std::move(pivots));
}

WeightedPermMatrix complement(const WeightedPermMatrix& d) {
    std::size_t n = d.size();
    std::vector<bool> row_used(n, false), col_used(n, false);
    for (const auto& p : d.pivots()) {
        row_used[p.row] = true;
        col_used[p.col] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!col_used[j]) free_cols.push_back(j);
    std::vector<WeightedPermMatrix::Pivot> pivots;
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (!row_used[i]) pivots.push_back({i, free_cols[next++], Rat(1)});
    return WeightedPermMatrix(n, std::move(pivots));
}

WeightedPermMatrix pseudo_inverse(const WeightedPermMatrix& d) {
    std::vector<WeightedPermMatrix::Pivot> pivots;
    pivots.reserve(d.rank());
    for (const auto& p : d.pivots()) pivots.push_back({p.col, p.row, p.w.reciprocal()});
    return WeightedPermMatrix(d.size(), std::move(pivots));
}

Supports supports(const WeightedPermMatrix& d) {
    std::size_t n = d.size();
    std::vector<bool> row_used(n, false), col_used(n, false);
    for (const auto& p : d.pivots()) {
        row_used[p.row] = true;
        col_used[p.col] = true;
    }
    auto diag = [n](const std::vector<bool>& mask, bool flip) {
        std::vector<WeightedPermMatrix::Pivot> pivots;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i] != flip) pivots.push_back({i, i, Rat(1)});
        return WeightedPermMatrix(n, std::move(pivots));
    };
    return {diag(row_used, false), diag(col_used, false), diag(row_used, true),
            diag(col_used, true)};
}

WeightedPermMatrix lambda_blend(const WeightedPermMatrix& s, const Rat& lambda) {
    if (lambda.is_zero()) throw ZeroLambda();
    if (!s.is_diagonal() || !s.is_unit_weighted())
        throw NotWeightedPermutation("lambda_blend needs a 0/1 diagonal support");
    std::size_t n = s.size();
    std::vector<bool> on(n, false);
    for (const auto& p : s.pivots()) on[p.row] = true;
    std::vector<WeightedPermMatrix::Pivot> pivots(n);
    for (std::size_t i = 0; i < n; ++i) pivots[i] = {i, i, on[i] ? lambda : Rat(1)};
    return WeightedPermMatrix(n, std::move(pivots));
}

WeightedPermMatrix scale_weights(const WeightedPermMatrix& d, const Rat& factor) {
    if (factor.is_zero()) throw ZeroLambda();
    std::vector<WeightedPermMatrix::Pivot> pivots = d.pivots();
    for (auto& p : pivots) p.w *= factor;
    return WeightedPermMatrix(d.size(), std::move(pivots));
}

WeightedPermMatrix union_disjoint(const WeightedPermMatrix& a, const WeightedPermMatrix& b) {
    if (a.size() != b.size()) throw ShapeMismatch("union of different sizes");
    std::vector<WeightedPermMatrix::Pivot> pivots = a.pivots();
    pivots.insert(pivots.end(), b.pivots().begin(), b.pivots().end());
    return WeightedPermMatrix(a.size(), std::move(pivots));
}

WeightedPermMatrix operator*(const WeightedPermMatrix& a, const WeightedPermMatrix& b) {
    if (a.size() != b.size()) throw ShapeMismatch("composition of different sizes");
    std::vector<const WeightedPermMatrix::Pivot*> by_row(b.size(), nullptr);
    for (const auto& p : b.pivots()) by_row[p.row] = &p;
    std::vector<WeightedPermMatrix::Pivot> pivots;
    for (const auto& p : a.pivots())
        if (const auto* q = by_row[p.col]) pivots.push_back({p.row, q->col, p.w * q->w});
    return WeightedPermMatrix(a.size(), std::move(pivots));
}

namespace {

template <typename T>
Matrix<T> left_apply(const WeightedPermMatrix& p, const Matrix<T>& m) {
    if (p.size() != m.rows()) throw ShapeMismatch("weighted permutation row apply mismatch");
    Matrix<T> r(m.rows(), m.cols());
    for (const auto& piv : p.pivots()) {
        T w;
        if constexpr (std::is_same_v<T, Int>) {
            if (!piv.w.is_integer())
                throw NotIntegral("weight " + piv.w.str() + " is not in the ring");
            w = piv.w.num();
        } else {
            w = piv.w;
        }
        for (std::size_t j = 0; j < m.cols(); ++j) r(piv.row, j) = w * m(piv.col, j);
    }
    return r;
}

template <typename T>
Matrix<T> right_apply(const Matrix<T>& m, const WeightedPermMatrix& p) {
    if (p.size() != m.cols()) throw ShapeMismatch("weighted permutation column apply mismatch");
    Matrix<T> r(m.rows(), m.cols());
    for (const auto& piv : p.pivots()) {
        T w;
        if constexpr (std::is_same_v<T, Int>) {
            if (!piv.w.is_integer())
                throw NotIntegral("weight " + piv.w.str() + " is not in the ring");
            w = piv.w.num();
        } else {
            w = piv.w;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) r(i, piv.col) = m(i, piv.row) * w;
    }
    return r;
}

}  // namespace

RatMatrix operator*(const WeightedPermMatrix& p, const RatMatrix& m) {
    return left_apply<Rat>(p, m);
}
RatMatrix operator*(const RatMatrix& m, const WeightedPermMatrix& p) {
    return right_apply<Rat>(m, p);
}
IntMatrix operator*(const WeightedPermMatrix& p, const IntMatrix& m) {
    return left_apply<Int>(p, m);
}
IntMatrix operator*(const IntMatrix& m, const WeightedPermMatrix& p) {
    return right_apply<Int>(m, p);
}

WeightedPermMatrix wperm_join4(const WeightedPermMatrix& tl, const WeightedPermMatrix& tr,
                               const WeightedPermMatrix& bl, const WeightedPermMatrix& br) {
    std::size_t h = tl.size();
    if (tr.size() != h || bl.size() != h || br.size() != h)
        throw ShapeMismatch("wperm_join4 blocks must share one size");
    std::vector<WeightedPermMatrix::Pivot> pivots;
    for (const auto& p : tl.pivots()) pivots.push_back(p);
    for (const auto& p : tr.pivots()) pivots.push_back({p.row, p.col + h, p.w});
    for (const auto& p : bl.pivots()) pivots.push_back({p.row + h, p.col, p.w});
    for (const auto& p : br.pivots()) pivots.push_back({p.row + h, p.col + h, p.w});
    return WeightedPermMatrix(2 * h, std::move(pivots));
}

}  // namespace ldu
