#include "ldu/oracle.hpp"

#include <string>
#include <type_traits>
#include <utility>

namespace ldu {

namespace {

template <typename T>
T exact_quot(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, Int>) {
        return exact_div(a, b);
    } else {
        return a / b;
    }
}

// Expansion along the top row over the active column set.
template <typename T>
T det_cofactor(const Matrix<T>& m, std::size_t row, std::vector<std::size_t>& cols) {
    if (cols.empty()) return T(1);
    if (cols.size() == 1) return m(row, cols[0]);
    T acc(0);
    int sign = 1;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        T pivot = m(row, cols[idx]);
        if (pivot != T(0)) {
            std::size_t saved = cols[idx];
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
            T sub = det_cofactor(m, row + 1, cols);
            cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), saved);
            T term = pivot * sub;
            if (sign > 0)
                acc += term;
            else
                acc -= term;
        }
        sign = -sign;
    }
    return acc;
}

template <typename T>
T det_bareiss(Matrix<T> m) {
    std::size_t n = m.rows();
    int sign = 1;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == T(0)) ++r;
            if (r == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = exact_quot(num, prev);
            }
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return sign > 0 ? d : -d;
}

template <typename T>
T det_impl(const Matrix<T>& m) {
    if (!m.is_square()) throw NonSquare("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n <= 8) {
        std::vector<std::size_t> cols(n);
        for (std::size_t j = 0; j < n; ++j) cols[j] = j;
        return det_cofactor(m, 0, cols);
    }
    return det_bareiss(m);
}

template <typename T>
Matrix<T> adjugate_impl(const Matrix<T>& m) {
    if (!m.is_square()) throw NonSquare("adjugate of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return m;
    Matrix<T> adj(n, n);
    Matrix<T> minor(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc) = m(r, c);
                    ++cc;
                }
                ++rr;
            }
            T cof = det_impl(minor);
            adj(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    }
    return adj;
}

}  // namespace

Int det_naive(const IntMatrix& m) { return det_impl(m); }
Rat det_naive(const RatMatrix& m) { return det_impl(m); }

IntMatrix adjugate(const IntMatrix& m) { return adjugate_impl(m); }
RatMatrix adjugate(const RatMatrix& m) { return adjugate_impl(m); }

Int surround_det(const IntMatrix& a, const IntMatrix& r, const IntMatrix& c, const Int& w) {
    if (!a.is_square()) throw NonSquare("surround_det needs a square core");
    std::size_t n = a.rows();
    if (r.rows() != 1 || r.cols() != n || c.rows() != n || c.cols() != 1)
        throw ShapeMismatch("surround_det border shapes must be 1 x n and n x 1");
    Int result = det_naive(a) * w;
    if (n > 0) {
        IntMatrix rac = r * adjugate(a) * c;
        result -= rac(0, 0);
    }
    return result;
}

IntMatrix surround_matrix(const IntMatrix& m, std::size_t k) {
    if (!m.is_square()) throw NonSquare("surround_matrix needs a square matrix");
    std::size_t n = m.rows();
    if (k > n) throw ShapeMismatch("leading block exceeds the matrix");
    if (k == 0) return m;
    IntMatrix ak = m.block(0, 0, k, k);
    Int det_k = det_naive(ak);
    if (det_k == 0)
        throw SingularLeadingBlock("leading " + std::to_string(k) + " x " +
                                   std::to_string(k) + " minor is zero");
    IntMatrix b = m.block(0, k, k, n - k);
    IntMatrix c = m.block(k, 0, n - k, k);
    IntMatrix d = m.block(k, k, n - k, n - k);
    return det_k * d - c * adjugate(ak) * b;
}

IntMatrix descent_matrix(const IntMatrix& a, const Int& det_k, const Int& det_s,
                         std::size_t t) {
    if (!a.is_square()) throw NonSquare("descent_matrix needs a square matrix");
    std::size_t n = a.rows();
    if (t == 0 || t > n) throw ShapeMismatch("descent block size out of range");
    IntMatrix a1 = a.block(0, 0, t, t);
    IntMatrix a2 = a.block(0, t, t, n - t);
    IntMatrix a3 = a.block(t, 0, n - t, t);
    IntMatrix a4 = a.block(t, t, n - t, n - t);
    IntMatrix inner = a3 * adjugate(a1) * a2;
    IntMatrix c1 = scalar_exact_div(inner, pow(det_k, static_cast<unsigned>(t - 1)));
    return scalar_exact_div(det_s * a4 - c1, det_k);
}

Int bordered_minor(const IntMatrix& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size())
        throw ShapeMismatch("bordered_minor needs equally many rows and columns");
    IntMatrix sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
    return det_naive(sub);
}

std::size_t oracle_rank(const IntMatrix& m) {
    RatMatrix a = promote(m);
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(p, j));
        Rat inv = a(row, col).reciprocal();
        for (std::size_t i = row + 1; i < a.rows(); ++i) {
            if (a(i, col).is_zero()) continue;
            Rat f = a(i, col) * inv;
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

Report check_nested_minors(const IntMatrix& a, const std::vector<PivotInfo>& pivots,
                           const Int& alpha) {
    Report report;
    std::size_t r = pivots.size();
    std::vector<std::size_t> rows, cols;
    std::vector<Int> dets;
    dets.push_back(alpha);
    for (const PivotInfo& p : pivots) {
        rows.push_back(p.row);
        cols.push_back(p.col);
        dets.push_back(p.det);
    }

    for (std::size_t i = 1; i <= r; ++i) {
        std::vector<std::size_t> rs(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(i));
        std::vector<std::size_t> cs(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(i));
        Int minor = bordered_minor(a, rs, cs);
        bool ok = minor == dets[i];
        report.push_back({"nested_minor_" + std::to_string(i), ok,
                          ok ? "" : "minor " + to_string(minor) + " != det " +
                                        to_string(dets[i])});
    }

    for (std::size_t i = 0; i < r; ++i) {
        if (dets[i] == 0) continue;
        for (std::size_t j = i + 2; j <= r; ++j) {
            std::size_t t = j - i;
            IntMatrix sub(t, t);
            std::vector<std::size_t> rs(rows.begin(),
                                        rows.begin() + static_cast<std::ptrdiff_t>(i));
            std::vector<std::size_t> cs(cols.begin(),
                                        cols.begin() + static_cast<std::ptrdiff_t>(i));
            rs.push_back(0);
            cs.push_back(0);
            for (std::size_t x = 0; x < t; ++x) {
                rs.back() = rows[i + x];
                for (std::size_t y = 0; y < t; ++y) {
                    cs.back() = cols[i + y];
                    sub(x, y) = bordered_minor(a, rs, cs);
                }
            }
            Int lhs = det_naive(sub);
            Int rhs = dets[j] * pow(dets[i], static_cast<unsigned>(t - 1));
            bool ok = lhs == rhs;
            report.push_back({"sylvester_" + std::to_string(i) + "_" + std::to_string(j), ok,
                              ok ? "" : to_string(lhs) + " != " + to_string(rhs)});
        }
    }
    return report;
}

}  // namespace ldu
