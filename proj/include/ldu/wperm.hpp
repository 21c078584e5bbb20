#pragma once

#include <cstddef>
#include <vector>

#include "ldu/matrix.hpp"
#include "ldu/ring.hpp"

namespace ldu {

// An element of the truncated weighted permutation semigroup S_wp: an n x n
// matrix with at most one nonzero entry in every row and every column.
// Stored as the list of nonzero cells, kept sorted by row.
class WeightedPermMatrix {
public:
    struct Pivot {
        std::size_t row = 0;
        std::size_t col = 0;
        Rat w;
    };

    WeightedPermMatrix() : n_(0) {}
    explicit WeightedPermMatrix(std::size_t n) : n_(n) {}
    WeightedPermMatrix(std::size_t n, std::vector<Pivot> pivots);

    static WeightedPermMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    std::size_t rank() const { return pivots_.size(); }
    const std::vector<Pivot>& pivots() const { return pivots_; }

    bool is_zero() const { return pivots_.empty(); }
    bool is_full_rank() const { return pivots_.size() == n_; }
    bool is_diagonal() const;
    bool is_unit_weighted() const;
    // Every weight lies in the ring (denominator 1).
    bool is_integral() const;

    // Weight at (i, j); zero when the cell is not a pivot.
    Rat at(std::size_t i, std::size_t j) const;

    RatMatrix to_dense() const;

    friend bool operator==(const WeightedPermMatrix& a, const WeightedPermMatrix& b) {
        return a.n_ == b.n_ && a.pivots_.size() == b.pivots_.size() &&
               [&] {
                   for (std::size_t i = 0; i < a.pivots_.size(); ++i) {
                       if (a.pivots_[i].row != b.pivots_[i].row ||
                           a.pivots_[i].col != b.pivots_[i].col ||
                           a.pivots_[i].w != b.pivots_[i].w)
                           return false;
                   }
                   return true;
               }();
    }
    friend bool operator!=(const WeightedPermMatrix& a, const WeightedPermMatrix& b) {
        return !(a == b);
    }

private:
    void validate() const;

    std::size_t n_;
    std::vector<Pivot> pivots_;
};

// Dense-to-sparse conversion; throws NotWeightedPermutation when a row or
// column carries more than one nonzero entry.
WeightedPermMatrix wperm_from_dense(const RatMatrix& m);
WeightedPermMatrix wperm_from_dense(const IntMatrix& m);

// D -> D^(->1): every weight replaced by 1.
WeightedPermMatrix unit_map(const WeightedPermMatrix& d);

// D -> D^Ext: completes D to a full-rank element by pairing its zero rows
// with its zero columns in increasing order, with weight 1.
WeightedPermMatrix extended_map(const WeightedPermMatrix& d);

// Dbar = D^Ext - D, the pivots added by the extension.
WeightedPermMatrix complement(const WeightedPermMatrix& d);

// D -> D^+: transpose with inverted weights. Moore-Penrose inverse in S_wp.
WeightedPermMatrix pseudo_inverse(const WeightedPermMatrix& d);

// Row/column support projectors: I = D D^+, J = D^+ D (0/1 diagonals), and
// their diagonal complements Ibar = E - I, Jbar = E - J.
struct Supports {
    WeightedPermMatrix row;       // I
    WeightedPermMatrix col;       // J
    WeightedPermMatrix row_comp;  // Ibar
    WeightedPermMatrix col_comp;  // Jbar
};
Supports supports(const WeightedPermMatrix& d);

// s must be a 0/1 diagonal; returns lambda*s + (E - s), the full-rank
// diagonal with lambda on the support of s and 1 elsewhere.
WeightedPermMatrix lambda_blend(const WeightedPermMatrix& s, const Rat& lambda);

// Scale every weight by a nonzero factor.
WeightedPermMatrix scale_weights(const WeightedPermMatrix& d, const Rat& factor);

// Union of elements with disjoint row and column supports.
WeightedPermMatrix union_disjoint(const WeightedPermMatrix& a, const WeightedPermMatrix& b);

// Composition in S_wp.
WeightedPermMatrix operator*(const WeightedPermMatrix& a, const WeightedPermMatrix& b);

// Applying a weighted permutation is a row (resp. column) scaling plus
// permutation. The ring overloads require integral weights.
RatMatrix operator*(const WeightedPermMatrix& p, const RatMatrix& m);
RatMatrix operator*(const RatMatrix& m, const WeightedPermMatrix& p);
IntMatrix operator*(const WeightedPermMatrix& p, const IntMatrix& m);
IntMatrix operator*(const IntMatrix& m, const WeightedPermMatrix& p);

// Blocks assembled into a double-size element: tl occupies rows/cols
// [0, h), br occupies [h, 2h), tr and bl the mixed ranges.
WeightedPermMatrix wperm_join4(const WeightedPermMatrix& tl, const WeightedPermMatrix& tr,
                               const WeightedPermMatrix& bl, const WeightedPermMatrix& br);

}  // namespace ldu
