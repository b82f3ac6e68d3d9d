#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cts/scalar.hpp"

namespace cts {

// Sparse vector over GF(2)(a): index -> nonzero coefficient.
using SparseVec = std::map<int, Scalar>;

void vec_add_scaled(SparseVec& dst, const SparseVec& src, Scalar c);  // c by value: dst entries may alias the coefficient
SparseVec vec_scaled(const SparseVec& v, const Scalar& c);
bool vec_is_zero(const SparseVec& v);

// Sparse matrix over GF(2)(a); no stored zero entries.
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Scalar& at(int r, int c) const;
    void set(int r, int c, const Scalar& v);
    void add(int r, int c, const Scalar& v);
    const SparseVec& row(int r) const { return data_[static_cast<std::size_t>(r)]; }
    SparseVec& row_mut(int r) { return data_[static_cast<std::size_t>(r)]; }
    void append_row(const SparseVec& v);
    int nnz() const;

    ExactMatrix transposed() const;
    friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
    bool operator==(const ExactMatrix& y) const { return rows_ == y.rows_ && cols_ == y.cols_ && data_ == y.data_; }

  private:
    int rows_, cols_;
    std::vector<SparseVec> data_;
};

struct RrefResult {
    ExactMatrix reduced;          // reduced row echelon form, zero rows dropped
    std::vector<int> pivot_cols;  // ascending; pivots chosen left-to-right, smallest row index first
    int rank = 0;
};

RrefResult rref(const ExactMatrix& m);

// Kernel of m (solutions of m x = 0); basis vectors are the rows of the
// result, one per free column in ascending column order.
ExactMatrix kernel(const ExactMatrix& m);

// Column space of m: the original columns at pivot positions, returned as
// rows of the result (each of length m.rows()).
ExactMatrix image(const ExactMatrix& m);

// Solve m x = rhs for each column of rhs; free variables are set to zero
// (leftmost-pivot particular solution). Throws NoSolution when inconsistent.
ExactMatrix solve(const ExactMatrix& m, const ExactMatrix& rhs);

// Representatives (standard basis vectors) spanning ambient/rowspace(span).
ExactMatrix quotient_basis(const ExactMatrix& span, int ambient_dim);

// Intersection of the row spaces of x and y, echelonized.
ExactMatrix intersect(const ExactMatrix& x, const ExactMatrix& y);

// Incremental echelon span for membership tests and quotient bookkeeping.
class EchelonSpan {
  public:
    explicit EchelonSpan(int ambient = 0) : ambient_(ambient) {}

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return ambient_; }

    // Reduce v against the span; returns the residual (empty if v is inside).
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return vec_is_zero(reduce(v)); }

    // Insert v if independent; returns true when the span grew.
    bool insert(const SparseVec& v);

    // Express v in terms of the inserted generators; nullopt if outside.
    std::optional<SparseVec> coordinates(const SparseVec& v) const;

    const std::vector<SparseVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    ExactMatrix to_matrix() const;

  private:
    int ambient_;
    std::vector<SparseVec> rows_;      // echelonized, unit pivots
    std::vector<int> pivots_;          // pivot column per row
    std::vector<SparseVec> history_;   // generator coordinates per row
};

}  // namespace cts
