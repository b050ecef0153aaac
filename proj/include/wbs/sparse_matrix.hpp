#pragma once

#include "wbs/rational.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace wbs {

// Sparse matrix over exact rationals. Zero entries are never stored and all
// indices are 0-based and bounds-checked on insertion.
class SparseExactMatrix {
  public:
    using Index = std::size_t;
    using EntryMap = std::map<std::pair<Index, Index>, Rational>;

    SparseExactMatrix() : rows_(0), cols_(0) {}
    SparseExactMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {}

    Index n_rows() const { return rows_; }
    Index n_cols() const { return cols_; }
    const EntryMap& entries() const { return entries_; }
    Index n_entries() const { return entries_.size(); }

    // Sets entry (r, c); storing zero removes the entry.
    void set(Index r, Index c, const Rational& value);
    // Adds value to entry (r, c), dropping it if the sum is zero.
    void add(Index r, Index c, const Rational& value);

    Rational get(Index r, Index c) const;

    bool is_zero() const { return entries_.empty(); }

    bool operator==(const SparseExactMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }
    bool operator!=(const SparseExactMatrix& other) const { return !(*this == other); }

    SparseExactMatrix operator-() const;
    SparseExactMatrix operator+(const SparseExactMatrix& other) const;
    SparseExactMatrix operator-(const SparseExactMatrix& other) const;
    SparseExactMatrix scaled(const Rational& factor) const;

    // Rows of an endomorphism matrix flattened row-major: entry (r, c) lands
    // at position r * n_cols + c. Shared convention for every module that
    // vectorizes operators.
    std::vector<std::pair<Index, Rational>> flatten_row_major() const;

    static SparseExactMatrix identity(Index n);

  private:
    void check_bounds(Index r, Index c) const;

    Index rows_;
    Index cols_;
    EntryMap entries_;
};

// Exact product. Throws std::invalid_argument on inner-dimension mismatch.
SparseExactMatrix mat_mul(const SparseExactMatrix& a, const SparseExactMatrix& b);

}  // namespace wbs
