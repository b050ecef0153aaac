#include "wbs/sparse_matrix.hpp"

#include <stdexcept>

namespace wbs {

void SparseExactMatrix::check_bounds(Index r, Index c) const {
    if (r >= rows_ || c >= cols_) {
        throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                                ") out of bounds for " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
    }
}

void SparseExactMatrix::set(Index r, Index c, const Rational& value) {
    check_bounds(r, c);
    if (value == 0) {
        entries_.erase({r, c});
    } else {
        entries_[{r, c}] = value;
    }
}

void SparseExactMatrix::add(Index r, Index c, const Rational& value) {
    check_bounds(r, c);
    if (value == 0) return;
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        entries_.emplace(std::make_pair(r, c), value);
        return;
    }
    it->second += value;
    if (it->second == 0) entries_.erase(it);
}

Rational SparseExactMatrix::get(Index r, Index c) const {
    check_bounds(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

SparseExactMatrix SparseExactMatrix::operator-() const {
    SparseExactMatrix out(rows_, cols_);
    for (const auto& [rc, v] : entries_) out.entries_.emplace(rc, -v);
    return out;
}

SparseExactMatrix SparseExactMatrix::operator+(const SparseExactMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix shape mismatch in addition");
    }
    SparseExactMatrix out = *this;
    for (const auto& [rc, v] : other.entries_) out.add(rc.first, rc.second, v);
    return out;
}

SparseExactMatrix SparseExactMatrix::operator-(const SparseExactMatrix& other) const {
    return *this + (-other);
}

SparseExactMatrix SparseExactMatrix::scaled(const Rational& factor) const {
    SparseExactMatrix out(rows_, cols_);
    if (factor == 0) return out;
    for (const auto& [rc, v] : entries_) out.entries_.emplace(rc, v * factor);
    return out;
}

std::vector<std::pair<SparseExactMatrix::Index, Rational>>
SparseExactMatrix::flatten_row_major() const {
    std::vector<std::pair<Index, Rational>> flat;
    flat.reserve(entries_.size());
    for (const auto& [rc, v] : entries_) flat.emplace_back(rc.first * cols_ + rc.second, v);
    return flat;
}

SparseExactMatrix SparseExactMatrix::identity(Index n) {
    SparseExactMatrix out(n, n);
    for (Index i = 0; i < n; ++i) out.entries_.emplace(std::make_pair(i, i), Rational(1));
    return out;
}

SparseExactMatrix mat_mul(const SparseExactMatrix& a, const SparseExactMatrix& b) {
    if (a.n_cols() != b.n_rows()) {
        throw std::invalid_argument("mat_mul dimension mismatch: " + std::to_string(a.n_cols()) +
                                    " vs " + std::to_string(b.n_rows()));
    }
    // Row-major pass over a, scattering each a(i,k) against row k of b.
    std::vector<std::vector<std::pair<SparseExactMatrix::Index, const Rational*>>> b_rows(
        b.n_rows());
    for (const auto& [rc, v] : b.entries()) b_rows[rc.first].emplace_back(rc.second, &v);

    SparseExactMatrix out(a.n_rows(), b.n_cols());
    for (const auto& [rc, va] : a.entries()) {
        for (const auto& [j, vb] : b_rows[rc.second]) {
            out.add(rc.first, j, va * (*vb));
        }
    }
    return out;
}

}  // namespace wbs
