#pragma once

#include "gcdheight/rational.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace gcdheight {

/// Dense matrix of exact rationals, row-major.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> data);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rat> multiply(const std::vector<Rat>& v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// Rank by fraction-free (Bareiss) elimination. Rows are first scaled to
/// integers; every intermediate division is exact.
std::size_t rank(const ExactMatrix& m);

/// Basis of the right kernel {v : M v = 0}, one vector per free column of the
/// echelon form, each scaled to coprime integer entries. Empty iff M has full
/// column rank.
std::vector<std::vector<Rat>> nullspace(const ExactMatrix& m);

/// Incremental row echelon form over Z for sparse vectors. Each stored row is
/// primitive (content 1) with a positive pivot, keyed by its pivot index
/// (the smallest index with a nonzero entry). Reduction cross-multiplies and
/// divides out the content, so entries stay integral.
class SparseEchelon {
public:
    using Vec = std::vector<std::pair<std::size_t, BigInt>>;  // sorted by index, no zeros

    /// Reduces v against the stored rows; stores it and returns true when a
    /// nonzero remainder is left.
    bool insert(Vec v);

    std::size_t rank() const noexcept { return rows_.size(); }
    const std::map<std::size_t, Vec>& rows() const noexcept { return rows_; }

    /// The stored row with the given pivot, with every entry in another pivot
    /// column eliminated (the corresponding row of the reduced echelon form),
    /// scaled to be primitive with a positive pivot.
    Vec fully_reduced(std::size_t pivot) const;

private:
    void reduce_at(Vec& v, std::size_t position_hint, const Vec& row) const;

    std::map<std::size_t, Vec> rows_;
};

/// Rank via SparseEchelon on the rows of m; an independent route to rank().
std::size_t rank_sparse(const ExactMatrix& m);

}  // namespace gcdheight
