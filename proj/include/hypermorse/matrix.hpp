#pragma once

#include "hypermorse/ring.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hypermorse {

/// Dense matrix of exact ring elements, row-major. Entries are kept
/// normalized for the matrix's ring by every mutating operation.
class ExactMatrix {
public:
    ExactMatrix(Ring ring, std::size_t rows, std::size_t cols);

    static ExactMatrix identity(Ring ring, std::size_t n);
    /// Builds from nested rows of rationals; every value is mapped into `ring`.
    static ExactMatrix from_rows(Ring ring, const std::vector<std::vector<Scalar>>& rows);
    /// Columns given as vectors of equal length `rows`.
    static ExactMatrix from_columns(Ring ring, std::size_t rows, const std::vector<std::vector<Scalar>>& cols);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Scalar& value) { data_[r * cols_ + c] = ring_.normalize(value); }

    std::vector<Scalar> column(std::size_t c) const;
    std::vector<Scalar> row(std::size_t r) const;

    bool is_zero() const;
    ExactMatrix transpose() const;
    ExactMatrix select_rows(std::span<const std::size_t> indices) const;
    ExactMatrix select_cols(std::span<const std::size_t> indices) const;
    /// Matrix-vector product.
    std::vector<Scalar> apply(std::span<const Scalar> v) const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

    /// Debug dump: "rows cols" header, then one line per row of exact
    /// entries as decimal strings separated by single spaces.
    std::string dump() const;

private:
    Ring ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

/// Horizontal concatenation [a | b]; both must have the same row count.
ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b);

/// Determinant of a square matrix over Z or Q (fraction-free elimination).
Scalar determinant(const ExactMatrix& m);

}  // namespace hypermorse
