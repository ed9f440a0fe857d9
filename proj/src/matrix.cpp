#include "hypermorse/matrix.hpp"

#include "hypermorse/errors.hpp"

#include <sstream>

namespace hypermorse {

ExactMatrix::ExactMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(Ring ring, std::size_t n) {
    ExactMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(Ring ring, const std::vector<std::vector<Scalar>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(ring, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ValidationError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = ring.from_rational(rows[r][c]);
    }
    return m;
}

ExactMatrix ExactMatrix::from_columns(Ring ring, std::size_t rows, const std::vector<std::vector<Scalar>>& cols) {
    ExactMatrix m(ring, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw ValidationError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.data_[r * cols.size() + c] = ring.from_rational(cols[c][r]);
    }
    return m;
}

std::vector<Scalar> ExactMatrix::column(std::size_t c) const {
    std::vector<Scalar> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = data_[r * cols_ + c];
    return out;
}

std::vector<Scalar> ExactMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(ring_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
    return t;
}

ExactMatrix ExactMatrix::select_rows(std::span<const std::size_t> indices) const {
    ExactMatrix m(ring_, indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) m.data_[i * cols_ + c] = data_[indices[i] * cols_ + c];
    return m;
}

ExactMatrix ExactMatrix::select_cols(std::span<const std::size_t> indices) const {
    ExactMatrix m(ring_, rows_, indices.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < indices.size(); ++i)
            m.data_[r * indices.size() + i] = data_[r * cols_ + indices[i]];
    return m;
}

std::vector<Scalar> ExactMatrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw InternalError("matrix-vector dimension mismatch");
    std::vector<Scalar> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Scalar acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& a = data_[r * cols_ + c];
            if (a != 0 && v[c] != 0) acc += a * v[c];
        }
        out[r] = ring_.normalize(acc);
    }
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_ || !(a.ring_ == b.ring_)) throw InternalError("matrix product shape or ring mismatch");
    ExactMatrix out(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a.data_[i * a.cols_ + k];
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b.data_[k * b.cols_ + j];
                if (y != 0) out.data_[i * b.cols_ + j] += x * y;
            }
        }
    }
    if (a.ring_.kind() == Ring::Kind::prime_field)
        for (auto& x : out.data_) x = a.ring_.normalize(x);
    return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.ring_ == b.ring_)) throw InternalError("matrix sum shape mismatch");
    ExactMatrix out(a.ring_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.ring_.add(a.data_[i], b.data_[i]);
    return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.ring_ == b.ring_)) throw InternalError("matrix difference shape mismatch");
    ExactMatrix out(a.ring_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.ring_.sub(a.data_[i], b.data_[i]);
    return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string ExactMatrix::dump() const {
    std::ostringstream out;
    out << rows_ << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out << ' ';
            out << to_string(data_[r * cols_ + c]);
        }
        out << '\n';
    }
    return out.str();
}

ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw InternalError("hconcat row mismatch");
    ExactMatrix out(a.ring(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b(r, c));
    }
    return out;
}

Scalar determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw InternalError("determinant of a non-square matrix");
    if (m.ring().kind() == Ring::Kind::prime_field) throw InternalError("determinant over Z/p not supported");
    std::size_t n = m.rows();
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
    Scalar det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a[r][k] == 0) continue;
            Scalar f = a[r][k] / a[k][k];
            for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
        }
    }
    return det;
}

}  // namespace hypermorse
