#include "fmsr/gfmatrix.hpp"

#include <algorithm>
#include <cstring>

#include "fmsr/errors.hpp"

namespace fmsr {

GfMatrix::GfMatrix(std::size_t rows, std::size_t cols, std::vector<u8> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
        throw LengthMismatch("matrix data length does not match rows*cols");
}

GfMatrix GfMatrix::identity(std::size_t n) {
    GfMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void GfMatrix::set_row(std::size_t r, std::span<const u8> values) {
    if (values.size() != cols_)
        throw LengthMismatch("row length does not match column count");
    std::copy(values.begin(), values.end(), row(r));
}

GfMatrix GfMatrix::select_rows(std::span<const std::size_t> indices) const {
    GfMatrix out(indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i)
        std::memcpy(out.row(i), row(indices[i]), cols_);
    return out;
}

namespace detail {

std::size_t eliminate(u8* m, std::size_t rows, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t c = col; c < cols; ++c)
                std::swap(m[pivot * cols + c], m[rank * cols + c]);
        const u8 piv_inv = gf::inv(m[rank * cols + col]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const u8 v = m[r * cols + col];
            if (v == 0) continue;
            const u8 factor = gf::mul(v, piv_inv);
            m[r * cols + col] = 0;
            gf::mul_add(m + r * cols + col + 1, m + rank * cols + col + 1, factor,
                        cols - col - 1);
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

std::size_t GfMatrix::rank() const {
    std::vector<u8> work(data_);
    return detail::eliminate(work.data(), rows_, cols_);
}

GfMatrix GfMatrix::inverse() const {
    if (rows_ != cols_) throw Singular("inverse requires a square matrix");
    const std::size_t n = rows_;
    // Augmented [A | I], reduced by Gauss-Jordan.
    GfMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        std::memcpy(aug.row(r), row(r), n);
        aug.at(r, n + r) = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && aug.at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw Singular();
        if (pivot != col)
            for (std::size_t c = 0; c < 2 * n; ++c)
                std::swap(aug.at(pivot, c), aug.at(col, c));
        const u8 piv_inv = gf::inv(aug.at(col, col));
        for (std::size_t c = 0; c < 2 * n; ++c)
            aug.at(col, c) = gf::mul(aug.at(col, c), piv_inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const u8 factor = aug.at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = 0; c < 2 * n; ++c)
                aug.at(r, c) ^= gf::mul(factor, aug.at(col, c));
        }
    }
    GfMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        std::memcpy(out.row(r), aug.row(r) + n, n);
    return out;
}

std::vector<u8> GfMatrix::solve(std::span<const u8> b) const {
    if (rows_ != cols_) throw Singular("solve requires a square matrix");
    if (b.size() != rows_) throw LengthMismatch("solve: rhs length != rows");
    const std::size_t n = rows_;
    GfMatrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        std::memcpy(aug.row(r), row(r), n);
        aug.at(r, n) = b[r];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && aug.at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw Singular();
        if (pivot != col)
            for (std::size_t c = 0; c <= n; ++c)
                std::swap(aug.at(pivot, c), aug.at(col, c));
        const u8 piv_inv = gf::inv(aug.at(col, col));
        for (std::size_t c = col; c <= n; ++c)
            aug.at(col, c) = gf::mul(aug.at(col, c), piv_inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const u8 factor = aug.at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c <= n; ++c)
                aug.at(r, c) ^= gf::mul(factor, aug.at(col, c));
        }
    }
    std::vector<u8> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = aug.at(r, n);
    return x;
}

GfMatrix GfMatrix::mul(const GfMatrix& other) const {
    if (cols_ != other.rows_)
        throw LengthMismatch("matrix product dimension mismatch");
    GfMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const u8 v = at(r, k);
            if (v == 0) continue;
            gf::mul_add(out.row(r), other.row(k), v, other.cols_);
        }
    return out;
}

std::vector<std::vector<u8>> apply(const GfMatrix& coeff,
                                   std::span<const std::vector<u8>> payloads) {
    if (payloads.size() != coeff.cols())
        throw LengthMismatch("apply: payload count != coefficient columns");
    const std::size_t len = payloads.empty() ? 0 : payloads[0].size();
    for (const auto& p : payloads)
        if (p.size() != len) throw LengthMismatch("apply: payload lengths differ");
    std::vector<std::vector<u8>> out(coeff.rows(), std::vector<u8>(len, 0));
    for (std::size_t r = 0; r < coeff.rows(); ++r)
        for (std::size_t m = 0; m < coeff.cols(); ++m)
            gf::mul_add(out[r].data(), payloads[m].data(), coeff.at(r, m), len);
    return out;
}

} // namespace fmsr
