#ifndef FMSR_GFMATRIX_HPP
#define FMSR_GFMATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "fmsr/gf256.hpp"

namespace fmsr {

using gf::u8;

// Dense row-major matrix over GF(2^8).
class GfMatrix {
public:
    GfMatrix() = default;
    GfMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    GfMatrix(std::size_t rows, std::size_t cols, std::vector<u8> data);

    static GfMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    u8 at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    u8& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    const u8* row(std::size_t r) const { return data_.data() + r * cols_; }
    u8* row(std::size_t r) { return data_.data() + r * cols_; }

    std::span<const u8> row_span(std::size_t r) const { return {row(r), cols_}; }

    const std::vector<u8>& data() const { return data_; }

    void set_row(std::size_t r, std::span<const u8> values);

    // Rows of this matrix picked by index, in order.
    GfMatrix select_rows(std::span<const std::size_t> indices) const;

    std::size_t rank() const;
    bool full_rank() const { return rank() == std::min(rows_, cols_); }

    // Gauss-Jordan inverse; throws Singular.
    GfMatrix inverse() const;

    // Solves this * x = b for square full-rank matrices; throws Singular.
    std::vector<u8> solve(std::span<const u8> b) const;

    GfMatrix mul(const GfMatrix& other) const;

    bool operator==(const GfMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<u8> data_;
};

namespace detail {
// In-place forward elimination on a raw row-major buffer; returns the rank.
// Rows are swapped; the first nonzero entry in the pivot column is chosen.
std::size_t eliminate(u8* m, std::size_t rows, std::size_t cols);
} // namespace detail

// Byte-wise linear combination of payloads: output r = sum_m coeff(r,m) * payload[m].
// All payloads must have equal length and there must be exactly coeff.cols() of them.
std::vector<std::vector<u8>> apply(const GfMatrix& coeff,
                                   std::span<const std::vector<u8>> payloads);

} // namespace fmsr

#endif
