#include "fmsr/gf256.hpp"

namespace fmsr::gf {

namespace {

// 256x256 product table; one lookup per multiply in the row kernels.
struct MulTable {
    std::array<std::array<u8, 256>, 256> m{};
    MulTable() {
        for (int a = 0; a < 256; ++a)
            for (int b = 0; b < 256; ++b)
                m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    mul(static_cast<u8>(a), static_cast<u8>(b));
    }
};

const MulTable kMul;

} // namespace

void mul_add(u8* dst, const u8* src, u8 coeff, std::size_t len) {
    if (coeff == 0) return;
    if (coeff == 1) {
        for (std::size_t i = 0; i < len; ++i) dst[i] ^= src[i];
        return;
    }
    const u8* row = kMul.m[coeff].data();
    for (std::size_t i = 0; i < len; ++i) dst[i] ^= row[src[i]];
}

} // namespace fmsr::gf
