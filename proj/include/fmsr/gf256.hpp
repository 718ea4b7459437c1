#ifndef FMSR_GF256_HPP
#define FMSR_GF256_HPP

#include <array>
#include <cstddef>
#include <cstdint>

#include "fmsr/errors.hpp"

namespace fmsr::gf {

using u8 = std::uint8_t;

// GF(2^8) with reduction polynomial x^8 + x^4 + x^3 + x^2 + 1 (0x11D),
// generator alpha = 2.  Tables are built at compile time and immutable.
inline constexpr unsigned kPoly = 0x11D;
inline constexpr u8 kGenerator = 0x02;

namespace detail {

struct Tables {
    std::array<u8, 512> exp{};  // exp[i] = alpha^i, duplicated to skip "mod 255"
    std::array<u8, 256> log{};  // log[x] for x != 0; log[0] unused
};

constexpr Tables build_tables() {
    Tables t{};
    unsigned x = 1;
    for (int i = 0; i < 255; ++i) {
        t.exp[static_cast<std::size_t>(i)] = static_cast<u8>(x);
        t.log[x] = static_cast<u8>(i);
        x <<= 1;
        if (x & 0x100u) x ^= kPoly;
    }
    for (int i = 255; i < 512; ++i)
        t.exp[static_cast<std::size_t>(i)] = t.exp[static_cast<std::size_t>(i - 255)];
    return t;
}

inline constexpr Tables kTables = build_tables();

} // namespace detail

inline constexpr u8 add(u8 a, u8 b) { return static_cast<u8>(a ^ b); }
inline constexpr u8 sub(u8 a, u8 b) { return static_cast<u8>(a ^ b); }

inline constexpr u8 mul(u8 a, u8 b) {
    if (a == 0 || b == 0) return 0;
    const auto& t = detail::kTables;
    return t.exp[static_cast<std::size_t>(t.log[a]) + t.log[b]];
}

inline constexpr u8 inv(u8 a) {
    if (a == 0) throw ZeroInverse();
    const auto& t = detail::kTables;
    return t.exp[static_cast<std::size_t>(255 - t.log[a])];
}

inline constexpr u8 div(u8 a, u8 b) { return mul(a, inv(b)); }

inline constexpr u8 exp_table(std::size_t i) { return detail::kTables.exp[i]; }
inline constexpr u8 log_table(u8 a) { return detail::kTables.log[a]; }

// dst[i] ^= coeff * src[i]; the byte-wise kernel behind all payload math.
void mul_add(u8* dst, const u8* src, u8 coeff, std::size_t len);

} // namespace fmsr::gf

#endif
