#pragma once

#include <cstdint>
#include <vector>

namespace ringlat {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Coordinate vector of an element over Z/n; always reduced into [0, n).
using Vec = std::vector<u32>;

i64 egcd(i64 a, i64 b, i64& x, i64& y);
u32 gcd_u32(u32 a, u32 b);

// Inverse of a mod n; requires gcd(a, n) == 1.
u32 mod_inverse(u32 a, u32 n);

// A unit u mod n with (u * a) % n == gcd(a, n). Requires a % n != 0.
// Every element of Z/n is a unit multiple of a divisor of n.
u32 unit_scaling(u32 a, u32 n);

inline u32 mulmod(u32 a, u32 b, u32 n) {
    return static_cast<u32>(static_cast<u64>(a) * b % n);
}
inline u32 addmod(u32 a, u32 b, u32 n) {
    u32 s = a + b;
    return s >= n ? s - n : s;
}
inline u32 submod(u32 a, u32 b, u32 n) { return a >= b ? a - b : a + n - b; }

void vec_addmul(u32* acc, const u32* v, u32 scalar, u32 len, u32 n);
void vec_submul(u32* acc, const u32* v, u32 scalar, u32 len, u32 n);
void vec_scale(u32* v, u32 scalar, u32 len, u32 n);
bool vec_is_zero(const u32* v, u32 len);

}  // namespace ringlat
