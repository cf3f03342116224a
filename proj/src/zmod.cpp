#include "ringlat/zmod.hpp"

#include "ringlat/errors.hpp"

namespace ringlat {

i64 egcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    i64 x1, y1;
    i64 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

u32 gcd_u32(u32 a, u32 b) {
    while (b) {
        u32 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u32 mod_inverse(u32 a, u32 n) {
    i64 x, y;
    i64 g = egcd(static_cast<i64>(a % n), static_cast<i64>(n), x, y);
    if (g != 1) fail(errc::bad_input, "mod_inverse of a non-unit");
    i64 r = x % static_cast<i64>(n);
    if (r < 0) r += n;
    return static_cast<u32>(r);
}

u32 unit_scaling(u32 a, u32 n) {
    a %= n;
    if (a == 0) fail(errc::bad_input, "unit_scaling of zero");
    u32 g = gcd_u32(a, n);
    u32 m = n / g;  // a/g is a unit mod m; m > 1 since 0 < a < n
    u32 u0 = mod_inverse(a / g % m, m);
    // lift u0 to a unit mod n; some u0 + t*m is coprime to n
    for (u32 t = 0; t < g; ++t) {
        u64 u = u0 + static_cast<u64>(t) * m;
        if (u == 0) continue;
        if (gcd_u32(static_cast<u32>(u % n), n) == 1)
            return static_cast<u32>(u % n);
    }
    fail(errc::bad_input, "unit_scaling: no unit lift");
}

void vec_addmul(u32* acc, const u32* v, u32 scalar, u32 len, u32 n) {
    for (u32 i = 0; i < len; ++i)
        acc[i] = addmod(acc[i], mulmod(v[i], scalar, n), n);
}

void vec_submul(u32* acc, const u32* v, u32 scalar, u32 len, u32 n) {
    for (u32 i = 0; i < len; ++i)
        acc[i] = submod(acc[i], mulmod(v[i], scalar, n), n);
}

void vec_scale(u32* v, u32 scalar, u32 len, u32 n) {
    for (u32 i = 0; i < len; ++i) v[i] = mulmod(v[i], scalar, n);
}

bool vec_is_zero(const u32* v, u32 len) {
    for (u32 i = 0; i < len; ++i)
        if (v[i]) return false;
    return true;
}

}  // namespace ringlat
