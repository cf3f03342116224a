#include "ringlat/blocks.hpp"

#include "ringlat/extension.hpp"

namespace ringlat::blocks {

namespace {

TablePtr make(u32 n, u32 d, const std::vector<std::vector<Vec>>& mul, Vec unit,
              const std::string& name) {
    return std::make_shared<const RingTable>(
        RingTable::validate(n, d, mul, std::move(unit), name));
}

}  // namespace

TablePtr poly_quotient(u32 n, const Vec& reduction, const std::string& name) {
    u32 d = static_cast<u32>(reduction.size());
    // powers[k] = coordinates of x^k for k up to 2d-2
    std::vector<Vec> powers(2 * d - 1, Vec(d, 0));
    powers[0][0] = 1;
    for (u32 k = 1; k < 2 * d - 1; ++k) {
        const Vec& prev = powers[k - 1];
        Vec cur(d, 0);
        for (u32 i = 0; i + 1 < d; ++i) cur[i + 1] = prev[i];
        if (prev[d - 1])
            vec_addmul(cur.data(), reduction.data(), prev[d - 1], d, n);
        powers[k] = std::move(cur);
    }
    std::vector<std::vector<Vec>> mul(d);
    for (u32 i = 0; i < d; ++i) {
        mul[i].resize(i + 1);
        for (u32 j = 0; j <= i; ++j) mul[i][j] = powers[i + j];
    }
    Vec unit(d, 0);
    unit[0] = 1;
    return make(n, d, mul, unit, name);
}

TablePtr f2() { return poly_quotient(2, {1}, "F2"); }
TablePtr f3() { return poly_quotient(3, {1}, "F3"); }
TablePtr f4() { return poly_quotient(2, {1, 1}, "F4"); }
TablePtr gf16() { return poly_quotient(2, {1, 1, 0, 0}, "F16"); }
TablePtr gf64() { return poly_quotient(2, {1, 1, 0, 0, 0, 0}, "F64"); }
TablePtr z4() { return poly_quotient(4, {1}, "Z4"); }
TablePtr z8() { return poly_quotient(8, {1}, "Z8"); }
TablePtr f2_t2() { return poly_quotient(2, {0, 0}, "F2[t]/t2"); }
TablePtr f2_t3() { return poly_quotient(2, {0, 0, 0}, "F2[t]/t3"); }
TablePtr f3_t2() { return poly_quotient(3, {0, 0}, "F3[t]/t2"); }
TablePtr z4_t2() { return poly_quotient(4, {0, 0}, "Z4[t]/t2"); }
TablePtr z4_t2_t() { return poly_quotient(4, {0, 1}, "Z4[t]/(t2-t)"); }

TablePtr f2_xy() {
    // basis 1, x, y with all products of maximal ideal elements zero
    std::vector<std::vector<Vec>> mul = {
        {{1, 0, 0}},
        {{0, 1, 0}, {0, 0, 0}},
        {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}},
    };
    return make(2, 3, mul, {1, 0, 0}, "F2[x,y]/(x2,xy,y2)");
}

TablePtr f2_x2y2() {
    // basis 1, x, y, xy
    std::vector<std::vector<Vec>> mul = {
        {{1, 0, 0, 0}},
        {{0, 1, 0, 0}, {0, 0, 0, 0}},
        {{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}},
        {{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
    };
    return make(2, 4, mul, {1, 0, 0, 0}, "F2[x,y]/(x2,y2)");
}

TablePtr f4_y2() {
    // basis 1, w, y, wy with w^2 = w + 1 and y^2 = 0
    std::vector<std::vector<Vec>> mul = {
        {{1, 0, 0, 0}},
        {{0, 1, 0, 0}, {1, 1, 0, 0}},
        {{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}},
        {{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}},
    };
    return make(2, 4, mul, {1, 0, 0, 0}, "F4[y]/y2");
}

TablePtr ke1_k_k() {
    // basis e1, w e1, e2, e3 with K = F4 on the first block
    std::vector<std::vector<Vec>> mul = {
        {{1, 0, 0, 0}},
        {{0, 1, 0, 0}, {1, 1, 0, 0}},
        {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}},
        {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}},
    };
    return make(2, 4, mul, {1, 0, 1, 1}, "F4e1+F2e2+F2e3");
}

TablePtr power(TablePtr base, u32 k, const std::string& name) {
    TablePtr acc = base;
    for (u32 i = 1; i < k; ++i) {
        acc = std::make_shared<const RingTable>(
            direct_product(*acc, *base, name));
    }
    return acc;
}

TablePtr f2n(u32 k) { return power(f2(), k, "F2^" + std::to_string(k)); }

}  // namespace ringlat::blocks
