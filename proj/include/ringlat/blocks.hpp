#pragma once

#include "ringlat/ring_table.hpp"

namespace ringlat::blocks {

// Quotient of (Z/n)[x] by a monic degree-d relation x^d = red(x); red is
// given by its coefficient vector of length d.
TablePtr poly_quotient(u32 n, const Vec& reduction, const std::string& name);

TablePtr f2();
TablePtr f3();
TablePtr f4();
TablePtr gf16();
TablePtr gf64();
TablePtr z4();
TablePtr z8();
TablePtr f2_t2();     // F2[t]/(t^2)
TablePtr f2_t3();     // F2[t]/(t^3)
TablePtr f3_t2();     // F3[t]/(t^2)
TablePtr z4_t2();     // Z/4[t]/(t^2)
TablePtr z4_t2_t();   // Z/4[t]/(t^2 - t)
TablePtr f2_xy();     // F2[x,y]/(x^2, xy, y^2)
TablePtr f2_x2y2();   // F2[x,y]/(x^2, y^2), basis 1, x, y, xy
TablePtr f4_y2();     // F4[y]/(y^2), basis 1, w, y, wy
TablePtr ke1_k_k();   // F4 e1 + F2 e2 + F2 e3, basis e1, w e1, e2, e3

TablePtr power(TablePtr base, u32 k, const std::string& name);
TablePtr f2n(u32 k);  // F2^k with orthogonal idempotent basis

}  // namespace ringlat::blocks
