#include "ringlat/submodule.hpp"

#include <algorithm>
#include <cstring>

#include "ringlat/errors.hpp"

namespace ringlat {

namespace {

u32 leading_col(const Vec& r) {
    for (u32 c = 0; c < r.size(); ++c)
        if (r[c]) return c;
    return static_cast<u32>(r.size());
}

// Replace (r1, r2), both nonzero at column c, by a row with pivot
// gcd(r1[c], r2[c]) at c and a row vanishing at c. The 2x2 transform has
// determinant -1 so the span is preserved exactly.
void gcd_combine_rows(Vec& r1, Vec& r2, u32 c, u32 n) {
    i64 a = r1[c], b = r2[c], x, y;
    i64 g = egcd(a, b, x, y);
    u32 ux = static_cast<u32>(((x % n) + n) % n);
    u32 uy = static_cast<u32>(((y % n) + n) % n);
    u32 ag = static_cast<u32>((a / g) % n);
    u32 bg = static_cast<u32>((b / g) % n);
    u32 d = static_cast<u32>(r1.size());
    Vec nr1(d), nr2(d);
    for (u32 k = 0; k < d; ++k) {
        nr1[k] = addmod(mulmod(ux, r1[k], n), mulmod(uy, r2[k], n), n);
        nr2[k] = submod(mulmod(bg, r1[k], n), mulmod(ag, r2[k], n), n);
    }
    r1.swap(nr1);
    r2.swap(nr2);
}

}  // namespace

Submodule Submodule::zero(u32 n, u32 d) {
    Submodule m;
    m.n_ = n;
    m.d_ = d;
    m.finalize();
    return m;
}

Submodule Submodule::full(u32 n, u32 d) {
    std::vector<Vec> gens;
    for (u32 i = 0; i < d; ++i) {
        Vec e(d, 0);
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    return span(n, d, gens);
}

Submodule Submodule::span(u32 n, u32 d, const std::vector<Vec>& gens) {
    std::vector<Vec> work;
    work.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.size() != d) fail(errc::bad_dimensions, "generator rank mismatch");
        Vec r(d);
        bool nz = false;
        for (u32 c = 0; c < d; ++c) {
            r[c] = g[c] % n;
            nz |= (r[c] != 0);
        }
        if (nz) work.push_back(std::move(r));
    }

    std::vector<Vec> out;
    for (u32 c = 0; c < d; ++c) {
        Vec pivot_row;
        bool have = false;
        std::vector<Vec> rest;
        rest.reserve(work.size());
        for (auto& w : work) {
            if (leading_col(w) != c) {
                rest.push_back(std::move(w));
                continue;
            }
            if (!have) {
                pivot_row = std::move(w);
                have = true;
            } else {
                gcd_combine_rows(pivot_row, w, c, n);
                if (!vec_is_zero(w.data(), d)) rest.push_back(std::move(w));
            }
        }
        work.swap(rest);
        if (!have) continue;
        u32 u = unit_scaling(pivot_row[c], n);
        if (u != 1) vec_scale(pivot_row.data(), u, d, n);
        u32 g = pivot_row[c];
        if (g != 1) {
            Vec shadow(pivot_row);
            vec_scale(shadow.data(), n / g, d, n);
            if (!vec_is_zero(shadow.data(), d)) work.push_back(std::move(shadow));
        }
        out.push_back(std::move(pivot_row));
    }

    // reduce entries above each pivot into [0, pivot)
    for (size_t i = 1; i < out.size(); ++i) {
        u32 ci = leading_col(out[i]);
        u32 gi = out[i][ci];
        for (size_t j = 0; j < i; ++j) {
            u32 q = out[j][ci] / gi;
            if (q) vec_submul(out[j].data(), out[i].data(), q, d, n);
        }
    }

    Submodule m;
    m.n_ = n;
    m.d_ = d;
    m.rows_.reserve(out.size() * d);
    for (const auto& r : out) m.rows_.insert(m.rows_.end(), r.begin(), r.end());
    m.finalize();
    return m;
}

void Submodule::finalize() {
    u32 k = d_ ? static_cast<u32>(rows_.size() / d_) : 0;
    pivot_col_.resize(k);
    pivot_val_.resize(k);
    size_ = 1;
    for (u32 i = 0; i < k; ++i) {
        const u32* r = row(i);
        u32 c = 0;
        while (c < d_ && r[c] == 0) ++c;
        pivot_col_[i] = c;
        pivot_val_[i] = r[c];
        size_ *= n_ / r[c];
    }
}

bool Submodule::reduce(u32* v) const {
    bool ok = true;
    for (u32 i = 0; i < rows(); ++i) {
        u32 c = pivot_col_[i];
        u32 g = pivot_val_[i];
        u32 a = v[c];
        if (a % g) {
            // partial reduction still canonicalizes the coset
            u32 q = a / g;
            if (q) vec_submul(v, row(i), q, d_, n_);
            ok = false;
            continue;
        }
        u32 q = a / g;
        if (q) vec_submul(v, row(i), q, d_, n_);
    }
    if (!vec_is_zero(v, d_)) ok = false;
    return ok;
}

bool Submodule::contains(const u32* v) const {
    Vec tmp(v, v + d_);
    return reduce(tmp.data());
}

bool Submodule::contains(const Submodule& other) const {
    for (u32 i = 0; i < other.rows(); ++i)
        if (!contains(other.row(i))) return false;
    return true;
}

Vec Submodule::coset_rep(Vec v) const {
    reduce(v.data());
    return v;
}

Submodule Submodule::sum(const Submodule& other) const {
    if (n_ != other.n_ || d_ != other.d_)
        fail(errc::ambient_mismatch, "submodule sum across ambients");
    std::vector<Vec> gens;
    gens.reserve(rows() + other.rows());
    for (u32 i = 0; i < rows(); ++i) gens.emplace_back(row(i), row(i) + d_);
    for (u32 i = 0; i < other.rows(); ++i)
        gens.emplace_back(other.row(i), other.row(i) + d_);
    return span(n_, d_, gens);
}

Submodule Submodule::intersect(const Submodule& other) const {
    if (n_ != other.n_ || d_ != other.d_)
        fail(errc::ambient_mismatch, "submodule intersection across ambients");
    // Zassenhaus: Howell the stacked [A|A], [B|0]; rows supported on the
    // right half span the intersection.
    u32 dd = 2 * d_;
    std::vector<Vec> gens;
    for (u32 i = 0; i < rows(); ++i) {
        Vec g(dd, 0);
        std::memcpy(g.data(), row(i), d_ * sizeof(u32));
        std::memcpy(g.data() + d_, row(i), d_ * sizeof(u32));
        gens.push_back(std::move(g));
    }
    for (u32 i = 0; i < other.rows(); ++i) {
        Vec g(dd, 0);
        std::memcpy(g.data(), other.row(i), d_ * sizeof(u32));
        gens.push_back(std::move(g));
    }
    Submodule big = span(n_, dd, gens);
    std::vector<Vec> right;
    for (u32 i = 0; i < big.rows(); ++i) {
        if (big.pivot_col(i) < d_) continue;
        right.emplace_back(big.row(i) + d_, big.row(i) + dd);
    }
    return span(n_, d_, right);
}

std::vector<Vec> Submodule::elements() const {
    std::vector<Vec> out;
    out.reserve(static_cast<size_t>(size_));
    Vec counters(rows(), 0);
    Vec cur(d_, 0);
    while (true) {
        out.push_back(cur);
        u32 i = 0;
        for (; i < rows(); ++i) {
            u32 range = n_ / pivot_val_[i];
            if (++counters[i] < range) {
                vec_addmul(cur.data(), row(i), 1, d_, n_);
                break;
            }
            counters[i] = 0;
            vec_submul(cur.data(), row(i), range - 1, d_, n_);
        }
        if (i == rows()) break;
    }
    return out;
}

bool Submodule::operator<(const Submodule& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    if (rows_.size() != o.rows_.size()) return rows_.size() < o.rows_.size();
    return rows_ < o.rows_;
}

size_t Submodule::hash() const {
    size_t h = 1469598103934665603ull ^ n_ ^ (static_cast<size_t>(d_) << 8);
    for (u32 v : rows_) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------------------
// SNF-style diagonalization with tracked coordinate change.

namespace {

struct SnfState {
    u32 n, d;
    std::vector<Vec> H;       // r x d working matrix
    std::vector<u32> coord;   // d x d accumulated column transform C
    std::vector<u32> basis;   // d x d accumulated inverse (rows = new basis)

    u32& C(u32 r, u32 c) { return coord[static_cast<size_t>(r) * d + c]; }
    u32& B(u32 r, u32 c) { return basis[static_cast<size_t>(r) * d + c]; }

    void col_swap(u32 a, u32 b) {
        if (a == b) return;
        for (auto& row : H) std::swap(row[a], row[b]);
        for (u32 r = 0; r < d; ++r) std::swap(C(r, a), C(r, b));
        for (u32 c = 0; c < d; ++c) std::swap(B(a, c), B(b, c));
    }

    // col_j -= q * col_t  (inverse: basis row_t += q * basis row_j)
    void col_submul(u32 j, u32 t, u32 q) {
        for (auto& row : H) row[j] = submod(row[j], mulmod(row[t], q, n), n);
        for (u32 r = 0; r < d; ++r) C(r, j) = submod(C(r, j), mulmod(C(r, t), q, n), n);
        for (u32 c = 0; c < d; ++c) B(t, c) = addmod(B(t, c), mulmod(B(j, c), q, n), n);
    }

    // gcd transform on columns (t, j) at row i: col_t gets pivot gcd.
    // M = [[x, b/g], [y, -a/g]] applied on the right; M^{-1} = [[a/g, b/g], [y, -x]].
    void col_gcd_combine(u32 t, u32 j, u32 i) {
        i64 a = H[i][t], b = H[i][j], x, y;
        i64 g = egcd(a, b, x, y);
        u32 ux = static_cast<u32>(((x % n) + n) % n);
        u32 uy = static_cast<u32>(((y % n) + n) % n);
        u32 ag = static_cast<u32>((a / g) % n);
        u32 bg = static_cast<u32>((b / g) % n);
        for (auto& row : H) {
            u32 vt = row[t], vj = row[j];
            row[t] = addmod(mulmod(vt, ux, n), mulmod(vj, uy, n), n);
            row[j] = submod(mulmod(vt, bg, n), mulmod(vj, ag, n), n);
        }
        for (u32 r = 0; r < d; ++r) {
            u32 vt = C(r, t), vj = C(r, j);
            C(r, t) = addmod(mulmod(vt, ux, n), mulmod(vj, uy, n), n);
            C(r, j) = submod(mulmod(vt, bg, n), mulmod(vj, ag, n), n);
        }
        // basis = C^{-1}: left-multiply by M^{-1} means new basis rows
        // row_t' = ag*row_t + bg*row_j ; row_j' = y*row_t - x*row_j
        for (u32 c = 0; c < d; ++c) {
            u32 vt = B(t, c), vj = B(j, c);
            B(t, c) = addmod(mulmod(vt, ag, n), mulmod(vj, bg, n), n);
            B(j, c) = submod(mulmod(vt, uy, n), mulmod(vj, ux, n), n);
        }
    }

    void row_submul(u32 i, u32 t, u32 q) {
        for (u32 c = 0; c < d; ++c)
            H[i][c] = submod(H[i][c], mulmod(H[t][c], q, n), n);
    }

    void row_gcd_combine(u32 t, u32 i, u32 c) { gcd_combine_rows(H[t], H[i], c, n); }

    void row_scale_unit(u32 t) {
        u32 c = 0;
        while (c < d && H[t][c] == 0) ++c;
        if (c == d) return;
        u32 u = unit_scaling(H[t][c], n);
        if (u != 1) vec_scale(H[t].data(), u, d, n);
    }

    // Clear column t below row t and row t right of column t.
    void clear_at(u32 t) {
        u32 r = static_cast<u32>(H.size());
        while (true) {
            bool dirty = false;
            for (u32 i = t + 1; i < r; ++i) {
                if (!H[i][t]) continue;
                u32 a = H[t][t];
                if (a && H[i][t] % a == 0)
                    row_submul(i, t, H[i][t] / a);
                else
                    row_gcd_combine(t, i, t);
            }
            for (u32 j = t + 1; j < d; ++j) {
                if (!H[t][j]) continue;
                u32 a = H[t][t];
                if (a && H[t][j] % a == 0) {
                    col_submul(j, t, H[t][j] / a);
                } else {
                    col_gcd_combine(t, j, t);
                    dirty = true;
                }
            }
            if (!dirty) {
                bool col_clean = true;
                for (u32 i = t + 1; i < r; ++i)
                    if (H[i][t]) col_clean = false;
                if (col_clean) break;
            }
        }
        row_scale_unit(t);
    }
};

}  // namespace

Vec DiagonalForm::new_coords(const u32* x) const {
    Vec y(d, 0);
    for (u32 c = 0; c < d; ++c) {
        u64 acc = 0;
        for (u32 k = 0; k < d; ++k)
            acc += static_cast<u64>(x[k]) * coord[static_cast<size_t>(k) * d + c];
        y[c] = static_cast<u32>(acc % n);
    }
    return y;
}

Vec DiagonalForm::basis_row(u32 c) const {
    return Vec(basis.begin() + static_cast<size_t>(c) * d,
               basis.begin() + static_cast<size_t>(c + 1) * d);
}

DiagonalForm snf_diagonalize(u32 n, u32 d, const std::vector<Vec>& rows_in) {
    // Howell first so the working matrix has at most d rows.
    Submodule pre = Submodule::span(n, d, rows_in);
    SnfState st;
    st.n = n;
    st.d = d;
    for (u32 i = 0; i < pre.rows(); ++i) st.H.emplace_back(pre.row(i), pre.row(i) + d);
    st.coord.assign(static_cast<size_t>(d) * d, 0);
    st.basis.assign(static_cast<size_t>(d) * d, 0);
    for (u32 i = 0; i < d; ++i) st.C(i, i) = st.B(i, i) = 1;

    u32 r = static_cast<u32>(st.H.size());
    u32 t = 0;
    for (; t < r && t < d; ++t) {
        // find a nonzero entry in the remaining block
        u32 pi = r, pj = d;
        for (u32 i = t; i < r && pi == r; ++i)
            for (u32 j = t; j < d; ++j)
                if (st.H[i][j]) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == r) break;
        std::swap(st.H[t], st.H[pi]);
        st.col_swap(t, pj);
        st.clear_at(t);
    }

    // Enforce the divisibility chain among nonzero diagonal entries.
    bool changed = true;
    while (changed) {
        changed = false;
        for (u32 i = 0; i < t; ++i) {
            for (u32 j = i + 1; j < t; ++j) {
                u32 a = st.H[i][i], b = st.H[j][j];
                if (!a || !b || b % a == 0) continue;
                // pull column j into column i, then re-clear both pivots
                for (auto& row : st.H) row[i] = addmod(row[i], row[j], st.n);
                for (u32 rr = 0; rr < d; ++rr)
                    st.C(rr, i) = addmod(st.C(rr, i), st.C(rr, j), st.n);
                for (u32 cc = 0; cc < d; ++cc)
                    st.B(j, cc) = submod(st.B(j, cc), st.B(i, cc), st.n);
                st.clear_at(i);
                st.clear_at(j);
                changed = true;
            }
        }
    }

    DiagonalForm out;
    out.n = n;
    out.d = d;
    out.diag.assign(d, 0);
    for (u32 i = 0; i < t; ++i) out.diag[i] = st.H[i][i];
    out.coord = std::move(st.coord);
    out.basis = std::move(st.basis);
    return out;
}

}  // namespace ringlat
