#include "ringlat/ring_ops.hpp"

#include <algorithm>
#include <cstring>

#include "ringlat/errors.hpp"

namespace ringlat {

std::vector<Vec> units(const RingTable& S, const Caps& caps) {
    if (S.size() > caps.max_size)
        fail(errc::cap_exceeded, "unit enumeration over cap");
    std::vector<Vec> out;
    for (u64 i = 0; i < S.size(); ++i) {
        Vec v = S.element_at(i);
        if (S.is_unit(v)) out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vec> idempotents(const RingTable& S, const Caps& caps) {
    if (S.size() > caps.max_size)
        fail(errc::cap_exceeded, "idempotent enumeration over cap");
    std::vector<Vec> out;
    for (u64 i = 0; i < S.size(); ++i) {
        Vec v = S.element_at(i);
        if (S.is_idempotent(v)) out.push_back(std::move(v));
    }
    return out;
}

bool is_mult_closed(const RingTable& S, const Submodule& m) {
    u32 d = S.rank();
    Vec prod(d);
    for (u32 i = 0; i < m.rows(); ++i)
        for (u32 j = i; j < m.rows(); ++j) {
            S.mul_into(m.row(i), m.row(j), prod.data());
            if (!m.contains(prod.data())) return false;
        }
    return true;
}

bool is_unital_subring(const RingTable& S, const Submodule& m) {
    return m.contains(S.unit()) && is_mult_closed(S, m);
}

Submodule span_closure(const RingTable& S, const std::vector<Vec>& seed) {
    u32 n = S.modulus(), d = S.rank();
    std::vector<Vec> gens(seed);
    gens.push_back(S.unit());
    Submodule cur = Submodule::span(n, d, gens);
    Vec prod(d);
    while (true) {
        std::vector<Vec> extra;
        for (u32 i = 0; i < cur.rows(); ++i)
            for (u32 j = i; j < cur.rows(); ++j) {
                S.mul_into(cur.row(i), cur.row(j), prod.data());
                if (!cur.contains(prod.data())) extra.push_back(prod);
            }
        if (extra.empty()) return cur;
        for (u32 i = 0; i < cur.rows(); ++i)
            extra.emplace_back(cur.row(i), cur.row(i) + d);
        cur = Submodule::span(n, d, extra);
    }
}

Submodule adjoin(const RingTable& S, const Submodule& T, const u32* x) {
    u32 d = S.rank();
    std::vector<Vec> gens;
    gens.reserve(T.rows() + 1);
    for (u32 i = 0; i < T.rows(); ++i) gens.emplace_back(T.row(i), T.row(i) + d);
    gens.emplace_back(x, x + d);
    return span_closure(S, gens);
}

Submodule subring_join(const RingTable& S, const Submodule& T, const Submodule& U) {
    u32 d = S.rank();
    std::vector<Vec> gens;
    gens.reserve(T.rows() + U.rows());
    for (u32 i = 0; i < T.rows(); ++i) gens.emplace_back(T.row(i), T.row(i) + d);
    for (u32 i = 0; i < U.rows(); ++i) gens.emplace_back(U.row(i), U.row(i) + d);
    return span_closure(S, gens);
}

Submodule ideal_span(const RingTable& S, const Submodule& T,
                     const std::vector<Vec>& seed) {
    u32 n = S.modulus(), d = S.rank();
    Submodule cur = Submodule::span(n, d, seed);
    Vec prod(d);
    while (true) {
        std::vector<Vec> extra;
        for (u32 i = 0; i < cur.rows(); ++i)
            for (u32 j = 0; j < T.rows(); ++j) {
                S.mul_into(cur.row(i), T.row(j), prod.data());
                if (!cur.contains(prod.data())) extra.push_back(prod);
            }
        if (extra.empty()) return cur;
        for (u32 i = 0; i < cur.rows(); ++i)
            extra.emplace_back(cur.row(i), cur.row(i) + d);
        cur = Submodule::span(n, d, extra);
    }
}

bool is_ideal_of(const RingTable& S, const Submodule& T, const Submodule& I) {
    if (!T.contains(I)) return false;
    u32 d = S.rank();
    Vec prod(d);
    for (u32 i = 0; i < I.rows(); ++i)
        for (u32 j = 0; j < T.rows(); ++j) {
            S.mul_into(I.row(i), T.row(j), prod.data());
            if (!I.contains(prod.data())) return false;
        }
    return true;
}

Submodule conductor(const RingTable& S, const Submodule& R) {
    return conductor_of_pair(S, R, Submodule::full(S.modulus(), S.rank()));
}

Submodule conductor_of_pair(const RingTable& S, const Submodule& T,
                            const Submodule& U) {
    // {x in U : x * U within T}; by linearity it suffices to test x against
    // the basis rows of U. Elements of U are scanned directly (caps keep
    // this cheap, and an exhaustive-search oracle backs it in the tests).
    u32 d = S.rank();
    std::vector<Vec> members;
    Vec prod(d);
    for (const Vec& x : U.elements()) {
        bool ok = true;
        for (u32 j = 0; j < U.rows() && ok; ++j) {
            S.mul_into(x.data(), U.row(j), prod.data());
            ok = T.contains(prod.data());
        }
        if (ok) members.push_back(x);
    }
    return Submodule::span(S.modulus(), d, members);
}

std::vector<Vec> subring_elements_lex(const RingTable&, const Submodule& T) {
    std::vector<Vec> els = T.elements();
    std::sort(els.begin(), els.end());
    return els;
}

std::vector<Vec> idempotents_of_subring(const RingTable& S, const Submodule& T) {
    std::vector<Vec> out;
    for (const Vec& v : subring_elements_lex(S, T))
        if (S.is_idempotent(v)) out.push_back(v);
    return out;
}

std::vector<Vec> primitive_idempotents_of_subring(const RingTable& S,
                                                  const Submodule& T) {
    std::vector<Vec> idems = idempotents_of_subring(S, T);
    std::vector<Vec> out;
    for (const Vec& e : idems) {
        if (S.is_zero(e)) continue;
        bool primitive = true;
        for (const Vec& f : idems) {
            if (S.is_zero(f)) continue;
            Vec ef = S.mul(e, f);
            if (ef != e && !S.is_zero(ef)) {
                primitive = false;
                break;
            }
        }
        if (primitive) out.push_back(e);
    }
    return out;
}

Submodule nilradical_of_subring(const RingTable& S, const Submodule& T) {
    std::vector<Vec> nil;
    for (const Vec& v : T.elements())
        if (S.is_nilpotent(v)) nil.push_back(v);
    return Submodule::span(S.modulus(), S.rank(), nil);
}

std::vector<Submodule> maximal_ideals_of_subring(const RingTable& S,
                                                 const Submodule& T) {
    u32 d = S.rank();
    std::vector<Vec> prim = primitive_idempotents_of_subring(S, T);
    std::vector<Submodule> out;
    for (const Vec& e : prim) {
        // M_e = Nil(eT) + (1-e)T, the pullback of the maximal ideal of the
        // local factor eT.
        std::vector<Vec> gens;
        for (const Vec& t : T.elements()) {
            Vec et = S.mul(e, t);
            if (S.is_nilpotent(et)) gens.push_back(et);
        }
        for (u32 i = 0; i < T.rows(); ++i) {
            Vec t(T.row(i), T.row(i) + d);
            gens.push_back(S.sub(t, S.mul(e, t)));
        }
        out.push_back(Submodule::span(S.modulus(), d, gens));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Submodule jacobson_radical(const RingTable& S) {
    return nilradical_of_subring(S, Submodule::full(S.modulus(), S.rank()));
}

std::vector<Submodule> maximal_ideals(const RingTable& S) {
    return maximal_ideals_of_subring(S, Submodule::full(S.modulus(), S.rank()));
}

// ---------------------------------------------------------------------------

Vec RebasedRing::to_local(const u32* ambient_v) const {
    return to_local_raw(ambient_v, table->modulus());
}

Vec RebasedRing::to_local_raw(const u32* ambient_v, u32 m) const {
    u32 d = ambient->rank(), n = ambient->modulus();
    u32 k = static_cast<u32>(basis.size());
    // In the diagonal frame the basis vectors are diag_vals_[i] * e_{c_i},
    // so the coefficient of basis_i is (x * coord)_{c_i} / diag_vals_[i].
    Vec coeffs(k, 0);
    for (u32 i = 0; i < k; ++i) {
        u32 c = diag_cols_[i];
        u64 y = 0;
        for (u32 t = 0; t < d; ++t)
            y += static_cast<u64>(ambient_v[t]) * coord_[static_cast<size_t>(t) * d + c];
        u32 yc = static_cast<u32>(y % n);
        u32 g = diag_vals_[i];
        if (yc % g) fail(errc::bad_input, "vector not in rebased module");
        coeffs[i] = (yc / g) % m;
    }
    Vec check(d, 0);
    for (u32 i = 0; i < k; ++i)
        vec_addmul(check.data(), basis[i].data(), coeffs[i], d, n);
    if (std::memcmp(check.data(), ambient_v, d * sizeof(u32)) != 0)
        fail(errc::bad_input, "vector not in rebased module");
    return coeffs;
}

Vec RebasedRing::to_ambient(const u32* local_v) const {
    u32 d = ambient->rank(), n = ambient->modulus();
    Vec out(d, 0);
    for (size_t i = 0; i < basis.size(); ++i)
        vec_addmul(out.data(), basis[i].data(), local_v[i], d, n);
    return out;
}

Submodule RebasedRing::map_submodule(const Submodule& sub_of_W) const {
    std::vector<Vec> gens;
    for (u32 i = 0; i < sub_of_W.rows(); ++i)
        gens.push_back(to_local(sub_of_W.row(i)));
    return Submodule::span(table->modulus(), table->rank(), gens);
}

RebasedRing rebase_ring(TablePtr S, const Submodule& W, const Vec& e,
                        std::string name) {
    u32 n = S->modulus(), d = S->rank();
    std::vector<Vec> gens;
    for (u32 i = 0; i < W.rows(); ++i) gens.emplace_back(W.row(i), W.row(i) + d);
    DiagonalForm df = snf_diagonalize(n, d, gens);

    RebasedRing rr;
    rr.ambient = S;
    u32 m = 0;
    u64 sz = 1;
    for (u32 c = 0; c < d; ++c) {
        if (!df.diag[c]) continue;
        u32 order = n / gcd_u32(df.diag[c], n);
        if (order == 1) continue;
        if (m == 0) m = order;
        if (order != m)
            fail(errc::not_free,
                 "module is not free: mixed invariant factors " +
                     std::to_string(m) + "," + std::to_string(order));
        Vec b = df.basis_row(c);
        vec_scale(b.data(), df.diag[c], d, n);
        rr.basis.push_back(std::move(b));
        rr.orders.push_back(order);
        rr.diag_cols_.push_back(c);
        rr.diag_vals_.push_back(df.diag[c]);
        sz *= order;
    }
    rr.coord_ = df.coord;
    if (sz != W.size())
        fail(errc::classification_contradiction, "rebase size mismatch");
    u32 k = static_cast<u32>(rr.basis.size());
    if (k == 0) fail(errc::bad_input, "cannot rebase the zero module");

    // structure constants and unit in local coordinates
    std::vector<std::vector<Vec>> mul(k);
    Vec prod(d);
    for (u32 i = 0; i < k; ++i) {
        mul[i].resize(i + 1);
        for (u32 j = 0; j <= i; ++j) {
            S->mul_into(rr.basis[i].data(), rr.basis[j].data(), prod.data());
            mul[i][j] = rr.to_local_raw(prod.data(), m);
        }
    }
    Vec unit_local = rr.to_local_raw(e.data(), m);
    Caps caps;
    caps.max_size = std::max<u64>(caps.max_size, W.size());
    caps.max_rank = std::max<u32>(caps.max_rank, k);
    rr.table = std::make_shared<const RingTable>(
        RingTable::validate(m, k, mul, unit_local, std::move(name), caps));
    return rr;
}

// ---------------------------------------------------------------------------

std::vector<Factor> primitive_idempotent_decomposition(TablePtr S) {
    Submodule full = Submodule::full(S->modulus(), S->rank());
    std::vector<Vec> prim = primitive_idempotents_of_subring(*S, full);
    std::sort(prim.begin(), prim.end());
    std::vector<Factor> out;
    u32 fi = 0;
    for (const Vec& e : prim) {
        std::vector<Vec> ws;
        for (u32 i = 0; i < S->rank(); ++i) {
            Vec b(S->rank(), 0);
            b[i] = 1;
            ws.push_back(S->mul(e, b));
        }
        Submodule W = Submodule::span(S->modulus(), S->rank(), ws);
        Factor f;
        f.idem = e;
        f.ring = rebase_ring(S, W, e,
                             S->name() + ".f" + std::to_string(fi++));
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace ringlat
