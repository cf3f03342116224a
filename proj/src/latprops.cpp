#include "ringlat/latprops.hpp"

#include <algorithm>

#include "ringlat/errors.hpp"

namespace ringlat {

MeetJoinTables build_meet_join_tables(const IntervalLattice& L) {
    MeetJoinTables T;
    u32 n = static_cast<u32>(L.nodes.size());
    T.n = n;
    T.meet.assign(static_cast<size_t>(n) * n, 0);
    T.join.assign(static_cast<size_t>(n) * n, 0);
    u64 pairs = kernels::pair_count(n);
    std::vector<u32> mtmp(pairs ? pairs : 1), jtmp(pairs ? pairs : 1);
    kernels::fill_table(pairs, mtmp.data(), [&](u64 idx) -> u32 {
        u32 i, j;
        kernels::pair_at(idx, n, i, j);
        if (L.le(i, j)) return i;
        if (L.le(j, i)) return j;
        Submodule m = L.nodes[i].intersect(L.nodes[j]);
        auto f = L.find(m);
        if (!f) fail(errc::classification_contradiction, "meet escaped the lattice");
        return *f;
    });
    kernels::fill_table(pairs, jtmp.data(), [&](u64 idx) -> u32 {
        u32 i, j;
        kernels::pair_at(idx, n, i, j);
        if (L.le(i, j)) return j;
        if (L.le(j, i)) return i;
        Submodule m = subring_join(*L.S, L.nodes[i], L.nodes[j]);
        auto f = L.find(m);
        if (!f) fail(errc::classification_contradiction, "join escaped the lattice");
        return *f;
    });
    for (u32 i = 0; i < n; ++i) {
        T.meet[static_cast<size_t>(i) * n + i] = i;
        T.join[static_cast<size_t>(i) * n + i] = i;
    }
    for (u64 idx = 0; idx < pairs; ++idx) {
        u32 i, j;
        kernels::pair_at(idx, n, i, j);
        T.meet[static_cast<size_t>(i) * n + j] = mtmp[idx];
        T.meet[static_cast<size_t>(j) * n + i] = mtmp[idx];
        T.join[static_cast<size_t>(i) * n + j] = jtmp[idx];
        T.join[static_cast<size_t>(j) * n + i] = jtmp[idx];
    }
    return T;
}

bool is_catenarian(const IntervalLattice& L, std::array<u32, 2>* witness) {
    u32 n = static_cast<u32>(L.nodes.size());
    auto hit = kernels::first_fail(n, [&](u64 src) {
        constexpr u32 kUnset = 0xffffffff;
        std::vector<u32> mn(n, kUnset), mx(n, kUnset);
        u32 s = static_cast<u32>(src);
        mn[s] = mx[s] = 0;
        for (u32 x = s; x < n; ++x) {
            if (mn[x] == kUnset) continue;
            for (u32 c : L.up[x]) {
                u32 y = L.covers[c].hi;
                if (mn[y] == kUnset || mn[y] > mn[x] + 1) mn[y] = mn[x] + 1;
                if (mx[y] == kUnset || mx[y] < mx[x] + 1) mx[y] = mx[x] + 1;
            }
        }
        for (u32 t = s; t < n; ++t)
            if (mn[t] != kUnset && mn[t] != mx[t]) return false;
        return true;
    });
    if (hit.found && witness) {
        // recompute the offending target for the witness
        u32 s = static_cast<u32>(hit.index);
        constexpr u32 kUnset = 0xffffffff;
        std::vector<u32> mn(n, kUnset), mx(n, kUnset);
        mn[s] = mx[s] = 0;
        for (u32 x = s; x < n; ++x) {
            if (mn[x] == kUnset) continue;
            for (u32 c : L.up[x]) {
                u32 y = L.covers[c].hi;
                if (mn[y] == kUnset || mn[y] > mn[x] + 1) mn[y] = mn[x] + 1;
                if (mx[y] == kUnset || mx[y] < mx[x] + 1) mx[y] = mx[x] + 1;
            }
        }
        for (u32 t = s; t < n; ++t)
            if (mn[t] != kUnset && mn[t] != mx[t]) {
                *witness = {s, t};
                break;
            }
    }
    return !hit.found;
}

bool is_chained(const IntervalLattice& L) {
    u32 n = static_cast<u32>(L.nodes.size());
    for (u32 i = 0; i < n; ++i)
        for (u32 j = i + 1; j < n; ++j)
            if (!L.le(i, j) && !L.le(j, i)) return false;
    return true;
}

bool is_modular(const IntervalLattice& L, const MeetJoinTables& T,
                std::array<u32, 3>* witness) {
    u32 n = static_cast<u32>(L.nodes.size());
    u64 total = static_cast<u64>(n) * n * n;
    auto hit = kernels::first_fail(total, [&](u64 idx) {
        u32 t1 = static_cast<u32>(idx / (static_cast<u64>(n) * n));
        u32 rest = static_cast<u32>(idx % (static_cast<u64>(n) * n));
        u32 t2 = rest / n, t3 = rest % n;
        if (!L.le(t2, t1)) return true;
        // T1 meet (T2 join T3) == T2 join (T1 meet T3)
        return T.meet_of(t1, T.join_of(t2, t3)) ==
               T.join_of(t2, T.meet_of(t1, t3));
    });
    if (hit.found && witness) {
        u64 idx = hit.index;
        (*witness)[0] = static_cast<u32>(idx / (static_cast<u64>(n) * n));
        u32 rest = static_cast<u32>(idx % (static_cast<u64>(n) * n));
        (*witness)[1] = rest / n;
        (*witness)[2] = rest % n;
    }
    return !hit.found;
}

bool is_distributive(const IntervalLattice& L, const MeetJoinTables& T,
                     std::array<u32, 3>* witness) {
    u32 n = static_cast<u32>(L.nodes.size());
    u64 total = static_cast<u64>(n) * n * n;
    auto hit = kernels::first_fail(total, [&](u64 idx) {
        u32 t1 = static_cast<u32>(idx / (static_cast<u64>(n) * n));
        u32 rest = static_cast<u32>(idx % (static_cast<u64>(n) * n));
        u32 t2 = rest / n, t3 = rest % n;
        return T.meet_of(t1, T.join_of(t2, t3)) ==
               T.join_of(T.meet_of(t1, t2), T.meet_of(t1, t3));
    });
    if (hit.found && witness) {
        u64 idx = hit.index;
        (*witness)[0] = static_cast<u32>(idx / (static_cast<u64>(n) * n));
        u32 rest = static_cast<u32>(idx % (static_cast<u64>(n) * n));
        (*witness)[1] = rest / n;
        (*witness)[2] = rest % n;
    }
    return !hit.found;
}

bool is_semimodular(const IntervalLattice& L, const MeetJoinTables& T,
                    std::array<u32, 2>* witness) {
    u32 n = static_cast<u32>(L.nodes.size());
    u64 pairs = kernels::pair_count(n);
    auto hit = kernels::first_fail(pairs, [&](u64 idx) {
        u32 i, j;
        kernels::pair_at(idx, n, i, j);
        u32 m = T.meet_of(i, j);
        if (!L.cover_between(m, i) || !L.cover_between(m, j)) return true;
        u32 v = T.join_of(i, j);
        return L.cover_between(i, v) != nullptr && L.cover_between(j, v) != nullptr;
    });
    if (hit.found && witness) {
        u32 i, j;
        kernels::pair_at(hit.index, n, i, j);
        *witness = {i, j};
    }
    return !hit.found;
}

std::vector<u32> complements_of(const IntervalLattice& L, const MeetJoinTables& T,
                                u32 node) {
    std::vector<u32> out;
    for (u32 x = 0; x < L.nodes.size(); ++x)
        if (T.meet_of(node, x) == L.bottom && T.join_of(node, x) == L.top)
            out.push_back(x);
    return out;
}

bool is_boolean(const IntervalLattice& L, const MeetJoinTables& T) {
    if (!is_distributive(L, T)) return false;
    for (u32 x = 0; x < L.nodes.size(); ++x)
        if (complements_of(L, T, x).empty()) return false;
    return true;
}

bool is_b2(const IntervalLattice& L) {
    return L.length == 2 && L.nodes.size() == 4;
}

bool is_pinched_at(const IntervalLattice& L, const std::vector<u32>& chain) {
    if (chain.empty()) return false;
    for (u32 x = 0; x < L.nodes.size(); ++x)
        for (u32 t : chain)
            if (!L.le(x, t) && !L.le(t, x)) return false;
    return true;
}

std::vector<u32> atoms_of(const IntervalLattice& L) {
    std::vector<u32> out;
    for (u32 c : L.up[L.bottom]) out.push_back(L.covers[c].hi);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u32> loewy_series(const IntervalLattice& L, const MeetJoinTables& T) {
    std::vector<u32> series{L.bottom};
    u32 cur = L.bottom;
    while (cur != L.top) {
        u32 socle = cur;
        for (u32 c : L.up[cur]) socle = T.join_of(socle, L.covers[c].hi);
        if (socle == cur)
            fail(errc::classification_contradiction, "stalled loewy series");
        series.push_back(socle);
        cur = socle;
    }
    return series;
}

bool is_arithmetic_pair(TablePtr S, const Submodule& T,
                        const Submodule& U, u32 node_budget) {
    // localize the pair at every maximal ideal of T in the support of U/T
    std::vector<Vec> prim = primitive_idempotents_of_subring(*S, T);
    for (const Submodule& M : support_of_pair(*S, T, U)) {
        const Vec* e = nullptr;
        for (const Vec& p : prim)
            if (!M.contains(p)) {
                e = &p;
                break;
            }
        if (!e) fail(errc::classification_contradiction, "no idempotent for M");
        u32 d = S->rank();
        std::vector<Vec> ws;
        for (u32 i = 0; i < d; ++i) {
            Vec b(d, 0);
            b[i] = 1;
            ws.push_back(S->mul(*e, b));
        }
        // present e*S, then enumerate [e*T, e*U] inside it
        Submodule W = Submodule::span(S->modulus(), d, ws);
        RebasedRing rr = rebase_ring(S, W, S->mul(*e, S->unit()), S->name() + ".loc");
        auto map_sub = [&](const Submodule& X) {
            std::vector<Vec> gens;
            for (u32 i = 0; i < X.rows(); ++i) {
                Vec t(X.row(i), X.row(i) + d);
                gens.push_back(rr.to_local(S->mul(*e, t).data()));
            }
            return Submodule::span(rr.table->modulus(), rr.table->rank(), gens);
        };
        Extension loc;
        loc.S = rr.table;
        loc.R = map_sub(T);
        Submodule top = map_sub(U);
        IntervalLattice LL = enumerate_interval(loc, node_budget, &top);
        if (!is_chained(LL)) return false;
    }
    return true;
}

bool is_arithmetic(const Extension& E, u32 node_budget, bool cross_check) {
    bool via_localize = true;
    std::vector<LocalizedExtension> locs;
    for (const Submodule& M : ext_msupp(E)) {
        locs.push_back(localize_extension(E, M));
        IntervalLattice LL = enumerate_interval(locs.back().ext, node_budget);
        if (!is_chained(LL)) {
            via_localize = false;
            break;
        }
    }
    if (!cross_check) return via_localize;

    // second route: filter the global lattice by the idempotent projection
    IntervalLattice L = enumerate_interval(E, node_budget);
    bool via_filter = true;
    for (const Submodule& M : ext_msupp(E)) {
        std::vector<Vec> prim = primitive_idempotents_of_subring(*E.S, E.R);
        const Vec* e = nullptr;
        for (const Vec& p : prim)
            if (!M.contains(p)) {
                e = &p;
                break;
            }
        u32 d = E.S->rank();
        std::vector<Submodule> images;
        for (const Submodule& node : L.nodes) {
            std::vector<Vec> gens;
            for (u32 i = 0; i < node.rows(); ++i) {
                Vec t(node.row(i), node.row(i) + d);
                gens.push_back(E.S->mul(*e, t));
            }
            images.push_back(Submodule::span(E.S->modulus(), d, gens));
        }
        for (size_t a = 0; a < images.size() && via_filter; ++a)
            for (size_t b = a + 1; b < images.size(); ++b)
                if (!images[a].contains(images[b]) && !images[b].contains(images[a])) {
                    via_filter = false;
                    break;
                }
    }
    if (via_filter != via_localize)
        fail(errc::classification_contradiction,
             "arithmetic cross-check disagreement");
    return via_localize;
}

bool interval_modular(const IntervalLattice& L, const MeetJoinTables& T,
                      u32 lo, u32 hi) {
    std::vector<u32> ns = L.interval_nodes(lo, hi);
    u32 k = static_cast<u32>(ns.size());
    for (u32 a = 0; a < k; ++a)
        for (u32 b = 0; b < k; ++b)
            for (u32 c = 0; c < k; ++c) {
                u32 t1 = ns[a], t2 = ns[b], t3 = ns[c];
                if (!L.le(t2, t1)) continue;
                if (T.meet_of(t1, T.join_of(t2, t3)) !=
                    T.join_of(t2, T.meet_of(t1, t3)))
                    return false;
            }
    return true;
}

bool interval_boolean(const IntervalLattice& L, const MeetJoinTables& T,
                      u32 lo, u32 hi) {
    std::vector<u32> ns = L.interval_nodes(lo, hi);
    // distributivity on the sub-interval
    for (u32 a : ns)
        for (u32 b : ns)
            for (u32 c : ns)
                if (T.meet_of(a, T.join_of(b, c)) !=
                    T.join_of(T.meet_of(a, b), T.meet_of(a, c)))
                    return false;
    for (u32 x : ns) {
        bool has = false;
        for (u32 y : ns)
            if (T.meet_of(x, y) == lo && T.join_of(x, y) == hi) {
                has = true;
                break;
            }
        if (!has) return false;
    }
    return true;
}

LatticeReport build_report(const IntervalLattice& L,
                           const CanonicalDecomposition& dec,
                           const Extension& E, u32 node_budget) {
    MeetJoinTables T = build_meet_join_tables(L);
    LatticeReport r;
    r.length = L.length;
    r.chain_spectrum = L.chain_length_spectrum();
    r.atoms = atoms_of(L);
    std::array<u32, 2> w2{};
    std::array<u32, 3> w3{};
    r.catenarian = is_catenarian(L, &w2);
    if (!r.catenarian) r.catenarian_witness = w2;
    r.chained = is_chained(L);
    r.modular = is_modular(L, T, &w3);
    if (!r.modular) r.modular_witness = w3;
    r.distributive = is_distributive(L, T, &w3);
    if (!r.distributive) r.distributive_witness = w3;
    r.semimodular = is_semimodular(L, T, &w2);
    if (!r.semimodular) r.semimodular_witness = w2;
    r.boolean_lattice = is_boolean(L, T);
    r.b2 = is_b2(L);
    r.arithmetic = is_arithmetic(E, node_budget);
    r.loewy_series = loewy_series(L, T);
    r.complements.resize(L.nodes.size());
    for (u32 x = 0; x < L.nodes.size(); ++x)
        r.complements[x] = complements_of(L, T, x);

    // implication chain: chained => distributive => modular => semimodular
    // => catenarian
    auto implies = [](bool a, bool b) { return !a || b; };
    if (!implies(r.chained, r.distributive) ||
        !implies(r.distributive, r.modular) ||
        !implies(r.modular, r.semimodular) ||
        !implies(r.semimodular, r.catenarian))
        fail(errc::classification_contradiction,
             "lattice property implication chain violated");

    // pinched-at candidates: canonical decomposition nodes, then the middle
    // of the loewy series
    std::vector<std::vector<u32>> candidates;
    {
        std::vector<u32> chain;
        for (const Submodule* m : {&dec.seminormalization, &dec.t_closure}) {
            auto f = L.find(*m);
            if (f && *f != L.bottom && *f != L.top &&
                (chain.empty() || chain.back() != *f))
                chain.push_back(*f);
        }
        if (!chain.empty()) candidates.push_back(chain);
    }
    if (r.loewy_series.size() > 2)
        candidates.emplace_back(r.loewy_series.begin() + 1, r.loewy_series.end() - 1);
    for (const auto& c : candidates)
        if (is_pinched_at(L, c)) {
            r.pinched_at = c;
            break;
        }
    return r;
}

}  // namespace ringlat
