#include "ringlat/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <unordered_set>

#include "ringlat/errors.hpp"

namespace ringlat {

const char* min_kind_name(MinKind k) {
    switch (k) {
        case MinKind::ramified: return "ramified";
        case MinKind::decomposed: return "decomposed";
        case MinKind::inert: return "inert";
    }
    return "?";
}

char min_kind_letter(MinKind k) {
    switch (k) {
        case MinKind::ramified: return 'r';
        case MinKind::decomposed: return 'd';
        case MinKind::inert: return 'i';
    }
    return '?';
}

u32 default_node_budget() {
    if (const char* env = std::getenv("RINGLAT_NODE_BUDGET")) {
        long v = std::atol(env);
        if (v > 1) return static_cast<u32>(v);
    }
    return 2048;
}

std::optional<u32> IntervalLattice::find(const Submodule& m) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), m);
    if (it != nodes.end() && *it == m)
        return static_cast<u32>(it - nodes.begin());
    return std::nullopt;
}

const CoverEdge* IntervalLattice::cover_between(u32 lo, u32 hi) const {
    for (u32 c : up[lo])
        if (covers[c].hi == hi) return &covers[c];
    return nullptr;
}

std::vector<u32> IntervalLattice::interval_nodes(u32 lo, u32 hi) const {
    std::vector<u32> out;
    for (u32 x = lo; x <= hi; ++x)
        if (le(lo, x) && le(x, hi)) out.push_back(x);
    return out;
}

std::pair<u32, u32> IntervalLattice::interval_length_minmax(u32 lo, u32 hi) const {
    // Cover paths from lo can only pass through nodes of [lo, hi]; walk in
    // index order (covers strictly increase the index).
    constexpr u32 kUnset = 0xffffffff;
    std::vector<u32> lo_min(nodes.size(), kUnset), lo_max(nodes.size(), kUnset);
    lo_min[lo] = lo_max[lo] = 0;
    for (u32 x = lo; x <= hi; ++x) {
        if (lo_min[x] == kUnset || !le(x, hi)) continue;
        for (u32 c : up[x]) {
            u32 y = covers[c].hi;
            if (!le(y, hi)) continue;
            if (lo_min[y] == kUnset || lo_min[y] > lo_min[x] + 1)
                lo_min[y] = lo_min[x] + 1;
            if (lo_max[y] == kUnset || lo_max[y] < lo_max[x] + 1)
                lo_max[y] = lo_max[x] + 1;
        }
    }
    if (lo_max[hi] == kUnset)
        fail(errc::not_comparable, "interval endpoints are not comparable");
    return {lo_min[hi], lo_max[hi]};
}

u32 IntervalLattice::interval_node_count(u32 lo, u32 hi) const {
    u32 cnt = 0;
    for (u32 x = lo; x <= hi; ++x)
        if (le(lo, x) && le(x, hi)) ++cnt;
    return cnt;
}

bool IntervalLattice::interval_is_b2(u32 lo, u32 hi) const {
    return interval_node_count(lo, hi) == 4 &&
           interval_length_minmax(lo, hi).second == 2;
}

bool IntervalLattice::interval_chained(u32 lo, u32 hi) const {
    std::vector<u32> ns = interval_nodes(lo, hi);
    for (size_t a = 0; a < ns.size(); ++a)
        for (size_t b = a + 1; b < ns.size(); ++b)
            if (!le(ns[a], ns[b]) && !le(ns[b], ns[a])) return false;
    return true;
}

std::vector<std::pair<u32, u64>> IntervalLattice::chain_length_spectrum() const {
    // counts of maximal chains from bottom to top, grouped by length
    std::vector<std::map<u32, u64>> cnt(nodes.size());
    cnt[bottom][0] = 1;
    for (u32 x = 0; x < nodes.size(); ++x) {
        if (cnt[x].empty()) continue;
        for (u32 c : up[x])
            for (auto& [len, k] : cnt[x]) cnt[covers[c].hi][len + 1] += k;
    }
    std::vector<std::pair<u32, u64>> out(cnt[top].begin(), cnt[top].end());
    return out;
}

// ---------------------------------------------------------------------------

bool is_minimal_extension(const RingTable& S, const Submodule& T,
                          const Submodule& U) {
    if (!U.contains(T)) fail(errc::not_comparable, "T is not contained in U");
    if (T == U) return false;
    for (const Vec& x : U.elements()) {
        if (T.contains(x)) continue;
        if (adjoin(S, T, x.data()) != U) return false;
    }
    return true;
}

std::vector<Submodule> support_of_pair(const RingTable& S, const Submodule& T,
                                       const Submodule& U) {
    std::vector<Submodule> out;
    std::vector<Vec> prim = primitive_idempotents_of_subring(S, T);
    u32 d = S.rank();
    for (const Submodule& M : maximal_ideals_of_subring(S, T)) {
        const Vec* e = nullptr;
        for (const Vec& p : prim)
            if (!M.contains(p)) {
                e = &p;
                break;
            }
        if (!e) fail(errc::classification_contradiction, "maximal ideal without idempotent");
        std::vector<Vec> et, eu;
        for (u32 i = 0; i < T.rows(); ++i) {
            Vec t(T.row(i), T.row(i) + d);
            et.push_back(S.mul(*e, t));
        }
        for (u32 i = 0; i < U.rows(); ++i) {
            Vec t(U.row(i), U.row(i) + d);
            eu.push_back(S.mul(*e, t));
        }
        if (Submodule::span(S.modulus(), d, et).size() !=
            Submodule::span(S.modulus(), d, eu).size())
            out.push_back(M);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Submodule crucial_ideal(const RingTable& S, const Submodule& T,
                        const Submodule& U) {
    std::vector<Submodule> supp = support_of_pair(S, T, U);
    if (supp.size() != 1)
        fail(errc::classification_contradiction,
             "minimal extension must have singleton support",
             {static_cast<long long>(supp.size()), -1, -1});
    return supp[0];
}

bool is_spectrally_bijective(const RingTable& S, const Submodule& T,
                             const Submodule& U) {
    std::vector<Submodule> maxs_t = maximal_ideals_of_subring(S, T);
    std::vector<Submodule> maxs_u = maximal_ideals_of_subring(S, U);
    for (const Submodule& M : maxs_t) {
        u32 over = 0;
        for (const Submodule& N : maxs_u)
            if (N.intersect(T) == M) ++over;
        if (over != 1) return false;
    }
    return true;
}

MinimalType classify_minimal(const RingTable& S, const Submodule& T,
                             const Submodule& U) {
    if (!is_minimal_extension(S, T, U))
        fail(errc::not_minimal, "cover classification needs a minimal extension");
    Submodule M = conductor_of_pair(S, T, U);
    std::vector<Submodule> maxs_t = maximal_ideals_of_subring(S, T);
    if (std::find(maxs_t.begin(), maxs_t.end(), M) == maxs_t.end())
        fail(errc::classification_contradiction,
             "conductor of a minimal extension is not maximal in the base");

    std::vector<Submodule> over;
    for (const Submodule& N : maximal_ideals_of_subring(S, U))
        if (N.contains(M)) over.push_back(N);

    u64 res_t = T.size() / M.size();
    MinimalType mt;
    mt.crucial_ideal = M;
    if (over.size() == 1 && over[0] == M) {
        // M stays maximal in U: residue fields extend
        u64 res_u = U.size() / over[0].size();
        u32 deg = 0;
        u64 acc = 1;
        while (acc < res_u) {
            acc *= res_t;
            ++deg;
        }
        if (acc != res_u || deg < 2)
            fail(errc::classification_contradiction, "inert residue degree");
        mt.kind = MinKind::inert;
        mt.residue_degree = deg;
        return mt;
    }
    if (over.size() == 2) {
        for (const Submodule& N : over)
            if (U.size() / N.size() != res_t)
                fail(errc::classification_contradiction, "decomposed residues differ");
        mt.kind = MinKind::decomposed;
        mt.residue_degree = 1;
        return mt;
    }
    if (over.size() == 1) {
        const Submodule& N = over[0];
        if (U.size() / N.size() != res_t)
            fail(errc::classification_contradiction, "ramified residue differs");
        // N^2 within M and dim_{T/M} U/M = 2
        std::vector<Vec> sq;
        Vec prod(S.rank());
        for (u32 i = 0; i < N.rows(); ++i)
            for (u32 j = i; j < N.rows(); ++j) {
                S.mul_into(N.row(i), N.row(j), prod.data());
                sq.push_back(prod);
            }
        if (!M.contains(Submodule::span(S.modulus(), S.rank(), sq)))
            fail(errc::classification_contradiction, "ramified N^2 not inside M");
        if (U.size() / M.size() != res_t * res_t)
            fail(errc::classification_contradiction, "ramified dimension is not 2");
        mt.kind = MinKind::ramified;
        mt.residue_degree = 1;
        return mt;
    }
    fail(errc::classification_contradiction,
         "minimal extension with unexpected fiber size",
         {static_cast<long long>(over.size()), -1, -1});
}

// ---------------------------------------------------------------------------

IntervalLattice enumerate_interval(const Extension& E, u32 node_budget,
                                   const Submodule* top_in,
                                   u64 adjunction_shuffle_seed) {
    const RingTable& S = *E.S;
    u32 d = S.rank();
    Submodule top = top_in ? *top_in : Submodule::full(S.modulus(), d);
    if (!top.contains(E.R)) fail(errc::not_comparable, "R not inside top");

    std::vector<Vec> top_elements = top.elements();
    std::sort(top_elements.begin(), top_elements.end());
    if (adjunction_shuffle_seed) {
        std::mt19937_64 rng(adjunction_shuffle_seed);
        std::shuffle(top_elements.begin(), top_elements.end(), rng);
    }

    std::unordered_set<Submodule, SubmoduleHash> seen;
    std::vector<Submodule> queue;
    seen.insert(E.R);
    queue.push_back(E.R);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Submodule cur = queue[qi];  // copy: queue may reallocate
        for (const Vec& x : top_elements) {
            if (cur.contains(x)) continue;
            Submodule next = adjoin(S, cur, x.data());
            if (seen.insert(next).second) {
                queue.push_back(std::move(next));
                if (seen.size() > node_budget)
                    fail(errc::node_budget_exceeded,
                         "interval enumeration exceeded the node budget (partial count " +
                             std::to_string(seen.size()) + ")",
                         {static_cast<long long>(seen.size()),
                          static_cast<long long>(node_budget), -1});
            }
        }
    }

    IntervalLattice L;
    L.S = E.S;
    L.R = E.R;
    L.nodes.assign(queue.begin(), queue.end());
    std::sort(L.nodes.begin(), L.nodes.end());
    u32 n = static_cast<u32>(L.nodes.size());
    L.bottom = 0;
    L.top = n - 1;

    // containment matrix
    L.leq.resize(n);
    for (u32 i = 0; i < n; ++i) {
        L.leq.set(i, i);
        for (u32 j = i + 1; j < n; ++j) {
            if (L.nodes[j].size() % L.nodes[i].size()) continue;
            if (L.nodes[i].size() == L.nodes[j].size()) continue;
            if (L.nodes[j].contains(L.nodes[i])) L.leq.set(i, j);
        }
    }

    // covers via transitive reduction
    L.up.resize(n);
    L.down.resize(n);
    for (u32 i = 0; i < n; ++i) {
        for (u32 j = i + 1; j < n; ++j) {
            if (!L.le(i, j)) continue;
            bool direct = true;
            for (u32 k = i + 1; k < j && direct; ++k)
                if (L.le(i, k) && L.le(k, j)) direct = false;
            if (!direct) continue;
            CoverEdge e;
            e.lo = i;
            e.hi = j;
            e.type = classify_minimal(S, L.nodes[i], L.nodes[j]);
            u32 idx = static_cast<u32>(L.covers.size());
            L.covers.push_back(std::move(e));
            L.up[i].push_back(idx);
            L.down[j].push_back(idx);
        }
    }

    // longest path bottom -> top
    std::vector<u32> longest(n, 0);
    for (u32 x = 0; x < n; ++x)
        for (u32 c : L.up[x])
            longest[L.covers[c].hi] =
                std::max(longest[L.covers[c].hi], longest[x] + 1);
    L.length = longest[L.top];

    L.node_flags.assign(n, 0);
    for (u32 c : L.up[L.bottom]) L.node_flags[L.covers[c].hi] |= kNodeAtom;

    L.node_max_ideals.resize(n);
    for (u32 i = 0; i < n; ++i)
        L.node_max_ideals[i] = maximal_ideals_of_subring(S, L.nodes[i]);

    return L;
}

}  // namespace ringlat
