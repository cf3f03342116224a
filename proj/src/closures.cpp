#include "ringlat/closures.hpp"

#include <algorithm>

#include "ringlat/errors.hpp"

namespace ringlat {

Submodule seminormalization(const RingTable& S, const Submodule& T,
                            const Submodule* U_in) {
    Submodule U = U_in ? *U_in : Submodule::full(S.modulus(), S.rank());
    std::vector<Vec> ambient = U.elements();
    Submodule cur = T;
    while (true) {
        std::vector<Vec> add;
        for (const Vec& b : ambient) {
            if (cur.contains(b)) continue;
            Vec b2 = S.mul(b, b);
            if (!cur.contains(b2)) continue;
            if (cur.contains(S.mul(b2, b))) add.push_back(b);
        }
        if (add.empty()) return cur;
        u32 d = S.rank();
        for (u32 i = 0; i < cur.rows(); ++i)
            add.emplace_back(cur.row(i), cur.row(i) + d);
        cur = span_closure(S, add);
    }
}

Submodule t_closure(const RingTable& S, const Submodule& T,
                    const Submodule* U_in) {
    Submodule U = U_in ? *U_in : Submodule::full(S.modulus(), S.rank());
    std::vector<Vec> ambient = U.elements();
    Submodule cur = T;
    while (true) {
        std::vector<Vec> add;
        std::vector<Vec> cur_elements = cur.elements();
        for (const Vec& b : ambient) {
            if (cur.contains(b)) continue;
            Vec b2 = S.mul(b, b);
            Vec b3 = S.mul(b2, b);
            // b^2 - r b, b^3 - r b^2 in cur for some r in cur
            for (const Vec& r : cur_elements) {
                if (!cur.contains(S.sub(b2, S.mul(r, b)))) continue;
                if (!cur.contains(S.sub(b3, S.mul(r, b2)))) continue;
                add.push_back(b);
                break;
            }
        }
        if (add.empty()) return cur;
        u32 d = S.rank();
        for (u32 i = 0; i < cur.rows(); ++i)
            add.emplace_back(cur.row(i), cur.row(i) + d);
        cur = span_closure(S, add);
    }
}

TypeFlags classify_type(const RingTable& S, const Submodule& T,
                        const Submodule& U) {
    if (!U.contains(T)) fail(errc::not_comparable, "T not inside U");
    TypeFlags f;
    std::vector<Submodule> maxs_u = maximal_ideals_of_subring(S, U);
    std::vector<Submodule> maxs_t = maximal_ideals_of_subring(S, T);
    bool infra = true;
    for (const Submodule& N : maxs_u) {
        Submodule M = N.intersect(T);
        if (U.size() / N.size() != T.size() / M.size()) {
            infra = false;
            break;
        }
    }
    f.infra_integral = infra;
    f.subintegral = infra && maxs_u.size() == maxs_t.size();
    f.seminormal = (seminormalization(S, T, &U) == T);
    f.t_closed = (t_closure(S, T, &U) == T);
    return f;
}

CanonicalDecomposition canonical_decomposition(const Extension& E) {
    CanonicalDecomposition d;
    d.seminormalization = seminormalization(*E.S, E.R);
    d.t_closure = t_closure(*E.S, E.R);
    d.integral_closure = Submodule::full(E.S->modulus(), E.S->rank());
    return d;
}

void flag_closure_nodes(IntervalLattice& L, const CanonicalDecomposition& dec) {
    if (auto p = L.find(dec.seminormalization)) L.node_flags[*p] |= kNodePlusClosure;
    if (auto t = L.find(dec.t_closure)) L.node_flags[*t] |= kNodeTClosure;
}

}  // namespace ringlat
