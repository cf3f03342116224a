#include "ringlat/extension.hpp"

#include <algorithm>

#include "ringlat/errors.hpp"

namespace ringlat {

Extension make_extension(TablePtr S, const std::vector<Vec>& gens) {
    Extension e;
    e.R = span_closure(*S, gens);
    e.S = std::move(S);
    return e;
}

Submodule ext_conductor(const Extension& E) { return conductor(*E.S, E.R); }

std::vector<Submodule> ext_msupp(const Extension& E) {
    std::vector<Submodule> out;
    std::vector<Vec> prim = primitive_idempotents_of_subring(*E.S, E.R);
    std::vector<Submodule> maxs = maximal_ideals_of_subring(*E.S, E.R);
    for (const Submodule& M : maxs) {
        // find the primitive idempotent of R outside M
        const Vec* e = nullptr;
        for (const Vec& p : prim)
            if (!M.contains(p)) {
                e = &p;
                break;
            }
        if (!e) fail(errc::classification_contradiction, "no idempotent for maximal ideal");
        u64 r_sz = 0, s_sz = 0;
        {
            std::vector<Vec> gens;
            for (u32 i = 0; i < E.R.rows(); ++i) {
                Vec t(E.R.row(i), E.R.row(i) + E.S->rank());
                gens.push_back(E.S->mul(*e, t));
            }
            r_sz = Submodule::span(E.S->modulus(), E.S->rank(), gens).size();
        }
        {
            std::vector<Vec> gens;
            for (u32 i = 0; i < E.S->rank(); ++i) {
                Vec b(E.S->rank(), 0);
                b[i] = 1;
                gens.push_back(E.S->mul(*e, b));
            }
            s_sz = Submodule::span(E.S->modulus(), E.S->rank(), gens).size();
        }
        if (r_sz != s_sz) out.push_back(M);
    }
    std::sort(out.begin(), out.end());
    return out;
}

LocalizedExtension localize_extension(const Extension& E, const Submodule& M) {
    std::vector<Submodule> maxs = maximal_ideals_of_subring(*E.S, E.R);
    if (std::find(maxs.begin(), maxs.end(), M) == maxs.end())
        fail(errc::not_maximal, "localization requires a maximal ideal of R");
    std::vector<Vec> prim = primitive_idempotents_of_subring(*E.S, E.R);
    const Vec* e = nullptr;
    for (const Vec& p : prim)
        if (!M.contains(p)) {
            if (e) fail(errc::classification_contradiction, "two idempotents escape M");
            e = &p;
        }
    if (!e) fail(errc::classification_contradiction, "no idempotent escapes M");

    u32 d = E.S->rank();
    std::vector<Vec> ws;
    for (u32 i = 0; i < d; ++i) {
        Vec b(d, 0);
        b[i] = 1;
        ws.push_back(E.S->mul(*e, b));
    }
    Submodule W = Submodule::span(E.S->modulus(), d, ws);
    LocalizedExtension loc;
    loc.idem = *e;
    loc.map = rebase_ring(E.S, W, *e, E.S->name() + ".loc");

    std::vector<Vec> rgens;
    for (u32 i = 0; i < E.R.rows(); ++i) {
        Vec t(E.R.row(i), E.R.row(i) + d);
        rgens.push_back(loc.map.to_local(E.S->mul(*e, t).data()));
    }
    loc.ext.S = loc.map.table;
    loc.ext.R = Submodule::span(loc.map.table->modulus(), loc.map.table->rank(), rgens);
    if (!is_unital_subring(*loc.ext.S, loc.ext.R))
        fail(errc::classification_contradiction, "localized subring is not a subring");
    return loc;
}

RingTable direct_product(const RingTable& A, const RingTable& B,
                         const std::string& name, const Caps& caps) {
    u32 da = A.rank(), db = B.rank();
    if (A.modulus() == B.modulus()) {
        u32 n = A.modulus(), d = da + db;
        std::vector<std::vector<Vec>> mul(d);
        for (u32 i = 0; i < d; ++i) {
            mul[i].resize(i + 1);
            for (u32 j = 0; j <= i; ++j) {
                Vec c(d, 0);
                if (i < da && j < da) {
                    const u32* p = A.basis_product(i, j);
                    std::copy(p, p + da, c.begin());
                } else if (i >= da && j >= da) {
                    const u32* p = B.basis_product(i - da, j - da);
                    std::copy(p, p + db, c.begin() + da);
                }
                mul[i][j] = std::move(c);
            }
        }
        Vec unit(d, 0);
        std::copy(A.unit().begin(), A.unit().end(), unit.begin());
        std::copy(B.unit().begin(), B.unit().end(), unit.begin() + da);
        return RingTable::validate(n, d, mul, unit, name, caps);
    }
    // Mixed moduli: free over the lcm only when the moduli are coprime and
    // the ranks agree (then the additive group is (Z/n1n2)^d by CRT).
    if (gcd_u32(A.modulus(), B.modulus()) != 1 || da != db)
        fail(errc::not_free,
             "product is not a free module over a single Z/n; analyze factors "
             "separately");
    u32 n1 = A.modulus(), n2 = B.modulus();
    u64 n = static_cast<u64>(n1) * n2;
    // CRT coefficients: x = a*c1 + b*c2 with c1 = 1 mod n1, 0 mod n2.
    u64 c1 = static_cast<u64>(n2) * mod_inverse(n2 % n1, n1) % n;
    u64 c2 = static_cast<u64>(n1) * mod_inverse(n1 % n2, n2) % n;
    auto crt = [&](u32 a, u32 b) {
        return static_cast<u32>((a * c1 + b * c2) % n);
    };
    u32 d = da;
    std::vector<std::vector<Vec>> mul(d);
    for (u32 i = 0; i < d; ++i) {
        mul[i].resize(i + 1);
        for (u32 j = 0; j <= i; ++j) {
            Vec c(d);
            const u32* pa = A.basis_product(i, j);
            const u32* pb = B.basis_product(i, j);
            for (u32 k = 0; k < d; ++k) c[k] = crt(pa[k], pb[k]);
            mul[i][j] = std::move(c);
        }
    }
    Vec unit(d);
    for (u32 k = 0; k < d; ++k) unit[k] = crt(A.unit()[k], B.unit()[k]);
    return RingTable::validate(static_cast<u32>(n), d, mul, unit, name, caps);
}

std::vector<LocalizedExtension> split_extension(const Extension& E) {
    std::vector<Submodule> maxs = maximal_ideals_of_subring(*E.S, E.R);
    std::vector<Vec> prim = primitive_idempotents_of_subring(*E.S, E.R);
    std::vector<LocalizedExtension> out;
    if (prim.size() <= 1) {
        LocalizedExtension whole;
        whole.ext = E;
        whole.idem = E.S->unit();
        out.push_back(std::move(whole));
        return out;
    }
    std::sort(prim.begin(), prim.end());
    for (const Vec& e : prim) {
        // localize at the unique maximal ideal avoiding e
        for (const Submodule& M : maxs)
            if (!M.contains(e)) {
                out.push_back(localize_extension(E, M));
                break;
            }
    }
    return out;
}

Vec QuotientMap::project(const u32* ambient_v) const {
    u32 d = ambient->rank(), n = ambient->modulus();
    Vec out(kept_cols.size(), 0);
    for (size_t i = 0; i < kept_cols.size(); ++i) {
        u32 c = kept_cols[i];
        u64 y = 0;
        for (u32 t = 0; t < d; ++t)
            y += static_cast<u64>(ambient_v[t]) * coord[static_cast<size_t>(t) * d + c];
        out[i] = static_cast<u32>(y % n % moduli[i]);
    }
    return out;
}

Submodule QuotientMap::project_submodule(const Submodule& sub) const {
    std::vector<Vec> gens;
    for (u32 i = 0; i < sub.rows(); ++i) gens.push_back(project(sub.row(i)));
    return Submodule::span(table->modulus(), table->rank(), gens);
}

QuotientMap quotient_ring(TablePtr S, const Submodule& I, const Caps& caps) {
    if (!is_ideal_of(*S, Submodule::full(S->modulus(), S->rank()), I))
        fail(errc::bad_input, "quotient requires an ideal of S");
    u32 n = S->modulus(), d = S->rank();
    std::vector<Vec> rel;
    for (u32 i = 0; i < I.rows(); ++i) rel.emplace_back(I.row(i), I.row(i) + d);
    DiagonalForm df = snf_diagonalize(n, d, rel);

    QuotientMap qm;
    qm.ambient = S;
    qm.coord = df.coord;
    u32 m = 0;
    for (u32 c = 0; c < d; ++c) {
        u32 mc = df.diag[c] == 0 ? n : df.diag[c];
        if (mc == 1) continue;
        if (m == 0) m = mc;
        if (mc != m)
            fail(errc::not_free,
                 "quotient module is not free: invariant factors " +
                     std::to_string(m) + "," + std::to_string(mc));
        qm.kept_cols.push_back(c);
        qm.moduli.push_back(mc);
    }
    if (qm.kept_cols.empty())
        fail(errc::bad_input, "quotient by the unit ideal");

    u32 k = static_cast<u32>(qm.kept_cols.size());
    // representatives of the new basis in the ambient ring
    std::vector<Vec> lifts;
    for (u32 c : qm.kept_cols) lifts.push_back(df.basis_row(c));

    std::vector<std::vector<Vec>> mul(k);
    Vec prod(d);
    for (u32 i = 0; i < k; ++i) {
        mul[i].resize(i + 1);
        for (u32 j = 0; j <= i; ++j) {
            S->mul_into(lifts[i].data(), lifts[j].data(), prod.data());
            mul[i][j] = qm.project(prod.data());
        }
    }
    Vec unit = qm.project(S->unit().data());
    qm.table = std::make_shared<const RingTable>(
        RingTable::validate(m, k, mul, unit, S->name() + "/I", caps));
    return qm;
}

Extension quotient_extension(const Extension& E, const Submodule& I,
                             QuotientMap* out_map) {
    if (!E.R.contains(I))
        fail(errc::not_shared_ideal, "ideal is not contained in R");
    if (!is_ideal_of(*E.S, Submodule::full(E.S->modulus(), E.S->rank()), I))
        fail(errc::not_shared_ideal, "not an ideal of S");
    QuotientMap qm = quotient_ring(E.S, I);
    Extension out;
    out.S = qm.table;
    out.R = qm.project_submodule(E.R);
    if (!is_unital_subring(*out.S, out.R))
        fail(errc::classification_contradiction, "projected subring is not a subring");
    if (out_map) *out_map = std::move(qm);
    return out;
}

}  // namespace ringlat
