#include "ringlat/checks.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ringlat/errors.hpp"

namespace ringlat {

namespace {

struct Sink {
    std::vector<std::string>* out;
    void operator()(bool ok, const std::string& what) const {
        if (!ok) out->push_back(what);
    }
};

// delta of an extension given directly (used for localized/quotient/split
// copies); enumerates its own lattice
bool delta_of(const Extension& E, u32 budget) {
    return is_delta_bruteforce(enumerate_interval(E, budget)).is_delta;
}

}  // namespace

std::vector<std::string> check_instance(const Extension& E,
                                        const CheckOptions& opts) {
    std::vector<std::string> bad;
    Sink ck{&bad};
    const u32 budget = opts.node_budget;

    AnalysisBundle b = analyze_extension(E, budget);
    const IntervalLattice& L = b.lattice;
    const MeetJoinTables& T = b.tables;
    const RingTable& S = *E.S;
    Submodule full = Submodule::full(S.modulus(), S.rank());
    bool delta = b.brute.is_delta;

    // route agreement (the central invariant)
    ck(b.generators.is_delta == delta, "delta route disagreement: generators");
    ck(b.characterized.is_delta == delta,
       "delta route disagreement: characterized (route " +
           std::string(delta_route_name(b.characterized.route)) + ")");

    // delta implies modular (and the report asserts the implication chain)
    ck(!delta || b.report.modular, "delta instance must be modular");
    // arithmetic implies delta, with the two arithmetic code paths agreeing
    bool arith = is_arithmetic(E, budget, true);
    ck(arith == b.report.arithmetic, "arithmetic recomputation changed");
    ck(!arith || delta, "arithmetic instance must be delta");

    // infra-integral five-way equivalence
    if (b.flags.infra_integral && !E.trivial()) {
        bool modular = b.report.modular;
        bool semi = b.report.semimodular;
        bool additive = true;
        for (u32 i = 0; i < L.nodes.size() && additive; ++i)
            for (u32 j = i + 1; j < L.nodes.size(); ++j) {
                u32 m = T.meet_of(i, j), v = T.join_of(i, j);
                if (L.interval_length_minmax(m, i).second +
                        L.interval_length_minmax(m, j).second !=
                    L.interval_length_minmax(m, v).second) {
                    additive = false;
                    break;
                }
            }
        bool cover_l2 = true;
        for (u32 t = 0; t < L.nodes.size() && cover_l2; ++t) {
            const auto& ups = L.up[t];
            for (size_t x = 0; x < ups.size() && cover_l2; ++x)
                for (size_t y = x + 1; y < ups.size(); ++y) {
                    u32 v = T.join_of(L.covers[ups[x]].hi, L.covers[ups[y]].hi);
                    if (L.interval_length_minmax(t, v).second != 2) {
                        cover_l2 = false;
                        break;
                    }
                }
        }
        ck(delta == modular && delta == semi && delta == additive &&
               delta == cover_l2,
           "infra-integral five-way equivalence violated");
        if (L.length == 2) ck(delta, "infra-integral length-2 instance must be delta");
    }

    // length-2 law: delta except t-closed with one supported ideal and more
    // than 3 nodes
    if (L.length == 2) {
        bool exceptional = b.flags.t_closed && ext_msupp(E).size() == 1 &&
                           L.node_count() > 3;
        ck(delta == !exceptional, "length-2 delta law violated");
    }
    // B2 law: such an instance is delta unless it is t-closed over a single
    // supported maximal ideal (with two supported ideals a t-closed B2
    // extension is locally minimal, hence arithmetic and delta)
    if (b.report.b2)
        ck(delta == !(b.flags.t_closed && ext_msupp(E).size() == 1),
           "B2 delta law violated");

    // modular law: delta iff tR within S is arithmetic
    if (b.report.modular) {
        bool tarith = is_arithmetic_pair(E.S, b.dec.t_closure, full, budget);
        ck(delta == tarith, "modular law (t-closure arithmetic) violated");
    }

    // chain labels match the type flags
    {
        bool all_ram = true, all_nd = true, all_dec = true, all_inert = true,
             all_ri = true;
        for (const CoverEdge& c : L.covers) {
            all_ram &= c.type.kind == MinKind::ramified;
            all_nd &= c.type.kind != MinKind::inert;
            all_dec &= c.type.kind == MinKind::decomposed;
            all_inert &= c.type.kind == MinKind::inert;
            all_ri &= c.type.kind != MinKind::decomposed;
        }
        ck(b.flags.subintegral == all_ram, "subintegral chain-label mismatch");
        ck(b.flags.infra_integral == all_nd, "infra-integral chain-label mismatch");
        ck((b.flags.seminormal && b.flags.infra_integral) == all_dec,
           "seminormal infra-integral chain-label mismatch");
        ck(b.flags.t_closed == all_inert, "t-closed chain-label mismatch");
        ck(is_spectrally_bijective(S, E.R, full) == all_ri,
           "spectral bijectivity chain-label mismatch");
    }

    // covers: crucial ideal equals the conductor and is maximal below
    for (const CoverEdge& c : L.covers) {
        ck(c.type.crucial_ideal ==
               conductor_of_pair(S, L.nodes[c.lo], L.nodes[c.hi]),
           "crucial ideal differs from the conductor");
        const auto& maxs = L.node_max_ideals[c.lo];
        ck(std::find(maxs.begin(), maxs.end(), c.type.crucial_ideal) != maxs.end(),
           "crucial ideal is not maximal in the lower ring");
    }

    // crosswise exchange and the cover-pair case analysis
    for (u32 t = 0; t < L.nodes.size(); ++t) {
        for (u32 c1i : L.up[t]) {
            const CoverEdge& c1 = L.covers[c1i];
            for (u32 c2i : L.up[c1.hi]) {
                const CoverEdge& c2 = L.covers[c2i];
                Submodule P = c2.type.crucial_ideal.intersect(L.nodes[t]);
                if (c1.type.crucial_ideal.contains(P)) continue;
                ck(L.interval_node_count(t, c2.hi) == 4,
                   "crosswise exchange: interval must have 4 nodes");
                for (u32 x : L.interval_nodes(t, c2.hi)) {
                    if (x == t || x == c1.hi || x == c2.hi) continue;
                    const CoverEdge* lo_x = L.cover_between(t, x);
                    const CoverEdge* x_hi = L.cover_between(x, c2.hi);
                    if (!lo_x || !x_hi) {
                        ck(false, "crosswise exchange: missing swapped covers");
                        continue;
                    }
                    ck(lo_x->type.kind == c2.type.kind &&
                           x_hi->type.kind == c1.type.kind,
                       "crosswise exchange: types must swap");
                }
            }
        }
        const auto& ups = L.up[t];
        for (size_t a = 0; a < ups.size(); ++a)
            for (size_t bidx = a + 1; bidx < ups.size(); ++bidx) {
                const CoverEdge& ca = L.covers[ups[a]];
                const CoverEdge& cb = L.covers[ups[bidx]];
                u32 j = T.join_of(ca.hi, cb.hi);
                u32 len = L.interval_length_minmax(t, j).second;
                if (ca.type.crucial_ideal != cb.type.crucial_ideal) {
                    ck(L.interval_node_count(t, j) == 4,
                       "distinct crucial ideals: compositum interval must have 4 nodes");
                    ck(L.interval_is_b2(t, j) && interval_delta(L, t, j),
                       "distinct crucial ideals: compositum must be B2 and delta");
                    continue;
                }
                bool a_inert = ca.type.kind == MinKind::inert;
                bool b_inert = cb.type.kind == MinKind::inert;
                if (a_inert != b_inert) {
                    // one inert, one not: the interval is not catenarian
                    auto [mn, mx] = L.interval_length_minmax(t, j);
                    ck(mn != mx,
                       "inert/non-inert same-ideal pair must break catenarity");
                } else if (!a_inert) {
                    // both non-inert: fiber ideal products decide length 2 vs 3
                    bool prod_in_m = false;
                    const Submodule& M = ca.type.crucial_ideal;
                    for (const Submodule& Pm : L.node_max_ideals[ca.hi]) {
                        if (!Pm.contains(M)) continue;
                        for (const Submodule& Qm : L.node_max_ideals[cb.hi]) {
                            if (!Qm.contains(M)) continue;
                            std::vector<Vec> prods;
                            Vec pr(S.rank());
                            for (u32 x = 0; x < Pm.rows(); ++x)
                                for (u32 y = 0; y < Qm.rows(); ++y) {
                                    S.mul_into(Pm.row(x), Qm.row(y), pr.data());
                                    prods.push_back(pr);
                                }
                            if (M.contains(Submodule::span(S.modulus(), S.rank(), prods)))
                                prod_in_m = true;
                        }
                    }
                    ck(len == (prod_in_m ? 2u : 3u),
                       "same-ideal non-inert pair: wrong compositum length");
                }
            }
    }

    // modular lattices: every pair of distinct covers joins at height 2
    if (b.report.modular) {
        for (u32 t = 0; t < L.nodes.size(); ++t) {
            const auto& ups = L.up[t];
            for (size_t x = 0; x < ups.size(); ++x)
                for (size_t y = x + 1; y < ups.size(); ++y) {
                    u32 v = T.join_of(L.covers[ups[x]].hi, L.covers[ups[y]].hi);
                    ck(L.interval_length_minmax(t, v).second == 2,
                       "modular: cover pair join must have length 2");
                }
        }
    }

    // closures: fixpoints match the lattice oracle; idempotent
    {
        Submodule best_sub = E.R, best_infra = E.R;
        for (const Submodule& node : L.nodes) {
            TypeFlags f = classify_type(S, E.R, node);
            if (f.subintegral && node.size() > best_sub.size()) best_sub = node;
            if (f.infra_integral && node.size() > best_infra.size())
                best_infra = node;
        }
        ck(b.dec.seminormalization == best_sub,
           "seminormalization differs from the lattice oracle");
        ck(b.dec.t_closure == best_infra,
           "t-closure differs from the lattice oracle");
        ck(seminormalization(S, b.dec.seminormalization) == b.dec.seminormalization,
           "seminormalization is not idempotent");
        ck(t_closure(S, b.dec.t_closure) == b.dec.t_closure,
           "t-closure is not idempotent");
    }

    // localization transfer; closures commute; size partition
    {
        bool locally_delta = true;
        for (const Submodule& M : ext_msupp(E)) {
            LocalizedExtension loc = localize_extension(E, M);
            if (!delta_of(loc.ext, budget)) locally_delta = false;
            // (+R)_M == +(R_M)
            std::vector<Vec> gens;
            for (u32 i = 0; i < b.dec.seminormalization.rows(); ++i) {
                Vec t(b.dec.seminormalization.row(i),
                      b.dec.seminormalization.row(i) + S.rank());
                gens.push_back(loc.map.to_local(S.mul(loc.idem, t).data()));
            }
            ck(Submodule::span(loc.ext.S->modulus(), loc.ext.S->rank(), gens) ==
                   seminormalization(*loc.ext.S, loc.ext.R),
               "seminormalization does not commute with localization");
        }
        ck(delta == locally_delta, "delta localization transfer violated");

        u64 prod = 1;
        for (const Submodule& M : maximal_ideals_of_subring(S, E.R))
            prod *= localize_extension(E, M).ext.S->size();
        ck(prod == S.size(), "localization size partition violated");
    }

    // quotient transfer by the conductor, when the quotient stays free
    {
        Submodule cond = ext_conductor(E);
        ck(E.R.contains(cond) && is_ideal_of(S, full, cond),
           "conductor is not a shared ideal");
        if (cond.size() > 1 && cond.size() < S.size()) {
            try {
                QuotientMap qm;
                Extension Eq = quotient_extension(E, cond, &qm);
                ck(cond.size() * qm.table->size() == S.size(),
                   "quotient size law violated");
                ck(delta == delta_of(Eq, budget),
                   "delta conductor-quotient transfer violated");
            } catch (const error& e) {
                if (e.code() != errc::not_free) throw;
            }
        }
    }

    // product transfer across the idempotents of R
    if (maximal_ideals_of_subring(S, E.R).size() > 1) {
        bool factors_delta = true;
        for (const LocalizedExtension& part : split_extension(E))
            if (!delta_of(part.ext, budget)) factors_delta = false;
        ck(delta == factors_delta, "delta product transfer violated");
    }

    // small delta implies delta and simple
    if (b.small_delta && !E.trivial()) {
        ck(delta, "small-delta instance must be delta");
        ck(b.simple_gen.has_value(), "small-delta instance must be simple");
    }

    // delta restricts to sub-intervals (sampled deterministically)
    if (delta && L.node_count() > 2) {
        std::mt19937_64 rng(L.node_count() * 1000003ull);
        for (u32 s = 0; s < opts.subinterval_samples; ++s) {
            u32 i = static_cast<u32>(rng() % L.node_count());
            u32 j = static_cast<u32>(rng() % L.node_count());
            if (!L.le(i, j)) continue;
            ck(interval_delta(L, i, j), "delta must restrict to sub-intervals");
        }
    }

    // pinched instances: delta iff every pinch segment is delta
    if (b.report.pinched_at) {
        std::vector<u32> chain = *b.report.pinched_at;
        chain.insert(chain.begin(), L.bottom);
        chain.push_back(L.top);
        bool steps = true;
        for (size_t i = 0; i + 1 < chain.size(); ++i)
            if (!interval_delta(L, chain[i], chain[i + 1])) steps = false;
        ck(delta == steps, "pinched-chain delta law violated");
    }

    // pointwise minimal classification agrees with brute force locally
    for (const Submodule& M : ext_msupp(E)) {
        LocalizedExtension loc = localize_extension(E, M);
        GenSpanCache cache = build_gen_span_cache(loc.ext);
        PwmResult p = pointwise_minimal(loc.ext, cache);
        if (p.delta_predicted)
            ck(*p.delta_predicted == delta_of(loc.ext, budget),
               std::string("pointwise-minimal prediction violated (class ") +
                   pwm_class_name(p.cls) + ")");
    }

    // subintegral with conductor locally below the maximal ideal: delta
    if (b.flags.subintegral && !E.trivial()) {
        bool hyp = true;
        for (const Submodule& M : ext_msupp(E)) {
            LocalizedExtension loc = localize_extension(E, M);
            Submodule lcond = ext_conductor(loc.ext);
            auto lmaxs = maximal_ideals_of_subring(*loc.ext.S, loc.ext.R);
            if (lmaxs.size() != 1 || lcond == lmaxs[0]) hyp = false;
        }
        if (hyp) ck(delta, "subintegral small-conductor law violated");
    }

    // boolean lattices over a local base: delta iff minimal or infra-integral
    if (b.report.boolean_lattice && !E.trivial() &&
        maximal_ideals_of_subring(S, E.R).size() == 1) {
        bool expect = (L.length <= 1) || b.flags.infra_integral;
        ck(delta == expect, "boolean local delta law violated");
    }

    // re-enumeration with a shuffled adjunction order is identical
    if (opts.order_independence) {
        IntervalLattice L2 = enumerate_interval(E, budget, nullptr, 0x5eedull);
        bool same = L2.node_count() == L.node_count();
        if (same)
            for (size_t i = 0; i < L.nodes.size(); ++i)
                same &= L.nodes[i] == L2.nodes[i];
        ck(same, "enumeration depends on the adjunction order");
    }

    return bad;
}

FuzzOutcome run_fuzz_seed(u64 seed, const FuzzParams& params,
                          const CheckOptions& opts) {
    FuzzInstance inst = fuzz_instance(seed, params);
    FuzzOutcome out;
    out.seed = seed;
    out.desc = inst.desc;
    CheckOptions o = opts;
    o.node_budget = std::max(o.node_budget, params.max_nodes);
    try {
        out.violations = check_instance(inst.ext, o);
        out.nodes = enumerate_interval(inst.ext, o.node_budget).node_count();
    } catch (const error& e) {
        out.violations.push_back(std::string("exception: ") + e.what());
    }
    return out;
}

}  // namespace ringlat
