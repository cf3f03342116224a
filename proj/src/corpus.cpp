#include "ringlat/corpus.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "ringlat/blocks.hpp"
#include "ringlat/errors.hpp"

namespace ringlat {

namespace {

// --- independent counting oracles -------------------------------------------

// Set partitions of an n-set, counted by enumerating restricted growth
// strings; subrings of F2^n containing the diagonal correspond to partitions.
u64 partition_count(u32 n) {
    if (n == 0) return 1;
    std::vector<u32> rgs(n, 0);
    u64 count = 0;
    std::function<void(u32, u32)> rec = [&](u32 pos, u32 maxv) {
        if (pos == n) {
            ++count;
            return;
        }
        for (u32 v = 0; v <= maxv + 1; ++v) {
            rgs[pos] = v;
            rec(pos + 1, std::max(maxv, v));
        }
    };
    rec(1, 0);
    return count;
}

// Subfields of F_{2^k} correspond to divisors of k.
u64 divisor_count(u32 k) {
    u64 c = 0;
    for (u32 d = 1; d <= k; ++d)
        if (k % d == 0) ++c;
    return c;
}

// --- symbolic oracle for the quartic order -----------------------------------
//
// Exact arithmetic in Q(sqrt 7, i) over the basis {1, sqrt7, i, i sqrt7}
// with half-integer coordinates (stored doubled). The ring of integers has
// the integral basis {1, sqrt7, t, u} with t = (sqrt7 + i)/2 and
// u = (1 + i sqrt7)/2; products are computed symbolically and expressed in
// that basis before reducing mod 2.
struct QuadElt {
    i64 p, q, r, s;  // (p + q sqrt7 + r i + s i sqrt7) / 2
};

QuadElt qmul(const QuadElt& a, const QuadElt& b) {
    i64 p = a.p * b.p + 7 * a.q * b.q - a.r * b.r - 7 * a.s * b.s;
    i64 q = a.p * b.q + a.q * b.p - a.r * b.s - a.s * b.r;
    i64 r = a.p * b.r + a.r * b.p + 7 * (a.q * b.s + a.s * b.q);
    i64 s = a.p * b.s + a.s * b.p + a.q * b.r + a.r * b.q;
    if ((p | q | r | s) & 1)
        fail(errc::classification_contradiction, "quartic product not integral");
    return {p / 2, q / 2, r / 2, s / 2};
}

// coordinates over the integral basis {1, sqrt7, t, u}
std::array<i64, 4> integral_coords(const QuadElt& z) {
    if (((z.p - z.s) | (z.q - z.r)) & 1)
        fail(errc::classification_contradiction, "element not in the order");
    return {(z.p - z.s) / 2, (z.q - z.r) / 2, z.r, z.s};
}

TablePtr quartic_order_mod2() {
    const QuadElt basis[4] = {
        {2, 0, 0, 0},  // 1
        {0, 2, 0, 0},  // sqrt7
        {0, 1, 1, 0},  // t
        {1, 0, 0, 1},  // u
    };
    std::vector<std::vector<Vec>> mul(4);
    for (u32 i = 0; i < 4; ++i) {
        mul[i].resize(i + 1);
        for (u32 j = 0; j <= i; ++j) {
            auto c = integral_coords(qmul(basis[i], basis[j]));
            Vec v(4);
            for (u32 k = 0; k < 4; ++k)
                v[k] = static_cast<u32>(((c[k] % 2) + 2) % 2);
            mul[i][j] = std::move(v);
        }
    }
    return std::make_shared<const RingTable>(
        RingTable::validate(2, 4, mul, {1, 0, 0, 0}, "O(Q(sqrt7,i))/2"));
}

// ---------------------------------------------------------------------------

ExpectedCount fixed(long long v) { return {v, false}; }
ExpectedCount computed(long long v) { return {v, true}; }

void check_line(std::vector<std::string>& out, bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
}

CorpusItem diag_item(u32 n) {
    CorpusItem it;
    it.name = "diag-f2-" + std::to_string(n);
    it.summary = "diagonal F2 in F2^" + std::to_string(n);
    it.ext = make_extension(blocks::f2n(n), {});
    it.expect.nodes = computed(static_cast<long long>(partition_count(n)));
    it.expect.delta = (n <= 3);
    it.expect.infra_integral = true;
    it.expect.seminormal = true;
    if (n >= 3) it.expect.pwm = "alpha";
    if (n == 3) {
        it.expect.length = fixed(2);
        it.expect.small_delta = false;
        it.expect.simple = false;
    }
    if (n == 4) {
        it.extra = [](const AnalysisBundle& b, std::vector<std::string>& bad) {
            // the classical witness pair x = e1+e2, y = e1+e3 misses e1
            Submodule rx = adjoin(*b.ext.S, b.ext.R, Vec{1, 1, 0, 0}.data());
            Submodule ry = adjoin(*b.ext.S, b.ext.R, Vec{1, 0, 1, 0}.data());
            Vec e1{1, 0, 0, 0};
            check_line(bad, subring_join(*b.ext.S, rx, ry).contains(e1),
                       "witness: e1 should lie in the join of R[e1+e2], R[e1+e3]");
            check_line(bad, !rx.sum(ry).contains(e1),
                       "witness: e1 should be missing from the sum");
            check_line(bad, b.brute.witness.has_value(),
                       "brute force verdict must carry a witness");
        };
    }
    return it;
}

CorpusItem branched_item() {
    CorpusItem it;
    it.name = "branched-f4xf2xf2";
    it.summary = "F2 diagonal in F4 e1 + F2 e2 + F2 e3";
    it.ext = make_extension(blocks::ke1_k_k(), {});
    it.expect.nodes = fixed(7);
    it.expect.delta = true;
    it.expect.plus_size = 2;
    it.expect.tclo_size = 8;
    it.extra = [](const AnalysisBundle& b, std::vector<std::string>& bad) {
        // cover labels reproduce the decomposed/inert diagram
        const IntervalLattice& L = b.lattice;
        auto tclo = L.find(b.dec.t_closure);
        check_line(bad, tclo.has_value(), "tR missing from the lattice");
        if (!tclo) return;
        u32 edge_counts[3] = {0, 0, 0};
        for (const CoverEdge& c : L.covers)
            ++edge_counts[static_cast<int>(c.type.kind)];
        check_line(bad, edge_counts[static_cast<int>(MinKind::ramified)] == 0,
                   "no ramified covers expected");
        // atoms of R are decomposed; tR -> S is inert; the extra field node
        // R' has an inert edge from an atom and a decomposed edge to top
        for (u32 c : L.up[L.bottom])
            check_line(bad, L.covers[c].type.kind == MinKind::decomposed,
                       "atom covers must be decomposed");
        const CoverEdge* e = L.cover_between(*tclo, L.top);
        check_line(bad, e && e->type.kind == MinKind::inert,
                   "tR to S must be minimal inert");
    };
    return it;
}

CorpusItem dualnum_cube_item() {
    CorpusItem it;
    it.name = "dualnum-cube";
    it.summary = "diagonal F2[t]/t^2 in its own cube";
    auto R3 = blocks::power(blocks::f2_t2(), 3, "F2[t]/t2^3");
    it.ext = make_extension(R3, {{0, 1, 0, 1, 0, 1}});
    // 5 nodes in [R,+R] and 5 in [+R,S] are stated; the three extra nodes
    // R[e_i] give 5 + 5 - 1 + 3 = 12 in total
    it.expect.nodes = computed(12);
    it.expect.length = fixed(4);
    it.expect.delta = true;
    it.expect.infra_integral = true;
    it.extra = [](const AnalysisBundle& b, std::vector<std::string>& bad) {
        const IntervalLattice& L = b.lattice;
        auto plus = L.find(b.dec.seminormalization);
        check_line(bad, plus.has_value(), "+R missing from the lattice");
        if (!plus) return;
        check_line(bad, L.interval_node_count(L.bottom, *plus) == 5,
                   "[R,+R] must have 5 nodes");
        check_line(bad, L.interval_node_count(*plus, L.top) == 5,
                   "[+R,S] must have 5 nodes");
        check_line(bad,
                   L.interval_length_minmax(L.bottom, *plus).second == 2 &&
                       L.interval_length_minmax(*plus, L.top).second == 2,
                   "both decomposition legs must have length 2");
        // the mixed ramified/decomposed cover pairs sit exactly at the three
        // atoms R[x_i], and each join interval is B2
        u32 sites = 0;
        for (const auto& line : b.characterized.trace)
            if (line.find("B2 site at node") != std::string::npos) ++sites;
        check_line(bad, sites == 3, "expected exactly three B2 sites");
        auto at = atoms_of(L);
        check_line(bad, at.size() == 3, "expected three atoms R[x_i]");
        for (u32 a : at) {
            check_line(bad, L.nodes[a].size() == 8, "atom has unexpected size");
            const auto& ups = L.up[a];
            bool mixed = false;
            for (size_t x = 0; x < ups.size(); ++x)
                for (size_t y = x + 1; y < ups.size(); ++y) {
                    if (L.covers[ups[x]].type.kind == L.covers[ups[y]].type.kind)
                        continue;
                    mixed = true;
                    u32 j = b.tables.join_of(L.covers[ups[x]].hi,
                                             L.covers[ups[y]].hi);
                    check_line(bad, L.interval_length_minmax(a, j).second == 2,
                               "mixed cover pair join must have length 2");
                    check_line(bad, L.interval_is_b2(a, j),
                               "mixed cover pair join must be B2");
                }
            check_line(bad, mixed, "every atom carries a mixed cover pair");
        }
        // deterministic trace across re-runs
        DeltaVerdict again = is_delta_characterized(b.lattice, b.tables, b.dec,
                                                    b.ext, b.node_budget);
        check_line(bad, again.trace == b.characterized.trace,
                   "characterized trace must be deterministic");
        check_line(bad, again.is_delta == b.brute.is_delta,
                   "characterized and brute verdicts must agree");
    };
    return it;
}

CorpusItem quartic_item() {
    CorpusItem it;
    it.name = "quartic-order-mod2";
    it.summary = "order Z + 2S of Q(sqrt7, i) reduced mod 2";
    it.ext = make_extension(quartic_order_mod2(), {});
    it.expect.nodes = computed(static_cast<long long>(
        enumerate_interval(it.ext, 4096).node_count()));  // recorded, not stated
    it.expect.delta = false;
    it.expect.length = fixed(3);
    it.expect.infra_integral = true;
    it.extra = [](const AnalysisBundle& b, std::vector<std::string>& bad) {
        const IntervalLattice& L = b.lattice;
        const RingTable& S = *b.ext.S;
        // spot products from the symbolic oracle: t u = 0, s^2 = 1 mod 2
        check_line(bad, S.is_zero(S.mul({0, 0, 1, 0}, {0, 0, 0, 1})),
                   "t * u must vanish mod 2");
        check_line(bad, S.mul({0, 1, 0, 0}, {0, 1, 0, 0}) == Vec{1, 0, 0, 0},
                   "sqrt7^2 must be 1 mod 2");
        // two maximal ideals (the images of the primes above 2)
        check_line(bad, maximal_ideals(S).size() == 2,
                   "expected two maximal ideals");
        // conductor of F2*1 is zero (the image of 2S)
        check_line(bad, ext_conductor(b.ext).size() == 1,
                   "conductor must be the zero ideal");
        // +R sits at height 2 and is minimal decomposed below S
        auto plus = L.find(b.dec.seminormalization);
        check_line(bad, plus.has_value(), "+R missing from the lattice");
        if (plus) {
            check_line(bad, L.interval_length_minmax(L.bottom, *plus).second == 2,
                       "[R,+R] must have length 2");
            const CoverEdge* e = L.cover_between(*plus, L.top);
            check_line(bad, e && e->type.kind == MinKind::decomposed,
                       "+R below S must be minimal decomposed");
        }
        // condition (2) fails: some mixed cover pair joins at length 3
        bool saw_len3 = false;
        for (const auto& line : b.characterized.trace)
            if (line.find("not B2") != std::string::npos &&
                line.find("length 3") != std::string::npos)
                saw_len3 = true;
        check_line(bad, saw_len3,
                   "trace must show a mixed cover pair with a length-3 join");
        // the classical generators: x = 1 + sqrt7 ramified, u decomposed
        Submodule rx = adjoin(S, b.ext.R, Vec{1, 1, 0, 0}.data());
        Submodule ru = adjoin(S, b.ext.R, Vec{0, 0, 0, 1}.data());
        check_line(bad, classify_minimal(S, b.ext.R, rx).kind == MinKind::ramified,
                   "R[1+sqrt7] must be minimal ramified");
        check_line(bad, classify_minimal(S, b.ext.R, ru).kind == MinKind::decomposed,
                   "R[u] must be minimal decomposed");
        check_line(bad, subring_join(S, rx, ru).size() == S.size(),
                   "the two generators must join to S");
    };
    return it;
}

CorpusItem spir_item(bool idempotent) {
    CorpusItem it;
    it.name = idempotent ? "spir-dec" : "spir-ram";
    it.summary = idempotent ? "Z/4 in Z/4[t]/(t^2 - t)" : "Z/4 in Z/4[t]/(t^2)";
    it.ext = make_extension(idempotent ? blocks::z4_t2_t() : blocks::z4_t2(), {});
    it.expect.delta = true;
    if (!idempotent) {
        it.expect.chained = true;
        it.expect.small_delta = true;
    } else {
        it.extra = [](const AnalysisBundle& b, std::vector<std::string>& bad) {
            auto plus = b.lattice.find(b.dec.seminormalization);
            check_line(bad, plus.has_value(), "+R missing");
            if (!plus) return;
            const CoverEdge* e = b.lattice.cover_between(*plus, b.lattice.top);
            check_line(bad, e && e->type.kind == MinKind::decomposed,
                       "+R below S must be minimal decomposed");
        };
    }
    return it;
}

CorpusItem tower_item(u32 k) {
    CorpusItem it;
    it.name = "tower-f" + std::to_string(1u << k);
    it.summary = "prime field in F_{2^" + std::to_string(k) + "}";
    it.ext = make_extension(k == 4 ? blocks::gf16() : blocks::gf64(), {});
    it.expect.nodes = computed(static_cast<long long>(divisor_count(k)));
    it.expect.t_closed = true;
    if (k == 4) {
        it.expect.delta = true;
        it.expect.chained = true;
    } else {
        it.expect.delta = false;
        it.expect.chained = false;
        it.expect.modular = true;
        it.expect.b2 = true;
    }
    return it;
}

CorpusItem cover_case_item(const std::string& which) {
    CorpusItem it;
    if (which == "noncat") {
        it.name = "cover-noncat";
        it.summary = "F2 in F4[y]/y^2: mixed crucial-ideal covers";
        it.ext = make_extension(blocks::f4_y2(), {});
        it.expect.catenarian = false;
    } else if (which == "len2") {
        it.name = "cover-len2";
        it.summary = "F2 in F2[x,y]/(x^2,xy,y^2)";
        it.ext = make_extension(blocks::f2_xy(), {});
        it.expect.length = fixed(2);
        it.expect.delta = true;
    } else {
        it.name = "cover-len3";
        it.summary = "F2 in F2[x,y]/(x^2,y^2)";
        it.ext = make_extension(blocks::f2_x2y2(), {});
        it.expect.length = fixed(3);
        it.expect.delta = false;
    }
    return it;
}

CorpusItem pwm_gamma_item() {
    CorpusItem it;
    it.name = "pwm-gamma";
    it.summary = "pointwise minimal subintegral extension with N^2 = 0";
    it.ext = make_extension(blocks::f2_xy(), {});
    it.expect.pwm = "gamma";
    it.expect.delta = true;
    it.expect.subintegral = true;
    return it;
}

}  // namespace

std::vector<std::string> corpus_names() {
    return {"diag-f2-2",  "diag-f2-3", "diag-f2-4", "diag-f2-5",
            "branched-f4xf2xf2", "dualnum-cube", "quartic-order-mod2",
            "spir-ram",   "spir-dec",  "tower-f16", "tower-f64",
            "cover-noncat", "cover-len2", "cover-len3", "pwm-gamma"};
}

CorpusItem build_corpus_item(const std::string& name) {
    if (name == "diag-f2-2") return diag_item(2);
    if (name == "diag-f2-3") return diag_item(3);
    if (name == "diag-f2-4") return diag_item(4);
    if (name == "diag-f2-5") return diag_item(5);
    if (name == "branched-f4xf2xf2") return branched_item();
    if (name == "dualnum-cube") return dualnum_cube_item();
    if (name == "quartic-order-mod2") return quartic_item();
    if (name == "spir-ram") return spir_item(false);
    if (name == "spir-dec") return spir_item(true);
    if (name == "tower-f16") return tower_item(4);
    if (name == "tower-f64") return tower_item(6);
    if (name == "cover-noncat") return cover_case_item("noncat");
    if (name == "cover-len2") return cover_case_item("len2");
    if (name == "cover-len3") return cover_case_item("len3");
    if (name == "pwm-gamma") return pwm_gamma_item();
    fail(errc::unknown_name, "no corpus item named " + name);
}

std::vector<std::string> check_expectations(const CorpusItem& item,
                                            const AnalysisBundle& b) {
    std::vector<std::string> bad;
    auto want = [&](const char* what, auto expected, auto actual) {
        if (expected != actual) {
            std::ostringstream os;
            os << what << ": expected " << expected << ", got " << actual;
            bad.push_back(os.str());
        }
    };
    const Expect& e = item.expect;
    if (e.nodes)
        want("nodes", e.nodes->value, static_cast<long long>(b.lattice.node_count()));
    if (e.length) want("length", e.length->value, static_cast<long long>(b.report.length));
    if (e.delta) {
        want("delta(bruteforce)", *e.delta, b.brute.is_delta);
        want("delta(generators)", *e.delta, b.generators.is_delta);
        want("delta(characterized)", *e.delta, b.characterized.is_delta);
    }
    if (e.small_delta) want("small-delta", *e.small_delta, b.small_delta);
    if (e.simple) want("simple", *e.simple, b.simple_gen.has_value());
    if (e.chained) want("chained", *e.chained, b.report.chained);
    if (e.catenarian) want("catenarian", *e.catenarian, b.report.catenarian);
    if (e.modular) want("modular", *e.modular, b.report.modular);
    if (e.distributive) want("distributive", *e.distributive, b.report.distributive);
    if (e.boolean_lattice)
        want("boolean", *e.boolean_lattice, b.report.boolean_lattice);
    if (e.b2) want("b2", *e.b2, b.report.b2);
    if (e.arithmetic) want("arithmetic", *e.arithmetic, b.report.arithmetic);
    if (e.subintegral) want("subintegral", *e.subintegral, b.flags.subintegral);
    if (e.infra_integral)
        want("infra-integral", *e.infra_integral, b.flags.infra_integral);
    if (e.seminormal) want("seminormal", *e.seminormal, b.flags.seminormal);
    if (e.t_closed) want("t-closed", *e.t_closed, b.flags.t_closed);
    if (e.pwm) {
        std::string got = b.pwm ? pwm_class_name(b.pwm->cls) : "(non-local)";
        want("pointwise-minimal class", *e.pwm, got);
    }
    if (e.plus_size)
        want("|+R|", *e.plus_size,
             static_cast<long long>(b.dec.seminormalization.size()));
    if (e.tclo_size)
        want("|tR|", *e.tclo_size, static_cast<long long>(b.dec.t_closure.size()));
    if (item.extra) item.extra(b, bad);
    return bad;
}

bool run_corpus(const std::vector<std::string>& names, std::ostream& out,
                u32 node_budget, bool negate_for_selftest) {
    bool all_ok = true;
    for (const std::string& name : names) {
        CorpusItem item = build_corpus_item(name);
        AnalysisBundle b = analyze_extension(item.ext, node_budget);
        if (negate_for_selftest) b.brute.is_delta = !b.brute.is_delta;
        std::vector<std::string> bad = check_expectations(item, b);
        if (bad.empty()) {
            out << "[PASS] " << item.name << ": nodes=" << b.lattice.node_count()
                << " length=" << b.report.length
                << " delta=" << (b.brute.is_delta ? "true" : "false") << "\n";
        } else {
            all_ok = false;
            out << "[FAIL] " << item.name << "\n";
            for (const auto& line : bad) out << "       " << line << "\n";
        }
    }
    return all_ok;
}

// ---------------------------------------------------------------------------

FuzzInstance fuzz_instance(u64 seed, const FuzzParams& params) {
    for (u32 attempt = 0; attempt < params.max_attempts; ++attempt) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + attempt);
        auto pick = [&](u64 k) { return rng() % k; };

        // block family catalogues, grouped by base modulus
        std::vector<TablePtr> base2 = {blocks::f2(), blocks::f4(),
                                       blocks::f2_t2(), blocks::f2_t3(),
                                       blocks::f2_xy()};
        std::vector<TablePtr> base3 = {blocks::f3(), blocks::f3_t2()};
        std::vector<TablePtr> base4 = {blocks::z4(), blocks::z4_t2()};
        std::vector<TablePtr> base8 = {blocks::z8()};

        TablePtr S;
        std::string desc;
        u32 family = static_cast<u32>(pick(5));
        Caps caps;  // default 4096 / rank 12
        auto product_of = [&](const std::vector<TablePtr>& fam, u32 count) {
            TablePtr acc = fam[pick(fam.size())];
            std::string d = acc->name();
            for (u32 i = 1; i < count; ++i) {
                TablePtr nxt = fam[pick(fam.size())];
                acc = std::make_shared<const RingTable>(
                    direct_product(*acc, *nxt, d + "x" + nxt->name(), caps));
                d = acc->name();
            }
            desc = d;
            return acc;
        };
        try {
            switch (family) {
                case 0: S = product_of(base2, 1 + static_cast<u32>(pick(3))); break;
                case 1: S = product_of(base3, 1 + static_cast<u32>(pick(3))); break;
                case 2: S = product_of(base4, 1 + static_cast<u32>(pick(3))); break;
                case 3: S = product_of(base8, 1 + static_cast<u32>(pick(2))); break;
                default: {
                    // CRT pairing of equal-rank blocks across characteristics
                    std::vector<std::pair<TablePtr, TablePtr>> pairs = {
                        {blocks::f2(), blocks::f3()},
                        {blocks::f4(), blocks::f3_t2()},
                        {blocks::f2_t2(), blocks::f3_t2()},
                    };
                    auto [a, bb] = pairs[pick(pairs.size())];
                    S = std::make_shared<const RingTable>(direct_product(
                        *a, *bb, a->name() + "*" + bb->name(), caps));
                    desc = S->name();
                    break;
                }
            }
        } catch (const error&) {
            continue;  // over caps; try the next attempt
        }

        u32 gens = static_cast<u32>(pick(3));
        std::vector<Vec> gvecs;
        for (u32 i = 0; i < gens; ++i)
            gvecs.push_back(S->element_at(pick(S->size())));
        Extension E = make_extension(S, gvecs);
        // random elements usually generate everything; keep a deterministic
        // tenth of the trivial intervals for degenerate-path coverage and
        // reroll the rest
        if (E.trivial() && seed % 10 != 0) continue;
        try {
            enumerate_interval(E, params.max_nodes);
        } catch (const error& e) {
            if (e.code() == errc::node_budget_exceeded) continue;
            throw;
        }
        FuzzInstance out;
        out.ext = std::move(E);
        out.seed = seed;
        std::ostringstream d;
        d << desc << " + " << gens << " generators (seed " << seed
          << ", attempt " << attempt << ")";
        out.desc = d.str();
        return out;
    }
    fail(errc::node_budget_exceeded,
         "no fuzz instance fits the node budget for seed " + std::to_string(seed));
}

}  // namespace ringlat
