#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ringlat/blocks.hpp"
#include "ringlat/delta.hpp"
#include "ringlat/errors.hpp"

using namespace ringlat;

namespace {

Extension diag_f2(u32 n) { return make_extension(blocks::f2n(n), {}); }

struct Full {
    Extension E;
    IntervalLattice L;
    MeetJoinTables T;
    CanonicalDecomposition dec;
    GenSpanCache cache;
};

Full analyze(Extension E) {
    Full f{E, enumerate_interval(E, 512), {}, canonical_decomposition(E),
           build_gen_span_cache(E)};
    f.T = build_meet_join_tables(f.L);
    return f;
}

void expect_routes_agree(Full& f, bool expected) {
    DeltaVerdict bf = is_delta_bruteforce(f.L);
    GeneratorsVerdict gen = is_delta_generators(f.E, f.cache);
    DeltaVerdict chr = is_delta_characterized(f.L, f.T, f.dec, f.E, 512);
    CHECK(bf.is_delta == expected);
    CHECK(gen.is_delta == expected);
    CHECK(chr.is_delta == expected);
}

}  // namespace

TEST_CASE("delta brute force with witness") {
    Full f3 = analyze(diag_f2(3));
    CHECK(is_delta_bruteforce(f3.L).is_delta);

    Full f4 = analyze(diag_f2(4));
    DeltaVerdict v = is_delta_bruteforce(f4.L);
    CHECK(!v.is_delta);
    REQUIRE(v.witness.has_value());
    // the witness genuinely lies in the join and outside the sum
    const auto& w = *v.witness;
    Submodule sum = f4.L.nodes[w.node_t].sum(f4.L.nodes[w.node_u]);
    Submodule join = subring_join(*f4.E.S, f4.L.nodes[w.node_t],
                                  f4.L.nodes[w.node_u]);
    CHECK(join.contains(w.missing));
    CHECK(!sum.contains(w.missing));

    // the classical witness pair x = e1+e2, y = e1+e3 misses e1
    Submodule rx = adjoin(*f4.E.S, f4.E.R, Vec{1, 1, 0, 0}.data());
    Submodule ry = adjoin(*f4.E.S, f4.E.R, Vec{1, 0, 1, 0}.data());
    Vec e1{1, 0, 0, 0};
    CHECK(subring_join(*f4.E.S, rx, ry).contains(e1));
    CHECK(!rx.sum(ry).contains(e1));

    // F2 in F2[x,y]/(x^2,y^2): xy escapes R[x]+R[y]
    Full g = analyze(make_extension(blocks::f2_x2y2(), {}));
    CHECK(!is_delta_bruteforce(g.L).is_delta);
}

TEST_CASE("generator route agrees everywhere") {
    for (auto [E, expected] :
         std::vector<std::pair<Extension, bool>>{{diag_f2(3), true},
                                                 {diag_f2(4), false},
                                                 {make_extension(blocks::f2_x2y2(), {}), false},
                                                 {make_extension(blocks::z4_t2(), {}), true},
                                                 {make_extension(blocks::gf16(), {}), true},
                                                 {make_extension(blocks::gf64(), {}), false}}) {
        Full f = analyze(E);
        expect_routes_agree(f, expected);
    }
    // trivial interval
    Extension triv = make_extension(blocks::f2(), {});
    Full f = analyze(triv);
    expect_routes_agree(f, true);
}

TEST_CASE("characterized route picks the expected paths") {
    // field towers go through the t-closed arithmetic route
    Full f16 = analyze(make_extension(blocks::gf16(), {}));
    DeltaVerdict v16 = is_delta_characterized(f16.L, f16.T, f16.dec, f16.E, 512);
    CHECK(v16.route == DeltaRoute::t_closed_arithmetic);
    CHECK(v16.is_delta);

    Full f64 = analyze(make_extension(blocks::gf64(), {}));
    DeltaVerdict v64 = is_delta_characterized(f64.L, f64.T, f64.dec, f64.E, 512);
    CHECK(v64.route == DeltaRoute::t_closed_arithmetic);
    CHECK(!v64.is_delta);
    // ... while the lattice is modular: modularity does not give delta
    CHECK(is_modular(f64.L, f64.T));

    // seminormal infra-integral: counting route
    Full f3 = analyze(diag_f2(3));
    DeltaVerdict v3 = is_delta_characterized(f3.L, f3.T, f3.dec, f3.E, 512);
    CHECK(v3.route == DeltaRoute::seminormal_count);
    CHECK(v3.is_delta);
    Full f4 = analyze(diag_f2(4));
    DeltaVerdict v4 = is_delta_characterized(f4.L, f4.T, f4.dec, f4.E, 512);
    CHECK(v4.route == DeltaRoute::seminormal_count);
    CHECK(!v4.is_delta);

    // subintegral: infra-integral modular route
    Full sub = analyze(make_extension(blocks::f2_x2y2(), {}));
    DeltaVerdict vs = is_delta_characterized(sub.L, sub.T, sub.dec, sub.E, 512);
    CHECK(vs.route == DeltaRoute::infra_integral_modular);
    CHECK(!vs.is_delta);

    // mixed type: canonical decomposition route
    Full br = analyze(make_extension(blocks::ke1_k_k(), {}));
    DeltaVerdict vb = is_delta_characterized(br.L, br.T, br.dec, br.E, 512);
    CHECK(vb.route == DeltaRoute::canonical_decomposition);
    CHECK(vb.is_delta);
    CHECK(is_delta_bruteforce(br.L).is_delta);
}

TEST_CASE("canonical route reports the B2 sites of the dual-number cube") {
    auto R3 = blocks::power(blocks::f2_t2(), 3, "F2t2^3");
    Full dc = analyze(make_extension(R3, {{0, 1, 0, 1, 0, 1}}));
    DeltaVerdict v = is_delta_characterized(dc.L, dc.T, dc.dec, dc.E, 512);
    CHECK(v.is_delta);
    // the whole extension is infra-integral, so the verdict rides on
    // modularity, with the decomposition conditions cross-checked in the trace
    CHECK(v.route == DeltaRoute::infra_integral_modular);
    CHECK(is_delta_bruteforce(dc.L).is_delta);
    // deterministic trace
    DeltaVerdict v2 = is_delta_characterized(dc.L, dc.T, dc.dec, dc.E, 512);
    CHECK(v.trace == v2.trace);
    // exactly three mixed cover-pair sites, all B2, each at a node R[x_i]
    u32 sites = 0;
    for (const auto& line : v.trace)
        if (line.find("B2 site at node") != std::string::npos) ++sites;
    CHECK(sites == 3);
    // the sites sit at the three atoms, which are the R[x_i]
    auto at = atoms_of(dc.L);
    for (u32 a : at) {
        bool mixed = false;
        const auto& ups = dc.L.up[a];
        for (size_t x = 0; x < ups.size(); ++x)
            for (size_t y = x + 1; y < ups.size(); ++y)
                if (dc.L.covers[ups[x]].type.kind != dc.L.covers[ups[y]].type.kind)
                    mixed = true;
        CHECK(mixed);
        // join interval has length 2
        u32 j = dc.T.join_of(dc.L.covers[dc.L.up[a][0]].hi,
                             dc.L.covers[dc.L.up[a][1]].hi);
        CHECK(dc.L.interval_length_minmax(a, j).second == 2);
    }
}

TEST_CASE("small delta") {
    // chained SPIR extension
    Full spir = analyze(make_extension(blocks::z4_t2(), {}));
    CHECK(is_small_delta(spir.E, spir.cache));

    // delta but not small delta
    Full f3 = analyze(diag_f2(3));
    std::optional<std::pair<Vec, Vec>> w;
    CHECK(!is_small_delta(f3.E, f3.cache, &w));
    REQUIRE(w.has_value());
    // the witness really violates R[x]+R[y] = R[x+y]
    Submodule rx = adjoin(*f3.E.S, f3.E.R, w->first.data());
    Submodule ry = adjoin(*f3.E.S, f3.E.R, w->second.data());
    Vec xy = f3.E.S->add(w->first, w->second);
    CHECK(rx != ry);
    CHECK(rx.sum(ry) != adjoin(*f3.E.S, f3.E.R, xy.data()));

    // trivial interval: vacuously small delta
    Full triv = analyze(make_extension(blocks::f2(), {}));
    CHECK(is_small_delta(triv.E, triv.cache));
}

TEST_CASE("simple generators") {
    Full f4 = analyze(make_extension(blocks::f4(), {}));
    auto g = simple_generator(f4.E, f4.cache);
    REQUIRE(g.has_value());
    CHECK(adjoin(*f4.E.S, f4.E.R, g->data()).size() == 4);

    Full f3 = analyze(diag_f2(3));
    CHECK(!simple_generator(f3.E, f3.cache).has_value());
}

TEST_CASE("small delta implies delta and simple") {
    for (Extension E : {make_extension(blocks::z4_t2(), {}),
                        make_extension(blocks::z4_t2_t(), {}),
                        make_extension(blocks::gf16(), {}),
                        make_extension(blocks::f2_xy(), {}),
                        diag_f2(3), diag_f2(4)}) {
        Full f = analyze(E);
        if (f.E.trivial()) continue;
        if (is_small_delta(f.E, f.cache)) {
            CHECK(is_delta_bruteforce(f.L).is_delta);
            CHECK(simple_generator(f.E, f.cache).has_value());
        }
    }
}

TEST_CASE("pointwise minimal classification") {
    Full f3 = analyze(diag_f2(3));
    PwmResult p3 = pointwise_minimal(f3.E, f3.cache);
    CHECK(p3.cls == PwmClass::alpha);
    REQUIRE(p3.delta_predicted.has_value());
    CHECK(*p3.delta_predicted);
    CHECK(is_delta_bruteforce(f3.L).is_delta == *p3.delta_predicted);

    Full f4 = analyze(diag_f2(4));
    PwmResult p4 = pointwise_minimal(f4.E, f4.cache);
    CHECK(p4.cls == PwmClass::alpha);
    CHECK(!*p4.delta_predicted);
    CHECK(is_delta_bruteforce(f4.L).is_delta == *p4.delta_predicted);

    Full g = analyze(make_extension(blocks::f2_xy(), {}));
    PwmResult pg = pointwise_minimal(g.E, g.cache);
    CHECK(pg.cls == PwmClass::gamma);
    CHECK(*pg.delta_predicted);
    CHECK(is_delta_bruteforce(g.L).is_delta);

    // minimal extension
    Full m = analyze(make_extension(blocks::f4(), {}));
    CHECK(pointwise_minimal(m.E, m.cache).cls == PwmClass::minimal);

    // chained length 2: not pointwise minimal (R[t] = S is not minimal)
    Full spir = analyze(make_extension(blocks::z4_t2(), {}));
    CHECK(pointwise_minimal(spir.E, spir.cache).cls == PwmClass::not_pwm);

    // non-local base is rejected
    auto S4 = blocks::f2n(4);
    Extension nl = make_extension(S4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    GenSpanCache cache = build_gen_span_cache(nl);
    CHECK_THROWS_WITH_AS(pointwise_minimal(nl, cache),
                         doctest::Contains("NotLocal"), ringlat::error);
}

TEST_CASE("length-two and B2 laws") {
    // infra-integral of length two is always delta
    for (Extension E : {diag_f2(3), make_extension(blocks::f2_xy(), {})}) {
        Full f = analyze(E);
        TypeFlags fl = classify_type(*E.S, E.R,
                                     Submodule::full(E.S->modulus(), E.S->rank()));
        if (fl.infra_integral && f.L.length == 2)
            CHECK(is_delta_bruteforce(f.L).is_delta);
    }
    // length 2 delta law: fails only for t-closed one-point-support big
    // intervals (the F64 tower over F8... here: divisor lattice of 6 has
    // length 2? no, it has length 2 with 4 nodes and is t-closed: delta
    // must fail)
    Full f64 = analyze(make_extension(blocks::gf64(), {}));
    CHECK(f64.L.length == 2);
    CHECK(f64.L.node_count() == 4);
    TypeFlags fl = classify_type(*f64.E.S, f64.E.R, Submodule::full(2, 6));
    CHECK(fl.t_closed);
    CHECK(!is_delta_bruteforce(f64.L).is_delta);
    CHECK(is_b2(f64.L));  // a t-closed B2 extension is not delta

    // a non-t-closed B2 extension is delta
    auto S4 = blocks::f2n(4);
    Full diamond = analyze(make_extension(S4, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    CHECK(is_b2(diamond.L));
    CHECK(is_delta_bruteforce(diamond.L).is_delta);
}

TEST_CASE("infra-integral five-way equivalence") {
    for (Extension E : {diag_f2(3), diag_f2(4),
                        make_extension(blocks::f2_xy(), {}),
                        make_extension(blocks::f2_x2y2(), {})}) {
        Full f = analyze(E);
        TypeFlags fl = classify_type(*E.S, E.R,
                                     Submodule::full(E.S->modulus(), E.S->rank()));
        REQUIRE(fl.infra_integral);
        bool delta = is_delta_bruteforce(f.L).is_delta;
        bool modular = is_modular(f.L, f.T);
        bool semi = is_semimodular(f.L, f.T);
        // length additivity for all pairs
        bool additive = true;
        for (u32 i = 0; i < f.L.nodes.size() && additive; ++i)
            for (u32 j = i + 1; j < f.L.nodes.size(); ++j) {
                u32 m = f.T.meet_of(i, j), v = f.T.join_of(i, j);
                u32 li = f.L.interval_length_minmax(m, i).second;
                u32 lj = f.L.interval_length_minmax(m, j).second;
                u32 lv = f.L.interval_length_minmax(m, v).second;
                if (li + lj != lv) {
                    additive = false;
                    break;
                }
            }
        // every node with two distinct covers spans a length-2 interval
        bool cover_l2 = true;
        for (u32 t = 0; t < f.L.nodes.size() && cover_l2; ++t) {
            const auto& ups = f.L.up[t];
            for (size_t a = 0; a < ups.size() && cover_l2; ++a)
                for (size_t b = a + 1; b < ups.size(); ++b) {
                    u32 v = f.T.join_of(f.L.covers[ups[a]].hi,
                                        f.L.covers[ups[b]].hi);
                    if (f.L.interval_length_minmax(t, v).second != 2) {
                        cover_l2 = false;
                        break;
                    }
                }
        }
        CHECK(delta == modular);
        CHECK(delta == semi);
        CHECK(delta == additive);
        CHECK(delta == cover_l2);
    }
}

TEST_CASE("delta restricts to sub-intervals") {
    for (Extension E : {diag_f2(3), make_extension(blocks::ke1_k_k(), {}),
                        make_extension(blocks::z4_t2_t(), {})}) {
        Full f = analyze(E);
        if (!is_delta_bruteforce(f.L).is_delta) continue;
        for (u32 i = 0; i < f.L.nodes.size(); ++i)
            for (u32 j = i; j < f.L.nodes.size(); ++j)
                if (f.L.le(i, j)) CHECK(interval_delta(f.L, i, j));
    }
}

TEST_CASE("modular law: delta iff t-closure arithmetic in the top") {
    for (Extension E : {diag_f2(3), make_extension(blocks::gf64(), {}),
                        make_extension(blocks::gf16(), {}),
                        make_extension(blocks::z4_t2(), {})}) {
        Full f = analyze(E);
        if (!is_modular(f.L, f.T)) continue;
        bool delta = is_delta_bruteforce(f.L).is_delta;
        bool arith = is_arithmetic_pair(
            f.E.S, f.dec.t_closure,
            Submodule::full(f.E.S->modulus(), f.E.S->rank()), 512);
        CHECK(delta == arith);
    }
}
