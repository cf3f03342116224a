#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ringlat/blocks.hpp"
#include "ringlat/errors.hpp"
#include "ringlat/extension.hpp"

using namespace ringlat;

namespace {

// Brute-force span oracle: all Z/n-combinations of the generators.
std::set<Vec> span_oracle(u32 n, u32 d, const std::vector<Vec>& gens) {
    std::set<Vec> out;
    out.insert(Vec(d, 0));
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<Vec> next = out;
        for (const Vec& v : out)
            for (const Vec& g : gens) {
                Vec w(d);
                for (u32 i = 0; i < d; ++i) w[i] = addmod(v[i], g[i] % n, n);
                if (next.insert(w).second) grew = true;
            }
        out.swap(next);
    }
    return out;
}

std::vector<Vec> random_vectors(std::mt19937_64& rng, u32 n, u32 d, u32 count) {
    std::vector<Vec> out;
    for (u32 i = 0; i < count; ++i) {
        Vec v(d);
        for (u32 k = 0; k < d; ++k) v[k] = static_cast<u32>(rng() % n);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

TEST_CASE("egcd and unit scaling") {
    i64 x, y;
    CHECK(egcd(12, 8, x, y) == 4);
    CHECK(12 * x + 8 * y == 4);
    CHECK(mod_inverse(3, 8) == 3);
    for (u32 n : {4u, 6u, 8u, 12u, 36u}) {
        for (u32 a = 1; a < n; ++a) {
            u32 u = unit_scaling(a, n);
            CHECK(gcd_u32(u, n) == 1);
            CHECK(mulmod(u, a, n) == gcd_u32(a, n));
        }
    }
}

TEST_CASE("howell form is canonical and membership matches enumeration") {
    std::mt19937_64 rng(7);
    for (u32 trial = 0; trial < 60; ++trial) {
        u32 n = std::vector<u32>{2, 3, 4, 6, 8, 9, 12}[rng() % 7];
        u32 d = 1 + rng() % 4;
        auto gens = random_vectors(rng, n, d, 1 + rng() % 3);
        Submodule m = Submodule::span(n, d, gens);
        auto oracle = span_oracle(n, d, gens);
        CHECK(m.size() == oracle.size());
        // membership agrees everywhere
        u64 total = 1;
        for (u32 i = 0; i < d; ++i) total *= n;
        for (u64 idx = 0; idx < total; ++idx) {
            Vec v(d);
            u64 t = idx;
            for (u32 i = d; i-- > 0;) {
                v[i] = static_cast<u32>(t % n);
                t /= n;
            }
            CHECK(m.contains(v) == (oracle.count(v) > 0));
        }
        // canonical: a shuffled, redundant generating set gives the same form
        std::vector<Vec> gens2(oracle.begin(), oracle.end());
        std::shuffle(gens2.begin(), gens2.end(), rng);
        gens2.resize(std::max<size_t>(1, gens2.size() / 2 + 1));
        for (const Vec& g : gens) gens2.push_back(g);
        Submodule m2 = Submodule::span(n, d, gens2);
        // m2 spans a subset; add originals so spans agree
        CHECK(m2 == m);
        // element enumeration is exact and duplicate-free
        auto els = m.elements();
        std::set<Vec> uniq(els.begin(), els.end());
        CHECK(uniq.size() == els.size());
        CHECK(uniq == oracle);
    }
}

TEST_CASE("sum and intersection against enumeration") {
    std::mt19937_64 rng(11);
    for (u32 trial = 0; trial < 40; ++trial) {
        u32 n = std::vector<u32>{2, 4, 6, 9, 8}[rng() % 5];
        u32 d = 1 + rng() % 3;
        Submodule a = Submodule::span(n, d, random_vectors(rng, n, d, 2));
        Submodule b = Submodule::span(n, d, random_vectors(rng, n, d, 2));
        Submodule s = a.sum(b);
        Submodule i = a.intersect(b);
        auto ea = a.elements();
        std::set<Vec> sa(ea.begin(), ea.end());
        std::set<Vec> expect_i;
        for (const Vec& v : b.elements())
            if (sa.count(v)) expect_i.insert(v);
        auto ei = i.elements();
        CHECK(std::set<Vec>(ei.begin(), ei.end()) == expect_i);
        std::vector<Vec> both = a.elements();
        for (const Vec& v : b.elements()) both.push_back(v);
        CHECK(s == Submodule::span(n, d, both));
        CHECK(s.size() * i.size() == a.size() * b.size());
    }
}

TEST_CASE("snf diagonalization recovers module structure") {
    // span{(2,1)} in (Z/4)^2 is cyclic of order 4, not Z/2 x Z/2
    DiagonalForm df = snf_diagonalize(4, 2, {{2, 1}});
    std::vector<u32> orders;
    for (u32 c = 0; c < 2; ++c)
        if (df.diag[c] != 0 && df.diag[c] != 4) orders.push_back(4 / df.diag[c]);
    CHECK(orders == std::vector<u32>{4});

    // randomized: the product of invariant factors equals the span size
    std::mt19937_64 rng(13);
    for (u32 trial = 0; trial < 60; ++trial) {
        u32 n = std::vector<u32>{2, 4, 6, 8, 12}[rng() % 5];
        u32 d = 1 + rng() % 4;
        auto gens = random_vectors(rng, n, d, 1 + rng() % 3);
        Submodule m = Submodule::span(n, d, gens);
        DiagonalForm df2 = snf_diagonalize(n, d, gens);
        u64 sz = 1;
        u32 prev = 0;
        bool chain_ok = true;
        std::vector<u32> orders;
        for (u32 c = 0; c < d; ++c) {
            if (!df2.diag[c]) continue;
            CHECK(n % df2.diag[c] == 0);
            sz *= n / df2.diag[c];
            orders.push_back(n / df2.diag[c]);
            if (prev && df2.diag[c] % prev != 0 && prev % df2.diag[c] != 0)
                chain_ok = false;
            prev = df2.diag[c];
        }
        CHECK(sz == m.size());
        CHECK(chain_ok);
        // basis rows scaled by diag lie in the span and generate it
        std::vector<Vec> regen;
        for (u32 c = 0; c < d; ++c) {
            if (!df2.diag[c]) continue;
            Vec b = df2.basis_row(c);
            vec_scale(b.data(), df2.diag[c], d, n);
            CHECK(m.contains(b));
            regen.push_back(b);
        }
        CHECK(Submodule::span(n, d, regen) == m);
    }
}

TEST_CASE("ring table validation accepts the standard blocks") {
    CHECK(blocks::f2n(3)->size() == 8);
    CHECK(blocks::z4_t2()->size() == 16);
    CHECK(blocks::gf16()->size() == 16);
    CHECK(blocks::gf64()->size() == 64);
    // orthogonal idempotents in F2^3
    auto S = blocks::f2n(3);
    Vec e1{1, 0, 0}, e2{0, 1, 0};
    CHECK(S->is_zero(S->mul(e1, e2)));
    // nilpotent of index 2
    auto T = blocks::f2_t2();
    CHECK(T->is_zero(T->mul({0, 1}, {0, 1})));
}

TEST_CASE("ring table validation rejects bad tables") {
    // non-commutative table
    std::vector<std::vector<Vec>> mul = {
        {{1, 0}, {0, 1}},
        {{1, 1}, {0, 0}},
    };
    CHECK_THROWS_WITH_AS(RingTable::validate(2, 2, mul, {1, 0}, "bad"),
                         doctest::Contains("NonCommutative"), ringlat::error);
    // unit law violation: e0 is not a unit for F2 x F2
    std::vector<std::vector<Vec>> mul2 = {
        {{1, 0}},
        {{0, 0}, {0, 1}},
    };
    CHECK_THROWS_WITH_AS(RingTable::validate(2, 2, mul2, {1, 0}, "bad-unit"),
                         doctest::Contains("BadUnit"), ringlat::error);
    // associativity violation: t^2 = s, s^2 = t is not associative
    std::vector<std::vector<Vec>> mul4 = {
        {{1, 0, 0}},
        {{0, 1, 0}, {0, 0, 1}},
        {{0, 0, 1}, {0, 0, 0}, {0, 1, 0}},
    };
    CHECK_THROWS_WITH_AS(RingTable::validate(2, 3, mul4, {1, 0, 0}, "bad-assoc"),
                         doctest::Contains("NonAssociative"), ringlat::error);
    Caps tiny;
    tiny.max_size = 8;
    std::vector<std::vector<Vec>> mul3 = {
        {{1, 0, 0, 0}},
        {{0, 1, 0, 0}, {0, 0, 0, 0}},
        {{0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
        {{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
    };
    CHECK_THROWS_WITH_AS(RingTable::validate(2, 4, mul3, {1, 0, 0, 0}, "big", tiny),
                         doctest::Contains("CapExceeded"), ringlat::error);
}

TEST_CASE("ring axioms hold on random samples") {
    std::mt19937_64 rng(3);
    for (TablePtr S : {blocks::z4_t2(), blocks::gf16(), blocks::f2n(4),
                       blocks::f4_y2(), blocks::z8()}) {
        for (u32 t = 0; t < 50; ++t) {
            Vec a = S->element_at(rng() % S->size());
            Vec b = S->element_at(rng() % S->size());
            Vec c = S->element_at(rng() % S->size());
            CHECK(S->mul(a, b) == S->mul(b, a));
            CHECK(S->mul(S->mul(a, b), c) == S->mul(a, S->mul(b, c)));
            CHECK(S->mul(S->unit(), a) == a);
        }
    }
}

TEST_CASE("units") {
    auto z4 = blocks::z4();
    auto us = units(*z4);
    CHECK(us.size() == 2);
    CHECK(us[0] == Vec{1});
    CHECK(us[1] == Vec{3});
    CHECK(units(*blocks::f2n(3)).size() == 1);
    auto t2 = blocks::f2_t2();
    auto ut = units(*t2);
    CHECK(ut.size() == 2);  // 1 and 1+t
    // gf64 really is a field
    u32 count = 0;
    for (u64 i = 1; i < blocks::gf64()->size(); ++i)
        if (blocks::gf64()->is_unit(blocks::gf64()->element_at(i))) ++count;
    CHECK(count == 63);
}

TEST_CASE("span closure") {
    auto S = blocks::f2n(3);
    // seed {unit} -> prime subring
    Submodule prime = span_closure(*S, {});
    CHECK(prime.size() == 2);
    // seed {e1} -> F2 e1 + F2 (1 - e1), dimension 2
    Submodule r1 = span_closure(*S, {{1, 0, 0}});
    CHECK(r1.size() == 4);
    CHECK(r1.contains(Vec{1, 0, 0}));
    CHECK(r1.contains(Vec{0, 1, 1}));
    // seed {e1+e2, e1+e3} in F2^4 -> contains e1, dimension 4
    auto S4 = blocks::f2n(4);
    Submodule w = span_closure(*S4, {{1, 1, 0, 0}, {1, 0, 1, 0}});
    CHECK(w.size() == 16);
    CHECK(w.contains(Vec{1, 0, 0, 0}));
}

TEST_CASE("additive sums of subrings need not be rings") {
    auto S4 = blocks::f2n(4);
    Submodule t = span_closure(*S4, {{1, 1, 0, 0}});
    Submodule u = span_closure(*S4, {{1, 0, 1, 0}});
    Submodule sum = t.sum(u);
    CHECK(sum.size() == 8);
    CHECK(!is_mult_closed(*S4, sum));
    CHECK(!sum.contains(Vec{1, 0, 0, 0}));
    // same shape in F2[x,y]/(x^2,y^2)
    auto G = blocks::f2_x2y2();
    Submodule rx = span_closure(*G, {{0, 1, 0, 0}});
    Submodule ry = span_closure(*G, {{0, 0, 1, 0}});
    Submodule s2 = rx.sum(ry);
    CHECK(!is_mult_closed(*G, s2));
    CHECK(!s2.contains(Vec{0, 0, 0, 1}));
}

TEST_CASE("idempotents and primitive decomposition") {
    auto S = blocks::f2n(3);
    auto fs = primitive_idempotent_decomposition(S);
    CHECK(fs.size() == 3);
    for (auto& f : fs) CHECK(f.ring.table->size() == 2);
    // the idempotents are orthogonal and sum to the unit
    Vec total = S->zero();
    for (auto& f : fs) total = S->add(total, f.idem);
    CHECK(total == S->unit());
    for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = i + 1; j < fs.size(); ++j)
            CHECK(S->is_zero(S->mul(fs[i].idem, fs[j].idem)));

    auto local = blocks::f2_t2();
    CHECK(primitive_idempotent_decomposition(local).size() == 1);

    auto mixed = std::make_shared<const RingTable>(
        direct_product(*blocks::f4_y2(), *blocks::f2(), "F4[y]xF2"));
    auto fs2 = primitive_idempotent_decomposition(mixed);
    CHECK(fs2.size() == 2);
    std::vector<u64> sizes;
    for (auto& f : fs2) sizes.push_back(f.ring.table->size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<u64>{2, 16});
    // each factor is local
    for (auto& f : fs2) {
        auto fprim = primitive_idempotents_of_subring(
            *f.ring.table,
            Submodule::full(f.ring.table->modulus(), f.ring.table->rank()));
        CHECK(fprim.size() == 1);
    }
}

TEST_CASE("jacobson radical and maximal ideals") {
    auto z4 = blocks::z4();
    Submodule j = jacobson_radical(*z4);
    CHECK(j.size() == 2);
    CHECK(j.contains(Vec{2}));
    auto maxs = maximal_ideals(*z4);
    REQUIRE(maxs.size() == 1);
    CHECK(maxs[0].size() == 2);

    auto f23 = blocks::f2n(3);
    auto maxs3 = maximal_ideals(*f23);
    CHECK(maxs3.size() == 3);
    for (auto& m : maxs3) CHECK(m.size() == 4);

    // defining property of J on a small ring: 1 - x r is a unit for all r
    auto T = blocks::z4_t2();
    Submodule jt = jacobson_radical(*T);
    for (const Vec& x : jt.elements())
        for (u64 i = 0; i < T->size(); ++i) {
            Vec r = T->element_at(i);
            CHECK(T->is_unit(T->sub(T->unit(), T->mul(x, r))));
        }
    // and everything outside J fails the property for some r
    for (u64 i = 0; i < T->size(); ++i) {
        Vec x = T->element_at(i);
        if (jt.contains(x)) continue;
        bool witness = false;
        for (u64 k = 0; k < T->size() && !witness; ++k)
            witness = !T->is_unit(T->sub(T->unit(), T->mul(x, T->element_at(k))));
        CHECK(witness);
    }
}

TEST_CASE("conductor") {
    auto S = blocks::f2n(3);
    Submodule full = Submodule::full(2, 3);
    CHECK(conductor(*S, full).size() == 8);  // unit ideal
    Submodule diag = span_closure(*S, {});
    Submodule c = conductor(*S, diag);
    CHECK(c.size() == 1);

    // conductor contains every ideal of S inside R: exhaustive search
    auto T = blocks::z4_t2();
    Submodule R = span_closure(*T, {{2, 1}});  // Z/4 + Z/4*(2 + t)? closure
    Submodule cond = conductor(*T, R);
    CHECK(is_ideal_of(*T, Submodule::full(4, 2), cond));
    CHECK(R.contains(cond));
    // enumerate all ideals of T via closure of element subsets (T small)
    std::vector<Submodule> ideals;
    for (u64 i = 0; i < T->size(); ++i) {
        Submodule one = ideal_span(*T, Submodule::full(4, 2), {T->element_at(i)});
        if (std::find(ideals.begin(), ideals.end(), one) == ideals.end())
            ideals.push_back(one);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        size_t sz = ideals.size();
        for (size_t a = 0; a < sz; ++a)
            for (size_t b = a + 1; b < sz; ++b) {
                Submodule s = ideals[a].sum(ideals[b]);
                if (std::find(ideals.begin(), ideals.end(), s) == ideals.end()) {
                    ideals.push_back(s);
                    grew = true;
                }
            }
    }
    for (const Submodule& I : ideals)
        if (R.contains(I)) CHECK(cond.contains(I));
}

TEST_CASE("quotients") {
    auto T = blocks::z4_t2();
    // I = 2S: quotient is F2[t]/t^2
    Submodule twoS = ideal_span(*T, Submodule::full(4, 2), {{2, 0}});
    CHECK(twoS.size() == 4);
    QuotientMap q = quotient_ring(T, twoS);
    CHECK(q.table->modulus() == 2);
    CHECK(q.table->rank() == 2);
    CHECK(q.table->size() == 4);
    CHECK(twoS.size() * q.table->size() == T->size());
    // the image of t is nilpotent of index 2
    Vec tbar = q.project(Vec{0, 1}.data());
    CHECK(q.table->is_nilpotent(tbar));
    CHECK(!q.table->is_zero(tbar));

    // I = (2t) = {0, 2t}: quotient has mixed invariant factors Z/4 x Z/2
    Submodule i2t = ideal_span(*T, Submodule::full(4, 2), {{0, 2}});
    CHECK(i2t.size() == 2);
    CHECK_THROWS_WITH_AS(quotient_ring(T, i2t), doctest::Contains("NotFree"),
                         ringlat::error);

    // zero ideal: identity up to canonical form
    QuotientMap qz = quotient_ring(T, Submodule::zero(4, 2));
    CHECK(qz.table->size() == T->size());
    CHECK(qz.table->modulus() == 4);

    // coordinate projection: F2^4 by F2 e4 with R containing e4
    auto S4 = blocks::f2n(4);
    Extension E = make_extension(S4, {{0, 0, 0, 1}});
    Submodule I = ideal_span(*S4, Submodule::full(2, 4), {{0, 0, 0, 1}});
    Extension Eq = quotient_extension(E, I);
    CHECK(Eq.S->size() == 8);
    CHECK(Eq.R.size() == 2);
}

TEST_CASE("localization and split") {
    // R local: localization is the whole extension
    auto T = blocks::z4_t2();
    Extension E = make_extension(T, {});
    auto maxs = maximal_ideals_of_subring(*T, E.R);
    REQUIRE(maxs.size() == 1);
    auto loc = localize_extension(E, maxs[0]);
    CHECK(loc.ext.S->size() == T->size());
    CHECK(loc.ext.R.size() == E.R.size());

    // R = F2 x F2 inside S = F2^3 x F2 (block diagonal)
    auto S4 = blocks::f2n(4);
    Extension E2 = make_extension(S4, {{1, 1, 1, 0}, {0, 0, 0, 1}});
    CHECK(E2.R.size() == 4);
    auto maxs2 = maximal_ideals_of_subring(*S4, E2.R);
    REQUIRE(maxs2.size() == 2);
    // localizing at the ideal killing the first block gives F2 in F2^3
    bool saw_f23 = false, saw_f2 = false;
    for (const auto& M : maxs2) {
        auto l = localize_extension(E2, M);
        if (l.ext.S->size() == 8) {
            CHECK(l.ext.R.size() == 2);
            saw_f23 = true;
        }
        if (l.ext.S->size() == 2) {
            CHECK(l.ext.R.size() == 2);
            saw_f2 = true;
        }
    }
    CHECK(saw_f23);
    CHECK(saw_f2);

    auto parts = split_extension(E2);
    CHECK(parts.size() == 2);
    u64 prod = 1;
    for (auto& p : parts) prod *= p.ext.S->size();
    CHECK(prod == S4->size());

    // CRT product across coprime moduli
    auto z6 = std::make_shared<const RingTable>(
        direct_product(*blocks::f2(), *blocks::f3(), "Z6"));
    CHECK(z6->modulus() == 6);
    CHECK(z6->size() == 6);
    CHECK_THROWS_WITH_AS(direct_product(*blocks::f2(), *blocks::z4(), "bad"),
                         doctest::Contains("NotFree"), ringlat::error);
}

TEST_CASE("msupp and localization partition size") {
    auto S4 = blocks::f2n(4);
    Extension E = make_extension(S4, {{1, 1, 1, 0}, {0, 0, 0, 1}});
    auto supp = ext_msupp(E);
    // first block F2 in F2^3 is nontrivial; second block F2 in F2 is trivial
    CHECK(supp.size() == 1);
    auto maxs = maximal_ideals_of_subring(*S4, E.R);
    u64 prod = 1;
    for (auto& M : maxs) prod *= localize_extension(E, M).ext.S->size();
    CHECK(prod == S4->size());
}
