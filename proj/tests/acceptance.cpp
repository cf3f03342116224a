// Acceptance suite: runs the headline scenarios end to end, one pass/fail
// line per criterion, enforcing exact values and the stated runtime bounds.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "ringlat/blocks.hpp"
#include "ringlat/checks.hpp"
#include "ringlat/errors.hpp"

using namespace ringlat;

namespace {

struct Criterion {
    std::string name;
    double budget_ms;
    std::function<void(std::vector<std::string>&)> run;
};

void expect(std::vector<std::string>& bad, bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
}

// Independent partition-count oracle via the Bell triangle recurrence
// (distinct from the restricted-growth-string enumeration inside the corpus).
u64 bell_triangle(u32 n) {
    std::vector<std::vector<u64>> tri{{1}};
    for (u32 i = 1; i <= n; ++i) {
        std::vector<u64> row{tri.back().back()};
        for (u64 v : tri.back()) row.push_back(row.back() + v);
        tri.push_back(std::move(row));
    }
    return tri[n][0];
}

AnalysisBundle corpus_bundle(const std::string& name, u32 budget = 1024) {
    return analyze_extension(build_corpus_item(name).ext, budget);
}

// --- criteria ----------------------------------------------------------------

void criterion1(std::vector<std::string>& bad) {
    AnalysisBundle b = corpus_bundle("diag-f2-3");
    expect(bad, b.lattice.node_count() == 5, "node count must be 5");
    expect(bad, b.report.length == 2, "length must be 2");
    expect(bad, b.brute.is_delta && b.generators.is_delta && b.characterized.is_delta,
           "delta must hold on all three routes");
}

void criterion2(std::vector<std::string>& bad) {
    AnalysisBundle b = corpus_bundle("diag-f2-4");
    expect(bad, !b.brute.is_delta && !b.generators.is_delta &&
                    !b.characterized.is_delta,
           "delta must fail on all three routes");
    expect(bad, b.lattice.node_count() == bell_triangle(4),
           "node count must match the partition oracle");
    expect(bad, b.lattice.node_count() == 15, "node count must be 15");
    // the classical witness: x = e1+e2, y = e1+e3, missing element e1
    Submodule rx = adjoin(*b.ext.S, b.ext.R, Vec{1, 1, 0, 0}.data());
    Submodule ry = adjoin(*b.ext.S, b.ext.R, Vec{1, 0, 1, 0}.data());
    Vec e1{1, 0, 0, 0};
    expect(bad, subring_join(*b.ext.S, rx, ry).contains(e1),
           "e1 must lie in the compositum of the witness pair");
    expect(bad, !rx.sum(ry).contains(e1), "e1 must be missing from the sum");
    expect(bad, b.brute.witness.has_value(), "brute force must return a witness");
    if (b.brute.witness) {
        const DeltaWitness& w = *b.brute.witness;
        Submodule join = subring_join(*b.ext.S, b.lattice.nodes[w.node_t],
                                      b.lattice.nodes[w.node_u]);
        Submodule sum = b.lattice.nodes[w.node_t].sum(b.lattice.nodes[w.node_u]);
        expect(bad, join.contains(w.missing) && !sum.contains(w.missing),
               "returned witness must be genuine");
    }
}

void criterion3(std::vector<std::string>& bad) {
    AnalysisBundle b = corpus_bundle("branched-f4xf2xf2");
    expect(bad, b.lattice.node_count() == 7, "node count must be 7");
    expect(bad, b.dec.seminormalization == b.ext.R, "+k must equal k");
    expect(bad, b.dec.t_closure.size() == 8, "tk must be the 8-element product");
    expect(bad, b.brute.is_delta && b.characterized.is_delta, "delta must hold");
    // cover labels reproduce the diagram: the three atoms and the fan into
    // k^3 are decomposed, the two legs through the larger residue field are
    // inert, and nothing is ramified
    u32 counts[3] = {0, 0, 0};
    for (const CoverEdge& c : b.lattice.covers)
        ++counts[static_cast<int>(c.type.kind)];
    expect(bad, counts[static_cast<int>(MinKind::ramified)] == 0,
           "no ramified edges expected");
    expect(bad, counts[static_cast<int>(MinKind::inert)] == 2,
           "exactly two inert edges expected");
    expect(bad, counts[static_cast<int>(MinKind::decomposed)] == 7,
           "exactly seven decomposed edges expected");
    auto tclo = b.lattice.find(b.dec.t_closure);
    const CoverEdge* e = b.lattice.cover_between(*tclo, b.lattice.top);
    expect(bad, e && e->type.kind == MinKind::inert, "tk below S must be inert");
    // the inert edge out of an atom lands on the K-block node R', whose top
    // edge is decomposed
    bool saw_atom_inert = false;
    for (const CoverEdge& c : b.lattice.covers) {
        if (c.lo == b.lattice.bottom) continue;
        if (c.type.kind != MinKind::inert || c.hi == b.lattice.top) continue;
        saw_atom_inert = true;
        const CoverEdge* top = b.lattice.cover_between(c.hi, b.lattice.top);
        expect(bad, top && top->type.kind == MinKind::decomposed,
               "the K-block node must sit decomposed below S");
    }
    expect(bad, saw_atom_inert, "one atom must carry an inert edge");
}

void criterion4(std::vector<std::string>& bad) {
    CorpusItem item = build_corpus_item("dualnum-cube");
    AnalysisBundle b = analyze_extension(item.ext, 1024);
    expect(bad, b.report.length == 4, "length must be 4");
    expect(bad, b.lattice.node_count() == 12, "node count must be 12");
    auto fails = check_expectations(item, b);
    for (const auto& f : fails) bad.push_back("corpus expectation: " + f);
    expect(bad, b.brute.is_delta && b.characterized.is_delta,
           "delta must hold via brute force and the characterization");
    DeltaVerdict again =
        is_delta_characterized(b.lattice, b.tables, b.dec, b.ext, 1024);
    expect(bad, again.trace == b.characterized.trace,
           "characterized trace must be reproducible");
}

void criterion5(std::vector<std::string>& bad) {
    CorpusItem item = build_corpus_item("quartic-order-mod2");
    AnalysisBundle b = analyze_extension(item.ext, 1024);
    expect(bad, !b.brute.is_delta, "brute force must refute delta");
    expect(bad, !b.characterized.is_delta, "characterization must refute delta");
    expect(bad, b.report.length == 3, "length must be 3");
    auto fails = check_expectations(item, b);
    for (const auto& f : fails) bad.push_back("corpus expectation: " + f);
}

void criterion6(std::vector<std::string>& bad) {
    AnalysisBundle ram = corpus_bundle("spir-ram");
    expect(bad, ram.report.chained, "Z/4 in Z/4[t]/t^2 must be chained");
    expect(bad, ram.brute.is_delta && ram.characterized.is_delta,
           "Z/4 in Z/4[t]/t^2 must be delta");
    CorpusItem dec = build_corpus_item("spir-dec");
    AnalysisBundle db = analyze_extension(dec.ext, 1024);
    expect(bad, db.brute.is_delta, "Z/4 in Z/4[t]/(t^2-t) must be delta");
    auto fails = check_expectations(dec, db);
    for (const auto& f : fails) bad.push_back("corpus expectation: " + f);
}

void criterion7(std::vector<std::string>& bad) {
    AnalysisBundle f16 = corpus_bundle("tower-f16");
    expect(bad, f16.report.chained && f16.brute.is_delta,
           "F2 in F16 must be chained and delta");
    AnalysisBundle f64 = corpus_bundle("tower-f64");
    expect(bad, !f64.report.chained, "F2 in F64 must not be chained");
    expect(bad, f64.report.modular, "F2 in F64 must be modular");
    expect(bad, !f64.brute.is_delta && !f64.characterized.is_delta,
           "F2 in F64 must not be delta");
    // the modular criterion: delta iff the t-closure is arithmetic in S
    bool arith = is_arithmetic_pair(
        f64.ext.S, f64.dec.t_closure,
        Submodule::full(f64.ext.S->modulus(), f64.ext.S->rank()), 1024);
    expect(bad, !arith, "t-closure of the F64 tower must not be arithmetic");
}

void criterion8(std::vector<std::string>& bad) {
    AnalysisBundle nc = corpus_bundle("cover-noncat");
    expect(bad, !nc.report.catenarian, "mixed pair instance must not be catenarian");
    AnalysisBundle l2 = corpus_bundle("cover-len2");
    expect(bad, l2.report.length == 2, "length-2 instance must have length 2");
    AnalysisBundle l3 = corpus_bundle("cover-len3");
    expect(bad, l3.report.length == 3, "length-3 instance must have length 3");
}

void criterion9(std::vector<std::string>& bad) {
    struct Case {
        std::string name;
        PwmClass cls;
        bool delta;
    };
    for (const Case& c : {Case{"diag-f2-3", PwmClass::alpha, true},
                          Case{"diag-f2-4", PwmClass::alpha, false},
                          Case{"pwm-gamma", PwmClass::gamma, true}}) {
        AnalysisBundle b = corpus_bundle(c.name);
        expect(bad, b.pwm.has_value(), c.name + ": base must be local");
        if (!b.pwm) continue;
        expect(bad, b.pwm->cls == c.cls,
               c.name + ": wrong pointwise-minimal class " +
                   pwm_class_name(b.pwm->cls));
        expect(bad, b.pwm->delta_predicted.has_value() &&
                        *b.pwm->delta_predicted == c.delta,
               c.name + ": wrong delta prediction");
        expect(bad, b.brute.is_delta == c.delta,
               c.name + ": brute force disagrees with the classification");
    }
    // gamma case: N^2 inside M explicitly
    AnalysisBundle g = corpus_bundle("pwm-gamma");
    auto maxs = maximal_ideals(*g.ext.S);
    expect(bad, maxs.size() == 1, "gamma case must be unbranched");
    if (maxs.size() == 1) {
        const Submodule& N = maxs[0];
        Vec prod(g.ext.S->rank());
        bool in_m = true;
        Submodule M = maximal_ideals_of_subring(*g.ext.S, g.ext.R)[0];
        for (u32 i = 0; i < N.rows(); ++i)
            for (u32 j = i; j < N.rows(); ++j) {
                g.ext.S->mul_into(N.row(i), N.row(j), prod.data());
                in_m &= M.contains(prod.data());
            }
        expect(bad, in_m, "gamma case must have N^2 inside M");
    }
}

void criterion10(std::vector<std::string>& bad) {
    FuzzParams params;
    CheckOptions opts;
    opts.node_budget = 256;
    u32 failures = 0;
    for (u64 seed = 0; seed < 200; ++seed) {
        FuzzOutcome o = run_fuzz_seed(seed, params, opts);
        if (!o.violations.empty()) {
            ++failures;
            if (failures <= 3)
                for (const auto& v : o.violations)
                    bad.push_back("seed " + std::to_string(seed) + ": " + v);
        }
    }
    expect(bad, failures == 0,
           std::to_string(failures) + " of 200 seeds violated the invariants");
}

}  // namespace

int main() {
    std::vector<Criterion> cs = {
        {"diagonal F2 in F2^3: 5 nodes, length 2, delta", 10, criterion1},
        {"diagonal F2 in F2^4: 15 nodes, delta fails with witness", 50, criterion2},
        {"branched F4/F2/F2 block: 7 nodes, closures, d/i labels", 50, criterion3},
        {"dual-number cube: 12 nodes, length 4, B2 sites", 1000, criterion4},
        {"quartic order mod 2: delta refuted, length 3", 1000, criterion5},
        {"SPIR pair: chained and decomposed cases are delta", 100, criterion6},
        {"field towers: F16 delta, F64 modular non-delta", 100, criterion7},
        {"cover-pair trio: non-catenarian, length 2, length 3", 200, criterion8},
        {"pointwise-minimal suite: alpha/alpha/gamma", 200, criterion9},
        {"200 fuzz seeds: zero route disagreements or violations", 60000,
         criterion10},
    };

    int failures = 0;
    for (size_t i = 0; i < cs.size(); ++i) {
        std::vector<std::string> bad;
        auto start = std::chrono::steady_clock::now();
        try {
            cs[i].run(bad);
        } catch (const std::exception& e) {
            bad.push_back(std::string("exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        std::ostringstream time;
        time.setf(std::ios::fixed);
        time.precision(1);
        time << ms << " ms (budget " << cs[i].budget_ms << " ms)";
        if (ms > cs[i].budget_ms)
            bad.push_back("runtime budget exceeded: " + time.str());
        if (bad.empty()) {
            std::cout << "[PASS] criterion " << (i + 1) << ": " << cs[i].name
                      << " — " << time.str() << "\n";
        } else {
            ++failures;
            std::cout << "[FAIL] criterion " << (i + 1) << ": " << cs[i].name
                      << " — " << time.str() << "\n";
            for (const auto& line : bad) std::cout << "       " << line << "\n";
        }
    }
    std::cout << (failures ? "[FAIL] " : "[PASS] ") << (cs.size() - failures)
              << "/" << cs.size() << " acceptance criteria passed\n";
    return failures ? 1 : 0;
}
