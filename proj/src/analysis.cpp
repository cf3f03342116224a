#include "ringlat/analysis.hpp"

namespace ringlat {

AnalysisBundle analyze_extension(const Extension& E, u32 node_budget) {
    AnalysisBundle b;
    b.ext = E;
    b.node_budget = node_budget;
    b.lattice = enumerate_interval(E, node_budget);
    b.tables = build_meet_join_tables(b.lattice);
    b.dec = canonical_decomposition(E);
    flag_closure_nodes(b.lattice, b.dec);
    b.flags = classify_type(*E.S, E.R,
                            Submodule::full(E.S->modulus(), E.S->rank()));
    b.report = build_report(b.lattice, b.dec, E, node_budget);
    b.brute = is_delta_bruteforce(b.lattice);
    b.characterized =
        is_delta_characterized(b.lattice, b.tables, b.dec, E, node_budget);
    GenSpanCache cache = build_gen_span_cache(E);
    b.generators = is_delta_generators(E, cache);
    std::optional<std::pair<Vec, Vec>> w;
    b.small_delta = is_small_delta(E, cache, &w);
    if (!b.small_delta) b.small_delta_witness = w;
    b.simple_gen = simple_generator(E, cache);
    if (maximal_ideals_of_subring(*E.S, E.R).size() == 1)
        b.pwm = pointwise_minimal(E, cache);
    return b;
}

}  // namespace ringlat
