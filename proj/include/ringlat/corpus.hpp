#pragma once

#include <functional>
#include <iosfwd>

#include "ringlat/analysis.hpp"

namespace ringlat {

// An expected integer value; computed == true means the value was produced
// by an independent oracle when the item was built, not written by hand.
struct ExpectedCount {
    long long value = 0;
    bool computed = false;
};

struct Expect {
    std::optional<ExpectedCount> nodes, length;
    std::optional<bool> delta, small_delta, simple, chained, catenarian,
        modular, distributive, boolean_lattice, b2, arithmetic, subintegral,
        infra_integral, seminormal, t_closed;
    std::optional<std::string> pwm;
    std::optional<long long> plus_size, tclo_size;
};

struct CorpusItem {
    std::string name;
    std::string summary;
    Extension ext;
    Expect expect;
    // item-specific structural checks; appends one line per failure
    std::function<void(const AnalysisBundle&, std::vector<std::string>&)> extra;
};

std::vector<std::string> corpus_names();
CorpusItem build_corpus_item(const std::string& name);

// Compare an analysis against the expectations; returns failure lines.
std::vector<std::string> check_expectations(const CorpusItem& item,
                                            const AnalysisBundle& b);

// Build, analyze and verify every named item (default: all); prints one
// line per item and returns true iff everything passed.
bool run_corpus(const std::vector<std::string>& names, std::ostream& out,
                u32 node_budget, bool negate_for_selftest = false);

// ---------------------------------------------------------------------------

struct FuzzParams {
    u32 max_nodes = 256;
    u32 max_attempts = 64;
};

struct FuzzInstance {
    Extension ext;
    u64 seed;
    std::string desc;
};

// Deterministic seeded instance: a product of 1-3 validated blocks with a
// random small subring; instances whose lattice exceeds max_nodes are
// discarded and the attempt counter advances the derived seed.
FuzzInstance fuzz_instance(u64 seed, const FuzzParams& params);

}  // namespace ringlat
