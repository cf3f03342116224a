#pragma once

#include "ringlat/analysis.hpp"
#include "ringlat/corpus.hpp"

namespace ringlat {

struct CheckOptions {
    u32 node_budget = 256;
    bool order_independence = true;
    u32 subinterval_samples = 8;
};

// Runs the full cross-check battery on one extension: route agreement of the
// three delta deciders, the lattice/type/closure laws, localization, quotient
// and product transfer, cover-pair case analysis and crosswise exchange.
// Returns one line per violation; empty means the instance is clean.
std::vector<std::string> check_instance(const Extension& E,
                                        const CheckOptions& opts);

struct FuzzOutcome {
    u64 seed = 0;
    std::string desc;
    u64 nodes = 0;
    std::vector<std::string> violations;
};

FuzzOutcome run_fuzz_seed(u64 seed, const FuzzParams& params,
                          const CheckOptions& opts);

}  // namespace ringlat
