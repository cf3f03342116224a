#pragma once

#include "ringlat/delta.hpp"

namespace ringlat {

// Everything the CLI, corpus and acceptance suite need about one extension,
// computed in one pass.
struct AnalysisBundle {
    Extension ext;
    IntervalLattice lattice;
    MeetJoinTables tables;
    CanonicalDecomposition dec;
    TypeFlags flags;
    LatticeReport report;
    DeltaVerdict brute;
    DeltaVerdict characterized;
    GeneratorsVerdict generators;
    bool small_delta = false;
    std::optional<std::pair<Vec, Vec>> small_delta_witness;
    std::optional<Vec> simple_gen;
    std::optional<PwmResult> pwm;  // present when R is local
    u32 node_budget = 0;
};

AnalysisBundle analyze_extension(const Extension& E, u32 node_budget);

}  // namespace ringlat
