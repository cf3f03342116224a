#pragma once

#include <array>
#include <map>
#include <optional>

#include "ringlat/closures.hpp"
#include "ringlat/kernels.hpp"
#include "ringlat/lattice.hpp"

namespace ringlat {

// meet/join index tables over the node list of one lattice.
struct MeetJoinTables {
    u32 n = 0;
    std::vector<u32> meet, join;
    u32 meet_of(u32 i, u32 j) const { return meet[static_cast<size_t>(i) * n + j]; }
    u32 join_of(u32 i, u32 j) const { return join[static_cast<size_t>(i) * n + j]; }
};

MeetJoinTables build_meet_join_tables(const IntervalLattice& L);

struct LatticeReport {
    u32 length = 0;
    std::vector<std::pair<u32, u64>> chain_spectrum;  // (length, #maximal chains)
    std::vector<u32> atoms;
    bool catenarian = true;
    bool chained = true;
    bool modular = true;
    bool distributive = true;
    bool semimodular = true;
    bool boolean_lattice = true;
    bool b2 = false;
    bool arithmetic = true;
    std::optional<std::array<u32, 3>> modular_witness;
    std::optional<std::array<u32, 3>> distributive_witness;
    std::optional<std::array<u32, 2>> semimodular_witness;
    std::optional<std::array<u32, 2>> catenarian_witness;
    std::vector<u32> loewy_series;                // node indices, bottom..top
    std::vector<std::vector<u32>> complements;    // per node
    std::optional<std::vector<u32>> pinched_at;   // proper chain, if found
};

// Property deciders; each is an exhaustive quantifier scan with an
// early-exit witness, dispatched through the scan kernels.
bool is_catenarian(const IntervalLattice& L, std::array<u32, 2>* witness = nullptr);
bool is_chained(const IntervalLattice& L);
bool is_modular(const IntervalLattice& L, const MeetJoinTables& T,
                std::array<u32, 3>* witness = nullptr);
bool is_distributive(const IntervalLattice& L, const MeetJoinTables& T,
                     std::array<u32, 3>* witness = nullptr);
bool is_semimodular(const IntervalLattice& L, const MeetJoinTables& T,
                    std::array<u32, 2>* witness = nullptr);
std::vector<u32> complements_of(const IntervalLattice& L, const MeetJoinTables& T,
                                u32 node);
bool is_boolean(const IntervalLattice& L, const MeetJoinTables& T);
bool is_b2(const IntervalLattice& L);
bool is_pinched_at(const IntervalLattice& L, const std::vector<u32>& chain);

std::vector<u32> atoms_of(const IntervalLattice& L);
std::vector<u32> loewy_series(const IntervalLattice& L, const MeetJoinTables& T);

// Arithmetic: every localization at a maximal ideal in MSupp is chained.
// Decided by localize-then-enumerate; `cross_check` additionally filters the
// global lattice through each idempotent and verifies agreement.
bool is_arithmetic(const Extension& E, u32 node_budget, bool cross_check = false);

// Arithmetic for a subring pair (T within U) of an ambient ring.
bool is_arithmetic_pair(TablePtr S, const Submodule& T,
                        const Submodule& U, u32 node_budget);

LatticeReport build_report(const IntervalLattice& L,
                           const CanonicalDecomposition& dec,
                           const Extension& E, u32 node_budget);

// Modularity of a sub-interval [lo, hi], scanning only its nodes.
bool interval_modular(const IntervalLattice& L, const MeetJoinTables& T,
                      u32 lo, u32 hi);
bool interval_boolean(const IntervalLattice& L, const MeetJoinTables& T,
                      u32 lo, u32 hi);

}  // namespace ringlat
