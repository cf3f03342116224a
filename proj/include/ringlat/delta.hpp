#pragma once

#include "ringlat/latprops.hpp"

namespace ringlat {

enum class DeltaRoute {
    brute_force,
    generators,
    length_le_one,
    t_closed_arithmetic,
    infra_integral_modular,
    seminormal_count,
    canonical_decomposition,
};
const char* delta_route_name(DeltaRoute r);

struct DeltaWitness {
    u32 node_t = 0, node_u = 0;  // lattice indices of the offending pair
    Vec missing;                 // element of TU outside T + U
};

struct DeltaVerdict {
    bool is_delta = true;
    DeltaRoute route = DeltaRoute::brute_force;
    std::optional<DeltaWitness> witness;
    std::vector<std::string> trace;
};

// Sum-equals-product over every unordered node pair; the first failing pair
// (smallest lexicographic index pair) yields the witness.
DeltaVerdict is_delta_bruteforce(const IntervalLattice& L);

// Same decision on a sub-interval [lo, hi] of the lattice.
bool interval_delta(const IntervalLattice& L, u32 lo, u32 hi);

// Caches of single-generated subrings R[x] over all x in S.
struct GenSpanCache {
    std::vector<u32> span_id;        // per element index
    std::vector<Submodule> spans;    // distinct spans
    std::vector<u64> first_element;  // smallest element index per span
};
GenSpanCache build_gen_span_cache(const Extension& E, const Caps& caps = Caps{});

struct GeneratorsVerdict {
    bool is_delta = true;
    std::optional<std::pair<Vec, Vec>> witness;  // first failing (s, t)
};

// R[s,t] == R[s] + R[t] over all element pairs.
GeneratorsVerdict is_delta_generators(const Extension& E,
                                      const GenSpanCache& cache);

// Dispatch through the structure theory: length <= 1, t-closed (arithmetic),
// infra-integral (modular / seminormal counting), and the general canonical
// decomposition route with the B2 condition on mixed cover pairs.
DeltaVerdict is_delta_characterized(const IntervalLattice& L,
                                    const MeetJoinTables& T,
                                    const CanonicalDecomposition& dec,
                                    const Extension& E, u32 node_budget);

// R[x] + R[y] == R[x+y] whenever R[x] != R[y].
bool is_small_delta(const Extension& E, const GenSpanCache& cache,
                    std::optional<std::pair<Vec, Vec>>* witness = nullptr);

// First x in lex order with R[x] = S, if any.
std::optional<Vec> simple_generator(const Extension& E, const GenSpanCache& cache);

enum class PwmClass { not_pwm, minimal, alpha, beta, gamma, delta_case };
const char* pwm_class_name(PwmClass c);

struct PwmResult {
    PwmClass cls = PwmClass::not_pwm;
    std::optional<bool> delta_predicted;  // set for pointwise minimal cases
};

// Pointwise-minimality classification over a local base ring.
PwmResult pointwise_minimal(const Extension& E, const GenSpanCache& cache);

}  // namespace ringlat
