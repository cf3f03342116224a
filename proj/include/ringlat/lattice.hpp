#pragma once

#include <optional>

#include "ringlat/extension.hpp"

namespace ringlat {

enum class MinKind : u8 { ramified, decomposed, inert };
const char* min_kind_name(MinKind k);
char min_kind_letter(MinKind k);

struct MinimalType {
    MinKind kind;
    Submodule crucial_ideal;  // maximal in the lower ring, equals the conductor
    u32 residue_degree;
};

struct CoverEdge {
    u32 lo, hi;
    MinimalType type;
};

// node_flags bits
inline constexpr u8 kNodeAtom = 1;
inline constexpr u8 kNodePlusClosure = 2;
inline constexpr u8 kNodeTClosure = 4;

// Square bit matrix for the containment order.
class BitMatrix {
public:
    void resize(u32 n) {
        n_ = n;
        words_ = (n + 63) / 64;
        bits_.assign(static_cast<size_t>(n) * words_, 0);
    }
    void set(u32 i, u32 j) {
        bits_[static_cast<size_t>(i) * words_ + j / 64] |= (1ull << (j % 64));
    }
    bool get(u32 i, u32 j) const {
        return (bits_[static_cast<size_t>(i) * words_ + j / 64] >> (j % 64)) & 1;
    }
    const u64* row(u32 i) const { return bits_.data() + static_cast<size_t>(i) * words_; }
    u32 words() const { return words_; }

private:
    u32 n_ = 0, words_ = 0;
    std::vector<u64> bits_;
};

// The full interval [R, top] with Hasse diagram and per-cover minimal types.
// Immutable once built; indices are stable and deterministic (nodes sorted
// by size then canonical basis, covers sorted by (lo, hi)).
class IntervalLattice {
public:
    TablePtr S;
    Submodule R;               // bottom submodule
    std::vector<Submodule> nodes;
    std::vector<CoverEdge> covers;
    std::vector<std::vector<u32>> up, down;  // cover adjacency per node
    BitMatrix leq;             // containment (reflexive)
    u32 bottom = 0, top = 0;
    u32 length = 0;
    std::vector<u8> node_flags;
    std::vector<std::vector<Submodule>> node_max_ideals;

    std::optional<u32> find(const Submodule& m) const;
    bool le(u32 i, u32 j) const { return leq.get(i, j); }
    u64 node_count() const { return nodes.size(); }
    bool trivial() const { return nodes.size() == 1; }
    const CoverEdge* cover_between(u32 lo, u32 hi) const;

    // Nodes of [lo, hi] in index order.
    std::vector<u32> interval_nodes(u32 lo, u32 hi) const;
    // Longest and shortest cover-path lengths from lo to hi (must satisfy le).
    std::pair<u32, u32> interval_length_minmax(u32 lo, u32 hi) const;
    u32 interval_node_count(u32 lo, u32 hi) const;
    bool interval_is_b2(u32 lo, u32 hi) const;
    bool interval_chained(u32 lo, u32 hi) const;

    // Multiset of maximal-chain lengths from bottom to top.
    std::vector<std::pair<u32, u64>> chain_length_spectrum() const;
};

// Breadth-first closure over single-element adjunctions; reaches every
// intermediate ring of [R, top]. Throws NodeBudgetExceeded with the partial
// count if more than node_budget nodes appear.
IntervalLattice enumerate_interval(const Extension& E, u32 node_budget,
                                   const Submodule* top = nullptr,
                                   u64 adjunction_shuffle_seed = 0);

u32 default_node_budget();

bool is_minimal_extension(const RingTable& S, const Submodule& T,
                          const Submodule& U);

MinimalType classify_minimal(const RingTable& S, const Submodule& T,
                             const Submodule& U);

// MSupp(U/T): maximal ideals of T whose localization separates T from U.
std::vector<Submodule> support_of_pair(const RingTable& S, const Submodule& T,
                                       const Submodule& U);

Submodule crucial_ideal(const RingTable& S, const Submodule& T,
                        const Submodule& U);

bool is_spectrally_bijective(const RingTable& S, const Submodule& T,
                             const Submodule& U);

}  // namespace ringlat
