#pragma once

#include <optional>

#include "ringlat/ring_table.hpp"

namespace ringlat {

// --- element-level enumeration ---------------------------------------------

std::vector<Vec> units(const RingTable& S, const Caps& caps = Caps{});
std::vector<Vec> idempotents(const RingTable& S, const Caps& caps = Caps{});

// --- subrings and ideals as submodules of the ambient -----------------------
//
// A "subring" below is a Submodule that contains the ambient unit and is
// multiplicatively closed; an "ideal of T" is a Submodule inside T closed
// under multiplication by T. All of this works for proper subrings without
// re-presenting them, so nothing here requires freeness.

bool is_mult_closed(const RingTable& S, const Submodule& m);
bool is_unital_subring(const RingTable& S, const Submodule& m);

// Smallest unital subring containing seed: alternate additive span and
// pairwise products to a fixed point.
Submodule span_closure(const RingTable& S, const std::vector<Vec>& seed);
Submodule adjoin(const RingTable& S, const Submodule& T, const u32* x);
Submodule subring_join(const RingTable& S, const Submodule& T, const Submodule& U);

// Ideal of the subring T generated by seed (additive span closed under
// multiplication by T's basis rows). T defaults to the full ring.
Submodule ideal_span(const RingTable& S, const Submodule& T,
                     const std::vector<Vec>& seed);

bool is_ideal_of(const RingTable& S, const Submodule& T, const Submodule& I);

// (R : S) = {x in S : xS within R}, the largest ideal of S contained in R.
Submodule conductor(const RingTable& S, const Submodule& R);
// Largest ideal of U contained in T, for subrings T within U.
Submodule conductor_of_pair(const RingTable& S, const Submodule& T,
                            const Submodule& U);

// All elements of a subring, in ambient-lex order.
std::vector<Vec> subring_elements_lex(const RingTable& S, const Submodule& T);

std::vector<Vec> idempotents_of_subring(const RingTable& S, const Submodule& T);
std::vector<Vec> primitive_idempotents_of_subring(const RingTable& S,
                                                  const Submodule& T);
Submodule nilradical_of_subring(const RingTable& S, const Submodule& T);
std::vector<Submodule> maximal_ideals_of_subring(const RingTable& S,
                                                 const Submodule& T);

Submodule jacobson_radical(const RingTable& S);
std::vector<Submodule> maximal_ideals(const RingTable& S);

// --- factor rings -----------------------------------------------------------

// Presents a multiplicatively closed submodule W (with its own unit e) as a
// RingTable over Z/m, m the additive order of e. Requires W to be free as a
// module over Z/m, which holds for every idempotent factor of a free ring.
struct RebasedRing {
    TablePtr table;
    std::vector<Vec> basis;   // new basis vectors in ambient coordinates
    std::vector<u32> orders;  // additive order of each basis vector (== m)
    TablePtr ambient;

    Vec to_local(const u32* ambient_v) const;
    Vec to_local_raw(const u32* ambient_v, u32 m) const;
    Vec to_ambient(const u32* local_v) const;
    Submodule map_submodule(const Submodule& sub_of_W) const;

    // diagonal frame used for coordinate extraction
    std::vector<u32> coord_;      // d x d transform into the diagonal frame
    std::vector<u32> diag_cols_;  // diagonal column per basis vector
    std::vector<u32> diag_vals_;  // diagonal value per basis vector
};

RebasedRing rebase_ring(TablePtr S, const Submodule& W, const Vec& e,
                        std::string name);

struct Factor {
    Vec idem;
    RebasedRing ring;
};

// Pairwise-orthogonal primitive idempotents summing to the unit, with each
// factor e*S re-presented as a local ring table.
std::vector<Factor> primitive_idempotent_decomposition(TablePtr S);

}  // namespace ringlat
