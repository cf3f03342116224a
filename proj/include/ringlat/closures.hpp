#pragma once

#include "ringlat/lattice.hpp"

namespace ringlat {

// Smallest subring of [T, U] over which U is seminormal; equals the largest
// subintegral subextension of T in U. U defaults to the full ring.
Submodule seminormalization(const RingTable& S, const Submodule& T,
                            const Submodule* U = nullptr);

// Same for the t-closure / infra-integral subextensions.
Submodule t_closure(const RingTable& S, const Submodule& T,
                    const Submodule* U = nullptr);

struct TypeFlags {
    bool subintegral = false;
    bool infra_integral = false;
    bool seminormal = false;
    bool t_closed = false;
};

// Residue/spectral classification of T within U per the standard
// definitions; works for any subring pair of the ambient.
TypeFlags classify_type(const RingTable& S, const Submodule& T,
                        const Submodule& U);

struct CanonicalDecomposition {
    Submodule seminormalization;  // +R
    Submodule t_closure;          // tR
    Submodule integral_closure;   // = S for finite rings
};

CanonicalDecomposition canonical_decomposition(const Extension& E);

// Marks the +R / tR nodes in an already-built lattice.
void flag_closure_nodes(IntervalLattice& L, const CanonicalDecomposition& dec);

}  // namespace ringlat
