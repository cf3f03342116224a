#pragma once

#include "ringlat/ring_ops.hpp"

namespace ringlat {

// A ring extension R within S: the ambient table plus a canonically
// represented unital subring.
struct Extension {
    TablePtr S;
    Submodule R;

    bool trivial() const { return R.size() == S->size(); }
};

Extension make_extension(TablePtr S, const std::vector<Vec>& subring_generators);

Submodule ext_conductor(const Extension& E);

// Maximal ideals M of R with R_M != S_M, sorted canonically.
std::vector<Submodule> ext_msupp(const Extension& E);

struct LocalizedExtension {
    Extension ext;     // e*R within e*S, presented over the factor table
    RebasedRing map;   // ambient <-> factor coordinates for e*S
    Vec idem;          // the primitive idempotent of R carrying M
};

LocalizedExtension localize_extension(const Extension& E, const Submodule& M);

RingTable direct_product(const RingTable& A, const RingTable& B,
                         const std::string& name, const Caps& caps = Caps{});

// Factor extensions e_i*R within e_i*S over the primitive idempotents of R.
std::vector<LocalizedExtension> split_extension(const Extension& E);

struct QuotientMap {
    TablePtr table;               // the quotient ring
    TablePtr ambient;
    std::vector<u32> coord;       // ambient d x d diagonal-frame transform
    std::vector<u32> kept_cols;   // surviving coordinates
    std::vector<u32> moduli;      // per-coordinate modulus (all equal)

    Vec project(const u32* ambient_v) const;
    Submodule project_submodule(const Submodule& sub) const;
};

// Quotient of S by an ideal I, presented as a ring table over Z/m. Fails
// with NotFree when the quotient module is not free over a single Z/m.
QuotientMap quotient_ring(TablePtr S, const Submodule& I,
                          const Caps& caps = Caps{});

// Quotient of the whole extension by an ideal of S contained in R.
Extension quotient_extension(const Extension& E, const Submodule& I,
                             QuotientMap* out_map = nullptr);

}  // namespace ringlat
