#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ringlat/zmod.hpp"

namespace ringlat {

// An additive submodule of (Z/n)^d held in Howell normal form. The form is
// canonical: two submodules are equal iff their representations are
// bit-identical, which makes these usable as set/map keys and gives the
// whole lattice layer deterministic, reproducible output.
class Submodule {
public:
    Submodule() = default;

    static Submodule zero(u32 n, u32 d);
    static Submodule full(u32 n, u32 d);
    static Submodule span(u32 n, u32 d, const std::vector<Vec>& gens);

    u32 modulus() const { return n_; }
    u32 ambient_rank() const { return d_; }
    u32 rows() const { return static_cast<u32>(pivot_col_.size()); }
    const u32* row(u32 i) const { return rows_.data() + static_cast<size_t>(i) * d_; }
    u32 pivot_col(u32 i) const { return pivot_col_[i]; }
    u32 pivot_val(u32 i) const { return pivot_val_[i]; }
    u64 size() const { return size_; }
    bool is_zero_module() const { return rows() == 0; }

    // Reduces v in place against the basis; returns true iff v reduces to 0,
    // i.e. the original v was a member. The residue left in v is the
    // canonical coset representative either way.
    bool reduce(u32* v) const;

    bool contains(const u32* v) const;
    bool contains(const Vec& v) const { return contains(v.data()); }
    bool contains(const Submodule& other) const;

    Vec coset_rep(Vec v) const;

    Submodule sum(const Submodule& other) const;
    Submodule intersect(const Submodule& other) const;

    // All size() elements; ordering follows basis coefficients, not lex.
    std::vector<Vec> elements() const;

    bool operator==(const Submodule& o) const {
        return n_ == o.n_ && d_ == o.d_ && rows_ == o.rows_;
    }
    bool operator!=(const Submodule& o) const { return !(*this == o); }
    // Total order: by size, then rows, then flattened content. Sorting node
    // lists with this puts the bottom ring first and the top ring last.
    bool operator<(const Submodule& o) const;

    size_t hash() const;

private:
    u32 n_ = 0, d_ = 0;
    std::vector<u32> rows_;  // rows() x d_, flattened
    std::vector<u32> pivot_col_, pivot_val_;
    u64 size_ = 1;

    void finalize();  // derive pivots and size from rows_
};

struct SubmoduleHash {
    size_t operator()(const Submodule& m) const { return m.hash(); }
};

// Diagonalization of a generator/relation matrix over Z/n with tracked
// change of coordinates, refined so nonzero diagonal entries satisfy the
// divisibility chain (true invariant factors).
//
// Interpreting the rows as generators of W <= (Z/n)^d:
//   W = DirectSum_c  Z * (diag[c] * basis_row(c))   over c with diag[c] != 0,
//   the c-th generator having additive order n / diag[c].
// Interpreting the rows as relations, the quotient (Z/n)^d / span is
//   Prod_c Z/m_c  with m_c = (diag[c] == 0 ? n : diag[c]),
//   and project() maps an ambient vector to its (un-truncated) coordinates.
struct DiagonalForm {
    u32 n = 0, d = 0;
    std::vector<u32> diag;       // length d; 0 marks an untouched coordinate
    std::vector<u32> coord;      // d x d: y = x * coord are the new coordinates
    std::vector<u32> basis;      // d x d: row c = new basis vector in old coordinates

    Vec new_coords(const u32* x) const;   // x * coord
    Vec basis_row(u32 c) const;
};

DiagonalForm snf_diagonalize(u32 n, u32 d, const std::vector<Vec>& rows);

}  // namespace ringlat
