#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ringlat/submodule.hpp"
#include "ringlat/zmod.hpp"

namespace ringlat {

struct Caps {
    u64 max_size = 4096;
    u32 max_rank = 12;
};

// A finite commutative unital ring presented as a free rank-d module over
// Z/n with structure constants c_{ij} and a distinguished unit vector.
// Immutable after validation; safe to share read-only across workers.
class RingTable {
public:
    // mul may be a full d x d table or a lower triangle (row i of length
    // i+1); the triangle is symmetrized before the axioms are checked.
    static RingTable validate(u32 n, u32 d,
                              const std::vector<std::vector<Vec>>& mul,
                              Vec unit, std::string name,
                              const Caps& caps = Caps{});

    u32 modulus() const { return n_; }
    u32 rank() const { return d_; }
    u64 size() const { return size_; }
    const std::string& name() const { return name_; }
    const Vec& unit() const { return unit_; }

    const u32* basis_product(u32 i, u32 j) const {
        return mul_.data() + (static_cast<size_t>(i) * d_ + j) * d_;
    }

    void mul_into(const u32* a, const u32* b, u32* out) const;
    Vec mul(const Vec& a, const Vec& b) const;
    Vec add(const Vec& a, const Vec& b) const;
    Vec sub(const Vec& a, const Vec& b) const;
    Vec scale(const Vec& a, u32 k) const;
    Vec pow(const Vec& a, u64 e) const;
    Vec zero() const { return Vec(d_, 0); }

    Vec element_at(u64 idx) const;     // index order == lex order on coords
    u64 index_of(const u32* v) const;

    bool is_zero(const Vec& v) const { return vec_is_zero(v.data(), d_); }
    bool is_unit(const u32* v) const;
    bool is_unit(const Vec& v) const { return is_unit(v.data()); }
    bool is_nilpotent(const Vec& v) const;
    bool is_idempotent(const Vec& v) const;

    bool same_table(const RingTable& o) const;
    u64 uid() const { return uid_; }

private:
    u32 n_ = 0, d_ = 0;
    std::vector<u32> mul_;  // d*d*d flattened structure constants
    Vec unit_;
    std::string name_;
    u64 size_ = 0;
    u64 uid_ = 0;
};

using TablePtr = std::shared_ptr<const RingTable>;

}  // namespace ringlat
