#include "ringlat/ring_table.hpp"

#include <atomic>
#include <cstring>

#include "ringlat/errors.hpp"

namespace ringlat {

namespace {
std::atomic<u64> next_uid{1};
}

RingTable RingTable::validate(u32 n, u32 d,
                              const std::vector<std::vector<Vec>>& mul,
                              Vec unit, std::string name, const Caps& caps) {
    if (n < 2 || d < 1) fail(errc::bad_dimensions, "need modulus >= 2 and rank >= 1");
    if (d > caps.max_rank)
        fail(errc::cap_exceeded, "rank " + std::to_string(d) + " exceeds cap",
             {d, caps.max_rank, -1});
    u64 size = 1;
    for (u32 i = 0; i < d; ++i) {
        size *= n;
        if (size > caps.max_size)
            fail(errc::cap_exceeded,
                 "ring size exceeds cap " + std::to_string(caps.max_size),
                 {static_cast<long long>(caps.max_size), -1, -1});
    }
    if (unit.size() != d) fail(errc::bad_dimensions, "unit vector rank mismatch");
    if (mul.size() != d) fail(errc::bad_dimensions, "mul table must have d rows");

    bool lower = true, full = true;
    for (u32 i = 0; i < d; ++i) {
        if (mul[i].size() != i + 1) lower = false;
        if (mul[i].size() != d) full = false;
    }
    if (!lower && !full)
        fail(errc::bad_dimensions, "mul table must be square or lower-triangular");

    RingTable t;
    t.n_ = n;
    t.d_ = d;
    t.size_ = size;
    t.name_ = std::move(name);
    t.mul_.assign(static_cast<size_t>(d) * d * d, 0);
    for (u32 i = 0; i < d; ++i) {
        for (u32 j = 0; j < mul[i].size(); ++j) {
            if (mul[i][j].size() != d)
                fail(errc::bad_dimensions, "structure constant rank mismatch",
                     {i, j, -1});
            for (u32 k = 0; k < d; ++k) {
                u32 v = mul[i][j][k] % n;
                t.mul_[(static_cast<size_t>(i) * d + j) * d + k] = v;
                if (lower) t.mul_[(static_cast<size_t>(j) * d + i) * d + k] = v;
            }
        }
    }
    t.unit_.resize(d);
    for (u32 k = 0; k < d; ++k) t.unit_[k] = unit[k] % n;

    for (u32 i = 0; i < d; ++i)
        for (u32 j = 0; j < i; ++j)
            if (std::memcmp(t.basis_product(i, j), t.basis_product(j, i),
                            d * sizeof(u32)) != 0)
                fail(errc::non_commutative,
                     "c_{" + std::to_string(i) + "," + std::to_string(j) +
                         "} != c_{" + std::to_string(j) + "," + std::to_string(i) + "}",
                     {i, j, -1});

    Vec ei(d), lhs(d), rhs(d);
    for (u32 i = 0; i < d; ++i) {
        for (u32 j = 0; j <= i; ++j) {
            for (u32 k = 0; k <= j; ++k) {
                // (e_i e_j) e_k vs e_i (e_j e_k)
                std::fill(ei.begin(), ei.end(), 0);
                ei[k] = 1;
                t.mul_into(t.basis_product(i, j), ei.data(), lhs.data());
                std::fill(ei.begin(), ei.end(), 0);
                ei[i] = 1;
                t.mul_into(t.basis_product(j, k), ei.data(), rhs.data());
                if (lhs != rhs)
                    fail(errc::non_associative,
                         "(e" + std::to_string(i) + " e" + std::to_string(j) +
                             ") e" + std::to_string(k) + " != e" + std::to_string(i) +
                             " (e" + std::to_string(j) + " e" + std::to_string(k) + ")",
                         {i, j, k});
            }
        }
    }

    for (u32 i = 0; i < d; ++i) {
        std::fill(ei.begin(), ei.end(), 0);
        ei[i] = 1;
        t.mul_into(t.unit_.data(), ei.data(), lhs.data());
        if (lhs != ei)
            fail(errc::bad_unit, "unit * e" + std::to_string(i) + " != e" + std::to_string(i),
                 {i, -1, -1});
    }

    t.uid_ = next_uid.fetch_add(1);
    return t;
}

void RingTable::mul_into(const u32* a, const u32* b, u32* out) const {
    std::memset(out, 0, d_ * sizeof(u32));
    for (u32 i = 0; i < d_; ++i) {
        if (!a[i]) continue;
        for (u32 j = 0; j < d_; ++j) {
            if (!b[j]) continue;
            u32 s = mulmod(a[i], b[j], n_);
            if (s) vec_addmul(out, basis_product(i, j), s, d_, n_);
        }
    }
}

Vec RingTable::mul(const Vec& a, const Vec& b) const {
    Vec out(d_);
    mul_into(a.data(), b.data(), out.data());
    return out;
}

Vec RingTable::add(const Vec& a, const Vec& b) const {
    Vec out(d_);
    for (u32 i = 0; i < d_; ++i) out[i] = addmod(a[i], b[i], n_);
    return out;
}

Vec RingTable::sub(const Vec& a, const Vec& b) const {
    Vec out(d_);
    for (u32 i = 0; i < d_; ++i) out[i] = submod(a[i], b[i], n_);
    return out;
}

Vec RingTable::scale(const Vec& a, u32 k) const {
    Vec out(a);
    vec_scale(out.data(), k % n_, d_, n_);
    return out;
}

Vec RingTable::pow(const Vec& a, u64 e) const {
    Vec base(a), acc(unit_);
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

Vec RingTable::element_at(u64 idx) const {
    Vec v(d_);
    for (u32 i = d_; i-- > 0;) {
        v[i] = static_cast<u32>(idx % n_);
        idx /= n_;
    }
    return v;
}

u64 RingTable::index_of(const u32* v) const {
    u64 idx = 0;
    for (u32 i = 0; i < d_; ++i) idx = idx * n_ + v[i];
    return idx;
}

bool RingTable::is_unit(const u32* v) const {
    // v is a unit iff multiplication by v is surjective.
    std::vector<Vec> image(d_);
    Vec e(d_, 0);
    for (u32 i = 0; i < d_; ++i) {
        std::fill(e.begin(), e.end(), 0);
        e[i] = 1;
        image[i].resize(d_);
        mul_into(v, e.data(), image[i].data());
    }
    Submodule im = Submodule::span(n_, d_, image);
    return im.size() == size_;
}

bool RingTable::is_nilpotent(const Vec& v) const {
    Vec x(v);
    u64 bound = 1;
    while (bound < size_) {
        x = mul(x, x);
        if (is_zero(x)) return true;
        bound *= 2;
    }
    x = mul(x, x);
    return is_zero(x);
}

bool RingTable::is_idempotent(const Vec& v) const { return mul(v, v) == v; }

bool RingTable::same_table(const RingTable& o) const {
    if (this == &o) return true;
    return n_ == o.n_ && d_ == o.d_ && mul_ == o.mul_ && unit_ == o.unit_;
}

}  // namespace ringlat
