#pragma once

// Finite fields F_p and F_{p^k}.
//
// Elements of F_{p^k} are stored packed: the coefficient list (c_0, ..., c_{k-1})
// of the residue c_0 + c_1 t + ... + c_{k-1} t^{k-1} mod m(t) is encoded as the
// integer c_0 + c_1 p + ... + c_{k-1} p^{k-1}. The packed value doubles as the
// field's fixed enumeration, and the prime subfield is exactly {0, ..., p-1}.

#include <compare>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace sylvres {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Fq {
    u64 v = 0;
    friend constexpr bool operator==(Fq, Fq) = default;
    friend constexpr auto operator<=>(Fq, Fq) = default;
};

using Rng = std::mt19937_64;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

class FieldCtx {
public:
    /// Prime field F_p. Throws std::invalid_argument if p is not a probable prime.
    static FieldPtr prime(u64 p);
    /// F_p[t]/<m>, m monic of degree k >= 2 given low-to-high, checked irreducible.
    static FieldPtr extension(u64 p, std::vector<u64> modulus);

    u64 characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    u64 cardinality() const { return q_; }
    bool is_prime_field() const { return k_ == 1; }
    /// Monic modulus, low-to-high; empty for prime fields.
    const std::vector<u64>& modulus() const { return modulus_; }

    Fq zero() const { return {0}; }
    Fq one() const { return {1}; }
    Fq from_int(std::int64_t c) const;
    Fq from_uint(u64 c) const { return {c % p_}; }
    /// The i-th element of the fixed enumeration, i < q.
    Fq element_at(u64 i) const;
    bool in_prime_subfield(Fq x) const { return x.v < p_; }

    std::vector<u64> digits(Fq x) const;
    Fq from_digits(std::span<const u64> ds) const;

    bool is_zero(Fq x) const { return x.v == 0; }

    Fq add(Fq a, Fq b) const {
        if (k_ == 1) {
            u64 s = a.v + b.v;
            return {s >= p_ ? s - p_ : s};
        }
        if (p_ == 2) return {a.v ^ b.v};
        return add_ext(a, b);
    }
    Fq sub(Fq a, Fq b) const {
        if (k_ == 1) return {a.v >= b.v ? a.v - b.v : a.v + p_ - b.v};
        if (p_ == 2) return {a.v ^ b.v};
        return sub_ext(a, b);
    }
    Fq neg(Fq a) const {
        if (k_ == 1) return {a.v == 0 ? 0 : p_ - a.v};
        if (p_ == 2) return a;
        return sub_ext(Fq{0}, a);
    }
    Fq mul(Fq a, Fq b) const {
        if (k_ == 1) {
            if (small_) return {(a.v * b.v) % p_};
            return {static_cast<u64>((static_cast<u128>(a.v) * b.v) % p_)};
        }
        return mul_ext(a, b);
    }
    /// Throws std::domain_error on zero.
    Fq inv(Fq a) const;
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
    Fq pow(Fq a, u64 e) const;

    /// True when p < 2^32, so products of two residues fit in 64 bits.
    bool small_characteristic() const { return small_; }

private:
    FieldCtx(u64 p, std::vector<u64> modulus);

    Fq add_ext(Fq a, Fq b) const;
    Fq sub_ext(Fq a, Fq b) const;
    Fq mul_ext(Fq a, Fq b) const;

    u64 p_;
    unsigned k_;
    u64 q_;
    bool small_;
    std::vector<u64> modulus_;
};

/// Miller-Rabin with `rounds` pseudo-random bases (derived from n, so the test is pure).
bool is_probable_prime(u64 n, int rounds = 40);

/// Rabin's irreducibility test for a monic polynomial over F_p given low-to-high.
bool is_irreducible_mod_p(std::span<const u64> monic, u64 p);

/// Smallest k with p^k >= min_cardinality; for k >= 2 the modulus is found by
/// random search among monic degree-k polynomials.
FieldPtr build_extension(u64 p, u64 min_cardinality, Rng& rng);

Fq sample_uniform(const FieldCtx& F, Rng& rng);

/// Same characteristic and modulus.
inline bool same_field(const FieldPtr& F, const FieldPtr& G) {
    return F == G || (F && G && F->characteristic() == G->characteristic() && F->modulus() == G->modulus());
}

/// Independent stream for sub-task `index` of a computation seeded by `seed`.
u64 derive_seed(u64 seed, u64 index);

}  // namespace sylvres
