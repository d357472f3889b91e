#pragma once

// Dense univariate polynomials over a FieldCtx.

#include <climits>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <tuple>
#include <vector>

#include "sylvres/field.hpp"

namespace sylvres {

/// Degree of the zero polynomial.
inline constexpr int kDegNegInf = INT_MIN;

namespace tuning {
/// Below this length both operands are multiplied schoolbook.
inline constexpr std::size_t kKaratsubaCutoff = 32;
/// Minimum operand length for the multi-modular NTT path.
inline constexpr std::size_t kNttCutoff = 64;
/// Below this quotient length division is schoolbook.
inline constexpr std::size_t kNewtonDivCutoff = 64;
/// Multipoint evaluation/interpolation switch to the subproduct tree at this size.
inline constexpr std::size_t kSubproductCutoff = 16;
}  // namespace tuning

/// Raw product of two coefficient vectors (length na + nb - 1, not trimmed).
/// Schoolbook, Karatsuba, or a three-prime NTT with CRT when p < 2^31.
std::vector<Fq> mul_coeffs(const FieldCtx& F, std::span<const Fq> a, std::span<const Fq> b);
std::vector<Fq> mul_coeffs_schoolbook(const FieldCtx& F, std::span<const Fq> a, std::span<const Fq> b);

class UPoly {
public:
    UPoly() = default;
    explicit UPoly(FieldPtr F) : F_(std::move(F)) {}
    UPoly(FieldPtr F, std::vector<Fq> coeffs);

    static UPoly constant(FieldPtr F, Fq c);
    static UPoly monomial(FieldPtr F, Fq c, std::size_t k);
    /// x (the variable).
    static UPoly x(FieldPtr F) { Fq one = F->one(); return monomial(std::move(F), one, 1); }
    static UPoly from_ints(FieldPtr F, std::initializer_list<std::int64_t> low_to_high);

    const FieldPtr& field() const { return F_; }
    const FieldCtx& ctx() const { return *F_; }

    int degree() const { return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    Fq coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fq{0}; }
    Fq lead() const { return c_.empty() ? Fq{0} : c_.back(); }
    std::span<const Fq> coeffs() const { return c_; }
    std::vector<Fq> take() && { return std::move(c_); }

    Fq operator()(Fq x) const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator-() const;

    UPoly scaled(Fq s) const;
    UPoly monic() const;
    /// f * x^k
    UPoly shifted_up(std::size_t k) const;
    /// f div x^k
    UPoly shifted_down(std::size_t k) const;
    /// f mod x^k
    UPoly truncated(std::size_t k) const;

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

private:
    void normalize();

    FieldPtr F_;
    std::vector<Fq> c_;
};

/// Throws std::domain_error when g = 0.
std::pair<UPoly, UPoly> divrem(const UPoly& f, const UPoly& g);
UPoly rem(const UPoly& f, const UPoly& g);
/// f / g, throws std::domain_error if the division is not exact.
UPoly exact_div(const UPoly& f, const UPoly& g);

/// 1/h mod x^n, h(0) != 0.
UPoly series_inverse(const UPoly& h, std::size_t n);

/// Division by a fixed divisor with a precomputed reversed inverse.
class Divider {
public:
    /// Supports dividends of degree < deg(g) + max_quotient_len.
    Divider(UPoly g, std::size_t max_quotient_len);
    std::pair<UPoly, UPoly> divrem(const UPoly& f) const;
    UPoly rem(const UPoly& f) const { return divrem(f).second; }
    const UPoly& divisor() const { return g_; }

private:
    UPoly g_;
    UPoly rev_inv_;
    std::size_t max_q_;
};

struct Xgcd {
    UPoly d;  ///< monic gcd (zero only if both inputs are zero)
    UPoly u;
    UPoly v;
};
/// d = u f + v g. Throws std::invalid_argument when both are zero.
Xgcd xgcd(const UPoly& f, const UPoly& g);
UPoly gcd(const UPoly& f, const UPoly& g);
UPoly lcm(const UPoly& f, const UPoly& g);

/// x^k f(1/x); throws std::invalid_argument if k < deg f.
UPoly rev(const UPoly& f, std::size_t k);
/// Reversal with respect to deg f.
UPoly rev(const UPoly& f);

/// f(x + alpha).
UPoly taylor_shift(const UPoly& f, Fq alpha);

/// Strips the largest power of x dividing f; returns (f / x^k, k).
std::pair<UPoly, std::size_t> strip_x_power(const UPoly& f);

std::vector<Fq> multipoint_eval(const UPoly& f, std::span<const Fq> pts);
/// Unique polynomial of degree < #pts through the points; throws
/// std::invalid_argument on repeated points.
UPoly interpolate(const FieldPtr& F, std::span<const Fq> pts, std::span<const Fq> vals);

/// Monic minimal generating polynomial of the given prefix.
UPoly berlekamp_massey(const FieldPtr& F, std::span<const Fq> seq);

}  // namespace sylvres
