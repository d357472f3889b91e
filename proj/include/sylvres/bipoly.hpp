#pragma once

// Dense bivariate polynomials in K[x,y] and the ideal basis (a, b).

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "sylvres/upoly.hpp"

namespace sylvres {

struct Term {
    Fq c;
    int i;  ///< power of x
    int j;  ///< power of y
};

class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(FieldPtr F) : F_(std::move(F)) {}
    /// Grid of shape (nx) x (ny), entry [i * ny + j] is the coefficient of x^i y^j.
    BiPoly(FieldPtr F, int nx, int ny, std::vector<Fq> grid);

    static BiPoly constant(FieldPtr F, Fq c);
    static BiPoly monomial(FieldPtr F, Fq c, int i, int j);
    static BiPoly x(FieldPtr F) { Fq one = F->one(); return monomial(std::move(F), one, 1, 0); }
    static BiPoly y(FieldPtr F) { Fq one = F->one(); return monomial(std::move(F), one, 0, 1); }
    /// Repeated monomials are summed.
    static BiPoly from_terms(FieldPtr F, const std::vector<Term>& terms);
    /// Integer coefficients reduced into F; each triple is (c, i, j).
    static BiPoly from_ints(FieldPtr F, std::initializer_list<std::array<std::int64_t, 3>> terms);
    /// sum_j p_j(x) y^j
    static BiPoly from_y_coeffs(FieldPtr F, const std::vector<UPoly>& by_y);
    /// sum_i p_i(y) x^i
    static BiPoly from_x_coeffs(FieldPtr F, const std::vector<UPoly>& by_x);
    static BiPoly from_upoly_x(const UPoly& f);

    const FieldPtr& field() const { return F_; }
    const FieldCtx& ctx() const { return *F_; }

    int deg_x() const { return dx_; }
    int deg_y() const { return dy_; }
    bool is_zero() const { return c_.empty(); }
    Fq coeff(int i, int j) const;

    /// Coefficient of y^j as a polynomial in x.
    UPoly coeff_y(int j) const;
    /// Coefficient of x^i as a polynomial in y.
    UPoly coeff_x(int i) const;
    UPoly lc_y() const { return is_zero() ? UPoly(F_) : coeff_y(dy_); }
    UPoly lc_x() const { return is_zero() ? UPoly(F_) : coeff_x(dx_); }

    /// Nonzero terms, sorted by j then i descending.
    std::vector<Term> terms() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator-() const;
    BiPoly scaled(Fq s) const;

    /// f(y, x)
    BiPoly swapped() const;
    /// f * x^i y^j
    BiPoly shifted(int i, int j) const;
    /// Terms with x-degree < kx and y-degree < ky.
    BiPoly truncated(int kx, int ky) const;

    Fq operator()(Fq x0, Fq y0) const;
    UPoly eval_x(Fq x0) const;  ///< f(x0, y)
    UPoly eval_y(Fq y0) const;  ///< f(x, y0)

    /// f(x, y + alpha) and f(x + beta, y).
    BiPoly shift_y(Fq alpha) const;
    BiPoly shift_x(Fq beta) const;
    /// y^k f(x, 1/y) and x^k f(1/x, y); throw std::invalid_argument below the degree.
    BiPoly rev_y(int k) const;
    BiPoly rev_x(int k) const;

    /// The same polynomial over E, which must contain F as its prime field
    /// (or be F). Throws std::invalid_argument otherwise.
    BiPoly in_field(const FieldPtr& E) const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.dx_ == b.dx_ && a.dy_ == b.dy_ && a.c_ == b.c_;
    }

private:
    void normalize();

    FieldPtr F_;
    int dx_ = kDegNegInf;
    int dy_ = kDegNegInf;
    std::vector<Fq> c_;  // (dx_+1) x (dy_+1), x-major
};

/// Product by Kronecker substitution y -> x^D.
BiPoly bimul(const BiPoly& f, const BiPoly& g);

/// Entry k is the coefficient of y^(n-1-k); throws std::invalid_argument if n <= deg_y f.
std::vector<UPoly> vec_y(const BiPoly& f, int n);
BiPoly unvec_y(const FieldPtr& F, const std::vector<UPoly>& v);
/// Entry k is the coefficient of x^(n-1-k), a polynomial in y.
std::vector<UPoly> vec_x(const BiPoly& f, int n);
BiPoly unvec_x(const FieldPtr& F, const std::vector<UPoly>& v);

class IdealBasis {
public:
    /// Throws std::invalid_argument if a or b is zero or the fields differ.
    IdealBasis(BiPoly a, BiPoly b);

    const BiPoly& a() const { return a_; }
    const BiPoly& b() const { return b_; }
    const FieldPtr& field() const { return a_.field(); }

    int da() const { return da_; }
    int db() const { return db_; }
    int ea() const { return ea_; }
    int eb() const { return eb_; }
    int d() const { return std::max(da_, db_); }
    int e() const { return std::max(ea_, eb_); }
    int nx() const { return da_ + db_; }
    int ny() const { return ea_ + eb_; }

    IdealBasis in_field(const FieldPtr& E) const { return IdealBasis(a_.in_field(E), b_.in_field(E)); }

private:
    BiPoly a_;
    BiPoly b_;
    int da_, db_, ea_, eb_;
};

}  // namespace sylvres
