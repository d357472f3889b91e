#pragma once

// Reduction of a univariate f modulo <a, b> through inverse Kronecker
// substitution and a multivariate evaluation on a grid.

#include <vector>

#include "sylvres/normalform.hpp"

namespace sylvres {

struct KUParams {
    int d_eps = 2;  ///< radix
    int delta = 1;  ///< strict bound on deg f
    int l = 1;      ///< number of variables, smallest with d_eps^l >= delta

    /// d_eps = 0 selects ceil(delta^(1/3)), at least 2. Throws std::invalid_argument
    /// on delta < 1 or an explicit d_eps < 2.
    static KUParams make(int delta, int d_eps = 0);
    /// d_eps^l.
    std::size_t grid_size() const;
    /// l (d_eps - 1)(d - 1) and l (d_eps - 1)(n_y - 1).
    int delta_prime(const IdealBasis& I) const { return l * (d_eps - 1) * (I.d() - 1); }
    int eta_prime(const IdealBasis& I) const { return l * (d_eps - 1) * (I.ny() - 1); }
    /// Smallest field cardinality accepted for I.
    u64 required_cardinality(const IdealBasis& I) const;
};

/// Coefficients of an l-variate polynomial of degree < d_eps in each variable;
/// the monomial z_0^k_0 ... z_{l-1}^k_{l-1} sits at k_0 + k_1 d_eps + ...
struct MvGrid {
    FieldPtr F;
    int d_eps = 2;
    int l = 1;
    std::vector<Fq> c;
};

/// Throws std::invalid_argument if deg f >= delta.
MvGrid inv_kronecker(const UPoly& f, const KUParams& p);

/// chi_0 = phi(x), chi_{i+1} = phi(chi_i^d_eps).
std::vector<BiPoly> power_tower(const QuotientAlgebra& A, const KUParams& p);

/// The first n elements of the field enumeration. Throws FieldTooSmall.
std::vector<Fq> first_elements(const FieldPtr& F, std::size_t n);

/// Entry a |K2| + b is (chi_0, ..., chi_{l-1}) at (K1[a], K2[b]).
std::vector<std::vector<Fq>> grid_eval(const std::vector<BiPoly>& chi, const std::vector<Fq>& K1,
                                       const std::vector<Fq>& K2);
/// Polynomial of bidegree < (|K1|, |K2|) taking value vals[a |K2| + b] at (K1[a], K2[b]).
BiPoly grid_interp(const FieldPtr& F, const std::vector<Fq>& vals, const std::vector<Fq>& K1,
                   const std::vector<Fq>& K2);

/// Value at each point by nested Horner. Throws DimensionMismatch.
std::vector<Fq> mv_multipoint_eval(const MvGrid& g, const std::vector<std::vector<Fq>>& points);

/// f(chi_0, ..., chi_{l-1}) after inverse Kronecker substitution, before the
/// final reduction. Throws FieldTooSmall.
BiPoly compose_grid(const QuotientAlgebra& A, const UPoly& f, const KUParams& p);
/// phi(f). Throws FieldTooSmall.
BiPoly compose_rem(const QuotientAlgebra& A, const UPoly& f, const KUParams& p);
BiPoly compose_rem(const IdealBasis& I, const UPoly& f, const KUParams& p);

}  // namespace sylvres
