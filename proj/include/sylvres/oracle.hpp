#pragma once

// Dense reference computations: Smith form, resultant, minimal polynomial of x.

#include <vector>

#include "sylvres/linalg.hpp"
#include "sylvres/normalform.hpp"

namespace sylvres {

/// Largest dimension accepted by the dense oracles.
inline constexpr int kOracleMaxDim = 64;

/// Monic invariant factors s_1 | ... | s_n by elementary row and column
/// operations. Throws std::domain_error if M is singular, std::invalid_argument
/// if M is not square or larger than kOracleMaxDim.
std::vector<UPoly> dense_smith(const PolyMatrix& M);

/// Last invariant factor of S_y.
UPoly dense_last_invariant(const IdealBasis& I);

/// det S_y by evaluation at 2de+1 points and interpolation. Works in an
/// extension when the field has too few elements and maps the result back.
UPoly dense_resultant(const IdealBasis& I);

/// Matrix of multiplication by x on the normal forms, in LinearForm coordinates.
ScalarMatrix dense_mult_x_matrix(const QuotientAlgebra& A);

/// Minimal polynomial of the start vector under multiplication by x.
/// Throws NotColumnReduced.
UPoly dense_minpoly_mult_x(const IdealBasis& I, StartVector start = StartVector::one);
UPoly dense_minpoly_mult_x(const QuotientAlgebra& A, StartVector start = StartVector::one);

/// Monic minimal polynomial of v under M by Krylov elimination.
UPoly krylov_minpoly(const FieldPtr& F, const ScalarMatrix& M, const std::vector<Fq>& v);

}  // namespace sylvres
