#pragma once

// Division by column-reduced Sylvester matrices and the normal form modulo <a, b>.

#include <vector>

#include "sylvres/sylvester.hpp"

namespace sylvres {

/// v = S w + rem with S^{-1} rem strictly proper.
struct MatrixDivision {
    std::vector<UPoly> w;
    std::vector<UPoly> rem;
};

/// Divides by a fixed column-reduced matrix; the truncated inverse of its
/// column reversal is prepared once.
class MatrixDivider {
public:
    /// Throws NotColumnReduced.
    explicit MatrixDivider(SylvMat S, LiftStrategy strategy = LiftStrategy::divide_and_conquer);

    /// l bounds the degrees of v (computed when negative). Throws DimensionMismatch.
    MatrixDivision divrem(const std::vector<UPoly>& v, int l = -1) const;
    const SylvMat& matrix() const { return S_; }

private:
    SylvMat S_;
    TruncSolver rev_solver_;
};

MatrixDivision matrix_divrem(const SylvMat& S, const std::vector<UPoly>& v);

/// f - result = u a + t b.
struct Reduction {
    BiPoly result;
    BiPoly u;
    BiPoly t;
};

/// Coefficients of the linear form on K[x,y]_{<(d, n_y)}; the monomial x^i y^j
/// sits at index (n_y - 1 - j) d + i.
class LinearForm {
public:
    LinearForm(const IdealBasis& I, std::vector<Fq> coeffs);
    static LinearForm random(const IdealBasis& I, Rng& rng);
    /// The coordinate form of x^i y^j.
    static LinearForm coordinate(const IdealBasis& I, int i, int j);

    std::size_t index(int i, int j) const { return static_cast<std::size_t>(ny_ - 1 - j) * d_ + i; }
    const std::vector<Fq>& coeffs() const { return c_; }
    int d() const { return d_; }
    int ny() const { return ny_; }
    /// Throws std::invalid_argument if f has a term outside x^{<d} y^{<n_y}.
    Fq operator()(const BiPoly& f) const;

private:
    FieldPtr F_;
    int d_, ny_;
    std::vector<Fq> c_;
};

/// The quotient algebra K[x,y]/<a,b> with both Sylvester matrices column reduced.
class QuotientAlgebra {
public:
    /// Throws NotColumnReduced if S_x or S_y is not column reduced.
    explicit QuotientAlgebra(IdealBasis I, LiftStrategy strategy = LiftStrategy::divide_and_conquer);

    const IdealBasis& basis() const { return I_; }
    const FieldPtr& field() const { return I_.field(); }
    int dimension_bound() const { return I_.d() * I_.ny(); }

    BiPoly reduce(const BiPoly& f) const;
    Reduction reduce_witness(const BiPoly& f) const;
    Reduction reduce_ydeg_witness(const BiPoly& f) const;
    BiPoly mul(const BiPoly& f, const BiPoly& g) const { return reduce(bimul(f, g)); }
    BiPoly mul_x(const BiPoly& f) const { return reduce(f.shifted(1, 0)); }
    /// phi(g^k) by repeated squaring.
    BiPoly power(const BiPoly& g, std::uint64_t k) const;

    /// Entry j (delta+1) + i is l(phi(x^i y^j)).
    std::vector<Fq> transposed(const LinearForm& l, int delta, int eta) const;

private:
    IdealBasis I_;
    LiftStrategy strategy_;
    MatrixDivider sy_;
};

/// Start of the Krylov sequence of multiplication by x.
enum class StartVector {
    one,     ///< phi(1)
    affine,  ///< phi(x^N y^N) with N = d n_y, which vanishes on components at x = 0 or y = 0
};

BiPoly start_vector(const QuotientAlgebra& A, StartVector s);

BiPoly reduce_ydeg(const IdealBasis& I, const BiPoly& f);
Reduction reduce_ydeg_witness(const IdealBasis& I, const BiPoly& f);
BiPoly normal_form(const IdealBasis& I, const BiPoly& f);
Reduction normal_form_witness(const IdealBasis& I, const BiPoly& f);
BiPoly mul_mod(const IdealBasis& I, const BiPoly& f, const BiPoly& g);
std::vector<Fq> transposed_normal_form(const IdealBasis& I, const LinearForm& l, int delta, int eta);

}  // namespace sylvres
