#pragma once

// Implicit Sylvester matrices.
//
// A SylvMat is stored as its two generators in (t, z) coordinates, where t is
// the outer variable (the entries of the matrix are polynomials in t) and z is
// the inner variable eliminated by the matrix. With n1 = deg_z g1 and
// n2 = deg_z g2, the n = n1 + n2 columns are z^(n2-1) g1, ..., g1,
// z^(n1-1) g2, ..., g2, and row i holds the coefficient of z^(n-1-i).

#include <vector>

#include "sylvres/bipoly.hpp"
#include "sylvres/linalg.hpp"

namespace sylvres {

enum class Orientation {
    wrt_x,  ///< entries in K[y], eliminates x
    wrt_y,  ///< entries in K[x], eliminates y
};

class SylvMat {
public:
    /// Generators given in the original (x, y) coordinates.
    SylvMat(Orientation o, const BiPoly& g1, const BiPoly& g2);
    /// Generators given directly in (t, z) coordinates.
    static SylvMat from_tz(Orientation o, BiPoly g1_tz, BiPoly g2_tz);

    Orientation orientation() const { return o_; }
    const FieldPtr& field() const { return g1_.field(); }

    /// Generators in (x, y) coordinates.
    BiPoly g1() const;
    BiPoly g2() const;
    /// Generators in (t, z) coordinates.
    const BiPoly& g1_tz() const { return g1_; }
    const BiPoly& g2_tz() const { return g2_; }

    int n() const { return n1_ + n2_; }
    int n1() const { return n1_; }
    int n2() const { return n2_; }
    /// Column degree of the first n2 columns and of the last n1 columns.
    int c1() const { return c1_; }
    int c2() const { return c2_; }
    int column_degree(int j) const { return j < n2_ ? c1_ : c2_; }
    std::vector<int> column_degrees() const;
    int max_column_degree() const { return std::max(n2_ ? c1_ : 0, n1_ ? c2_ : 0); }
    int min_column_degree() const;

private:
    struct TzTag {};
    SylvMat(TzTag, Orientation o, BiPoly g1_tz, BiPoly g2_tz);

    Orientation o_;
    BiPoly g1_;
    BiPoly g2_;
    int n1_, n2_, c1_, c2_;
};

SylvMat build_Sy(const IdealBasis& I);
SylvMat build_Sx(const IdealBasis& I);
/// Sylvester matrix with respect to x of a and x^m b (or x^m a and b) of
/// dimension max(n_x, delta + 1). Throws NotColumnReduced if S_x is not.
SylvMat build_Tx(const IdealBasis& I, int delta);

bool is_column_reduced(const SylvMat& S);
/// Coefficient of t^(column degree) of each column.
ScalarMatrix leading_matrix(const SylvMat& S);
/// Columns reversed in t at their column degrees; its constant matrix is leading_matrix(S).
SylvMat column_reversed(const SylvMat& S);

/// S w. Throws DimensionMismatch.
std::vector<UPoly> matvec(const SylvMat& S, const std::vector<UPoly>& w);
/// S w mod t^prec.
std::vector<UPoly> matvec_trunc(const SylvMat& S, const std::vector<UPoly>& w, int prec);
/// S^T u.
std::vector<UPoly> matvec_transposed(const SylvMat& S, const std::vector<UPoly>& u);
std::vector<UPoly> matvec_transposed_trunc(const SylvMat& S, const std::vector<UPoly>& u, int prec);

PolyMatrix dense_form(const SylvMat& S);

enum class LiftStrategy {
    divide_and_conquer,  ///< lifts the low half, then the high half against the residual
    coefficientwise,     ///< one t-coefficient at a time
};

/// Solves S u = v mod t^l for S with nonsingular S(0). The base solve against
/// S(0) uses a Bezout relation between the two generators at t = 0.
class TruncSolver {
public:
    /// Throws std::domain_error if S(0) is singular.
    explicit TruncSolver(SylvMat S, LiftStrategy strategy = LiftStrategy::divide_and_conquer);

    std::vector<UPoly> solve(const std::vector<UPoly>& v, int l) const;
    /// u with S(0) u = r.
    std::vector<Fq> solve_constant(const std::vector<Fq>& r) const;
    const SylvMat& matrix() const { return S_; }

private:
    SylvMat S_;
    LiftStrategy strategy_;
    UPoly p1_, p2_;
    bool first_full_;  // deg p1 = n1
    UPoly cofactor_;   // tau if first_full_, sigma otherwise
    Divider div_;      // by p1 if first_full_, p2 otherwise
};

/// Solves S^T u = v mod t^l, base solves by a dense inverse of S(0)^T.
class TransposedTruncSolver {
public:
    explicit TransposedTruncSolver(SylvMat S);
    std::vector<UPoly> solve(const std::vector<UPoly>& v, int l) const;
    const SylvMat& matrix() const { return S_; }

private:
    SylvMat S_;
    ScalarMatrix inv_t_;
};

std::vector<UPoly> trunc_inv_apply(const SylvMat& S, const std::vector<UPoly>& v, int l);

}  // namespace sylvres
