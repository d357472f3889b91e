#pragma once

#include <vector>

#include "sylvres/upoly.hpp"

namespace sylvres::testing {

inline UPoly random_upoly(const FieldPtr& F, int deg, Rng& rng) {
    if (deg < 0) return UPoly(F);
    std::vector<Fq> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = sample_uniform(*F, rng);
    while (c.back().v == 0) c.back() = sample_uniform(*F, rng);
    return UPoly(F, std::move(c));
}

inline UPoly random_monic(const FieldPtr& F, int deg, Rng& rng) {
    UPoly f = random_upoly(F, deg, rng);
    return f.monic();
}

}  // namespace sylvres::testing

#include "sylvres/bipoly.hpp"

namespace sylvres::testing {

inline BiPoly random_bipoly(const FieldPtr& F, int dx, int dy, Rng& rng) {
    if (dx < 0 || dy < 0) return BiPoly(F);
    std::vector<Fq> g(static_cast<std::size_t>(dx + 1) * (dy + 1));
    for (auto& c : g) c = sample_uniform(*F, rng);
    return BiPoly(F, dx + 1, dy + 1, std::move(g));
}

/// Random polynomial with exact bidegree (dx, dy): the x^dx and y^dy rows are forced nonzero.
inline BiPoly random_bipoly_exact(const FieldPtr& F, int dx, int dy, Rng& rng) {
    for (;;) {
        BiPoly f = random_bipoly(F, dx, dy, rng);
        if (f.deg_x() == dx && f.deg_y() == dy) return f;
    }
}

}  // namespace sylvres::testing

#include "sylvres/sylvester.hpp"

namespace sylvres::testing {

inline UPoly up(const FieldPtr& F, std::initializer_list<std::int64_t> c) { return UPoly::from_ints(F, c); }

/// Dense polynomial matrix times vector.
inline std::vector<UPoly> dense_matvec(const PolyMatrix& M, const std::vector<UPoly>& w) {
    std::vector<UPoly> r;
    for (const auto& row : M) {
        UPoly s(w.at(0).field());
        for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * w[j];
        r.push_back(s);
    }
    return r;
}

/// Leading column coefficient matrix computed from the dense form.
inline ScalarMatrix dense_leading_matrix(const PolyMatrix& M) {
    const std::size_t n = M.size();
    ScalarMatrix L(n, std::vector<Fq>(n, Fq{0}));
    for (std::size_t j = 0; j < n; ++j) {
        int c = kDegNegInf;
        for (std::size_t i = 0; i < n; ++i) c = std::max(c, M[i][j].degree());
        if (c < 0) continue;
        for (std::size_t i = 0; i < n; ++i) L[i][j] = M[i][j].coeff(static_cast<std::size_t>(c));
    }
    return L;
}

inline bool dense_column_reduced(const FieldCtx& F, const PolyMatrix& M) {
    return rank(F, dense_leading_matrix(M)) == M.size();
}

inline std::vector<UPoly> random_vector(const FieldPtr& F, int n, int deg, Rng& rng) {
    std::vector<UPoly> v;
    for (int i = 0; i < n; ++i) v.push_back(random_upoly(F, deg, rng));
    return v;
}

/// Random basis with both Sylvester matrices column reduced.
inline IdealBasis random_reduced_basis(const FieldPtr& F, int da, int ea, int db, int eb, Rng& rng) {
    for (;;) {
        IdealBasis I(random_bipoly_exact(F, da, ea, rng), random_bipoly_exact(F, db, eb, rng));
        if (I.nx() == 0 || I.ny() == 0) continue;
        if (is_column_reduced(build_Sx(I)) && is_column_reduced(build_Sy(I))) return I;
    }
}

}  // namespace sylvres::testing
