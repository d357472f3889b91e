#include "sylvres/oracle.hpp"

#include <stdexcept>
#include <utility>

#include "sylvres/errors.hpp"

namespace sylvres {

namespace {

std::vector<Fq> coordinates(const QuotientAlgebra& A, const BiPoly& f) {
    const int d = A.basis().d(), ny = A.basis().ny();
    std::vector<Fq> v(static_cast<std::size_t>(d) * ny, Fq{0});
    for (const auto& t : f.terms()) v[static_cast<std::size_t>(ny - 1 - t.j) * d + t.i] = t.c;
    return v;
}

}  // namespace

std::vector<UPoly> dense_smith(const PolyMatrix& M0) {
    const std::size_t n = M0.size();
    if (n > static_cast<std::size_t>(kOracleMaxDim)) throw std::invalid_argument("matrix too large for the dense oracle");
    for (const auto& row : M0)
        if (row.size() != n) throw std::invalid_argument("matrix is not square");
    PolyMatrix M = M0;
    std::vector<UPoly> s;
    s.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            std::size_t pi = n, pj = n;
            int best = 0;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (!M[i][j].is_zero() && (pi == n || M[i][j].degree() < best)) {
                        pi = i;
                        pj = j;
                        best = M[i][j].degree();
                    }
            if (pi == n) throw std::domain_error("singular matrix");
            std::swap(M[k], M[pi]);
            for (auto& row : M) std::swap(row[k], row[pj]);

            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (M[i][k].is_zero()) continue;
                UPoly q = divrem(M[i][k], M[k][k]).first;
                for (std::size_t j = k; j < n; ++j) M[i][j] -= q * M[k][j];
                if (!M[i][k].is_zero()) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (M[k][j].is_zero()) continue;
                UPoly q = divrem(M[k][j], M[k][k]).first;
                for (std::size_t i = k; i < n; ++i) M[i][j] -= q * M[i][k];
                if (!M[k][j].is_zero()) clean = false;
            }
            if (!clean) continue;

            for (std::size_t i = k + 1; i < n && clean; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!rem(M[i][j], M[k][k]).is_zero()) {
                        for (std::size_t c = k; c < n; ++c) M[k][c] += M[i][c];
                        clean = false;
                        break;
                    }
            if (clean) break;
        }
        s.push_back(M[k][k].monic());
    }
    return s;
}

UPoly dense_last_invariant(const IdealBasis& I) { return dense_smith(dense_form(build_Sy(I))).back(); }

UPoly dense_resultant(const IdealBasis& I) {
    const FieldPtr& F = I.field();
    const u64 N = 2 * static_cast<u64>(I.d()) * static_cast<u64>(I.e()) + 1;
    FieldPtr E = F;
    if (F->cardinality() < N) {
        if (!F->is_prime_field()) throw FieldTooSmall(N);
        Rng rng(0);
        E = build_extension(F->characteristic(), N, rng);
    }
    const IdealBasis J = same_field(E, F) ? I : I.in_field(E);
    const PolyMatrix D = dense_form(build_Sy(J));
    std::vector<Fq> pts, vals;
    pts.reserve(N);
    vals.reserve(N);
    for (u64 k = 0; k < N; ++k) {
        pts.push_back(E->element_at(k));
        vals.push_back(determinant(*E, evaluate(D, pts.back())));
    }
    UPoly r = interpolate(E, pts, vals);
    if (same_field(E, F)) return r;
    std::vector<Fq> c;
    c.reserve(r.size());
    for (Fq v : r.coeffs()) {
        if (!E->in_prime_subfield(v)) throw std::logic_error("resultant has a coefficient outside the base field");
        c.push_back(v);
    }
    return UPoly(F, std::move(c));
}

ScalarMatrix dense_mult_x_matrix(const QuotientAlgebra& A) {
    const FieldPtr& F = A.field();
    const int d = A.basis().d(), ny = A.basis().ny();
    const std::size_t D = static_cast<std::size_t>(d) * ny;
    ScalarMatrix M(D, std::vector<Fq>(D, Fq{0}));
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < d; ++i) {
            const std::size_t col = static_cast<std::size_t>(ny - 1 - j) * d + i;
            auto img = coordinates(A, A.mul_x(BiPoly::monomial(F, F->one(), i, j)));
            for (std::size_t r = 0; r < D; ++r) M[r][col] = img[r];
        }
    return M;
}

UPoly krylov_minpoly(const FieldPtr& F, const ScalarMatrix& M, const std::vector<Fq>& v) {
    const std::size_t D = v.size();
    std::vector<std::vector<Fq>> rows, combos;
    std::vector<std::size_t> pivots;
    std::vector<Fq> u = v;
    for (std::size_t m = 0; m <= D; ++m) {
        std::vector<Fq> r = u, c(m + 1, Fq{0});
        c[m] = F->one();
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const Fq f = r[pivots[k]];
            if (F->is_zero(f)) continue;
            for (std::size_t i = 0; i < D; ++i) r[i] = F->sub(r[i], F->mul(f, rows[k][i]));
            for (std::size_t i = 0; i < combos[k].size(); ++i) c[i] = F->sub(c[i], F->mul(f, combos[k][i]));
        }
        std::size_t piv = 0;
        while (piv < D && F->is_zero(r[piv])) ++piv;
        if (piv == D) return UPoly(F, std::move(c)).monic();
        const Fq inv = F->inv(r[piv]);
        for (auto& x : r) x = F->mul(x, inv);
        for (auto& x : c) x = F->mul(x, inv);
        rows.push_back(std::move(r));
        combos.push_back(std::move(c));
        pivots.push_back(piv);
        u = apply(*F, M, u);
    }
    throw std::logic_error("Krylov sequence did not terminate");
}

UPoly dense_minpoly_mult_x(const QuotientAlgebra& A, StartVector start) {
    return krylov_minpoly(A.field(), dense_mult_x_matrix(A), coordinates(A, start_vector(A, start)));
}

UPoly dense_minpoly_mult_x(const IdealBasis& I, StartVector start) {
    return dense_minpoly_mult_x(QuotientAlgebra(I), start);
}

}  // namespace sylvres
