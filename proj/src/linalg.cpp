#include "sylvres/linalg.hpp"

#include <stdexcept>

namespace sylvres {

namespace {

// Row echelon form in place; returns (rank, determinant of the leading square block).
std::pair<std::size_t, Fq> eliminate(const FieldCtx& F, ScalarMatrix& M) {
    const std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    std::size_t r = 0;
    Fq det = F.one();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && M[piv][c].v == 0) ++piv;
        if (piv == rows) {
            det = F.zero();
            continue;
        }
        if (piv != r) {
            std::swap(M[piv], M[r]);
            det = F.neg(det);
        }
        det = F.mul(det, M[r][c]);
        Fq inv = F.inv(M[r][c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (M[i][c].v == 0) continue;
            Fq f = F.mul(M[i][c], inv);
            for (std::size_t j = c; j < cols; ++j) M[i][j] = F.sub(M[i][j], F.mul(f, M[r][j]));
        }
        ++r;
    }
    if (r < rows) det = F.zero();
    return {r, det};
}

}  // namespace

Fq determinant(const FieldCtx& F, ScalarMatrix M) {
    if (M.empty()) return F.one();
    if (M[0].size() != M.size()) throw std::invalid_argument("determinant of a non-square matrix");
    return eliminate(F, M).second;
}

std::size_t rank(const FieldCtx& F, ScalarMatrix M) { return eliminate(F, M).first; }

ScalarMatrix inverse(const FieldCtx& F, ScalarMatrix M) {
    const std::size_t n = M.size();
    ScalarMatrix A(n, std::vector<Fq>(2 * n, Fq{0}));
    for (std::size_t i = 0; i < n; ++i) {
        if (M[i].size() != n) throw std::invalid_argument("inverse of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j) A[i][j] = M[i][j];
        A[i][n + i] = F.one();
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && A[piv][c].v == 0) ++piv;
        if (piv == n) throw std::domain_error("matrix is singular");
        std::swap(A[piv], A[c]);
        Fq inv = F.inv(A[c][c]);
        for (auto& x : A[c]) x = F.mul(x, inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || A[i][c].v == 0) continue;
            Fq f = A[i][c];
            for (std::size_t j = c; j < 2 * n; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[c][j]));
        }
    }
    ScalarMatrix R(n, std::vector<Fq>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) R[i][j] = A[i][n + j];
    return R;
}

std::vector<Fq> apply(const FieldCtx& F, const ScalarMatrix& M, const std::vector<Fq>& v) {
    std::vector<Fq> r(M.size(), Fq{0});
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] = F.add(r[i], F.mul(M[i][j], v[j]));
    return r;
}

ScalarMatrix transpose(const ScalarMatrix& M) {
    if (M.empty()) return M;
    ScalarMatrix T(M[0].size(), std::vector<Fq>(M.size()));
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M[i].size(); ++j) T[j][i] = M[i][j];
    return T;
}

ScalarMatrix evaluate(const PolyMatrix& M, Fq x0) {
    ScalarMatrix R(M.size());
    for (std::size_t i = 0; i < M.size(); ++i) {
        R[i].resize(M[i].size());
        for (std::size_t j = 0; j < M[i].size(); ++j) R[i][j] = M[i][j].is_zero() ? Fq{0} : M[i][j](x0);
    }
    return R;
}

}  // namespace sylvres
