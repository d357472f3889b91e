#include "sylvres/kucompose.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sylvres/errors.hpp"

namespace sylvres {

KUParams KUParams::make(int delta, int d_eps) {
    if (delta < 1) throw std::invalid_argument("degree bound must be positive");
    if (d_eps != 0 && d_eps < 2) throw std::invalid_argument("radix must be at least 2");
    KUParams p;
    p.delta = delta;
    if (d_eps == 0) {
        d_eps = static_cast<int>(std::ceil(std::cbrt(static_cast<double>(delta))));
        while (static_cast<long long>(d_eps - 1) * (d_eps - 1) * (d_eps - 1) >= delta) --d_eps;
        while (static_cast<long long>(d_eps) * d_eps * d_eps < delta) ++d_eps;
        d_eps = std::max(d_eps, 2);
    }
    p.d_eps = d_eps;
    p.l = 1;
    for (long long pw = d_eps; pw < delta; pw *= d_eps) ++p.l;
    return p;
}

std::size_t KUParams::grid_size() const {
    std::size_t s = 1;
    for (int i = 0; i < l; ++i) s *= static_cast<std::size_t>(d_eps);
    return s;
}

u64 KUParams::required_cardinality(const IdealBasis& I) const {
    return static_cast<u64>(l) * (d_eps - 1) * static_cast<u64>(std::max(I.d() - 1, I.ny() - 1)) + 1;
}

MvGrid inv_kronecker(const UPoly& f, const KUParams& p) {
    if (f.degree() >= p.delta) throw std::invalid_argument("polynomial degree exceeds the bound");
    MvGrid g{f.field(), p.d_eps, p.l, std::vector<Fq>(p.grid_size(), Fq{0})};
    for (std::size_t k = 0; k < f.size(); ++k) g.c[k] = f.coeff(k);
    return g;
}

std::vector<BiPoly> power_tower(const QuotientAlgebra& A, const KUParams& p) {
    std::vector<BiPoly> chi;
    chi.reserve(static_cast<std::size_t>(p.l));
    chi.push_back(A.reduce(BiPoly::x(A.field())));
    for (int i = 1; i < p.l; ++i) chi.push_back(A.power(chi.back(), static_cast<std::uint64_t>(p.d_eps)));
    return chi;
}

std::vector<Fq> first_elements(const FieldPtr& F, std::size_t n) {
    if (F->cardinality() < n) throw FieldTooSmall(n);
    std::vector<Fq> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = F->element_at(i);
    return pts;
}

std::vector<std::vector<Fq>> grid_eval(const std::vector<BiPoly>& chi, const std::vector<Fq>& K1,
                                       const std::vector<Fq>& K2) {
    std::vector<std::vector<Fq>> out(K1.size() * K2.size(), std::vector<Fq>(chi.size()));
    for (std::size_t i = 0; i < chi.size(); ++i)
        for (std::size_t a = 0; a < K1.size(); ++a) {
            auto vals = multipoint_eval(chi[i].eval_x(K1[a]), K2);
            for (std::size_t b = 0; b < K2.size(); ++b) out[a * K2.size() + b][i] = vals[b];
        }
    return out;
}

BiPoly grid_interp(const FieldPtr& F, const std::vector<Fq>& vals, const std::vector<Fq>& K1,
                   const std::vector<Fq>& K2) {
    if (vals.size() != K1.size() * K2.size()) throw DimensionMismatch("value grid does not match the point sets");
    std::vector<UPoly> rows;
    rows.reserve(K1.size());
    for (std::size_t a = 0; a < K1.size(); ++a)
        rows.push_back(interpolate(F, K2, std::span<const Fq>(vals).subspan(a * K2.size(), K2.size())));
    std::vector<UPoly> by_y;
    by_y.reserve(K2.size());
    std::vector<Fq> col(K1.size());
    for (std::size_t j = 0; j < K2.size(); ++j) {
        for (std::size_t a = 0; a < K1.size(); ++a) col[a] = rows[a].coeff(j);
        by_y.push_back(interpolate(F, K1, col));
    }
    return BiPoly::from_y_coeffs(F, by_y);
}

std::vector<Fq> mv_multipoint_eval(const MvGrid& g, const std::vector<std::vector<Fq>>& points) {
    const FieldCtx& F = *g.F;
    const std::size_t d = static_cast<std::size_t>(g.d_eps);
    std::vector<Fq> out;
    out.reserve(points.size());
    std::vector<Fq> work;
    for (const auto& z : points) {
        if (z.size() != static_cast<std::size_t>(g.l)) throw DimensionMismatch("point has the wrong number of coordinates");
        work = g.c;
        std::size_t len = work.size();
        for (int v = 0; v < g.l; ++v) {
            len /= d;
            for (std::size_t blk = 0; blk < len; ++blk) {
                Fq acc{0};
                for (std::size_t k = d; k-- > 0;) acc = F.add(F.mul(acc, z[v]), work[blk * d + k]);
                work[blk] = acc;
            }
        }
        out.push_back(work[0]);
    }
    return out;
}

BiPoly compose_grid(const QuotientAlgebra& A, const UPoly& f, const KUParams& p) {
    const IdealBasis& I = A.basis();
    const FieldPtr& F = A.field();
    const u64 need = p.required_cardinality(I);
    if (F->cardinality() < need) throw FieldTooSmall(need);
    MvGrid g = inv_kronecker(f, p);
    auto chi = power_tower(A, p);
    auto K1 = first_elements(F, static_cast<std::size_t>(p.delta_prime(I)) + 1);
    auto K2 = first_elements(F, static_cast<std::size_t>(p.eta_prime(I)) + 1);
    auto vals = mv_multipoint_eval(g, grid_eval(chi, K1, K2));
    return grid_interp(F, vals, K1, K2);
}

BiPoly compose_rem(const QuotientAlgebra& A, const UPoly& f, const KUParams& p) {
    return A.reduce(compose_grid(A, f, p));
}

BiPoly compose_rem(const IdealBasis& I, const UPoly& f, const KUParams& p) {
    return compose_rem(QuotientAlgebra(I), f, p);
}

}  // namespace sylvres
