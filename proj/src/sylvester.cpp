#include "sylvres/sylvester.hpp"

#include <algorithm>
#include <stdexcept>

#include "sylvres/errors.hpp"

namespace sylvres {

namespace {

BiPoly to_tz(Orientation o, const BiPoly& g) { return o == Orientation::wrt_y ? g : g.swapped(); }

// Square Sylvester matrix of two polynomials in z with declared degrees n1, n2.
ScalarMatrix scalar_sylvester(const UPoly& h1, const UPoly& h2, int n1, int n2) {
    const int n = n1 + n2;
    ScalarMatrix M(n, std::vector<Fq>(n, Fq{0}));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n2; ++k) {
            int idx = n1 + k - i;
            if (idx >= 0) M[i][k] = h1.coeff(static_cast<std::size_t>(idx));
        }
        for (int k = 0; k < n1; ++k) {
            int idx = n2 + k - i;
            if (idx >= 0) M[i][n2 + k] = h2.coeff(static_cast<std::size_t>(idx));
        }
    }
    return M;
}

// Vector entries [off, off+len) as a polynomial in (t, z), entry k at z^(len-1-k).
BiPoly block_to_tz(const FieldPtr& F, const std::vector<UPoly>& w, int off, int len) {
    std::vector<UPoly> by_z(static_cast<std::size_t>(len), UPoly(F));
    for (int k = 0; k < len; ++k) by_z[len - 1 - k] = w[off + k];
    return BiPoly::from_y_coeffs(F, by_z);
}

std::vector<UPoly> truncate_all(const std::vector<UPoly>& v, int prec) {
    std::vector<UPoly> r;
    r.reserve(v.size());
    for (const auto& p : v) r.push_back(p.truncated(static_cast<std::size_t>(prec)));
    return r;
}

void check_dim(const SylvMat& S, const std::vector<UPoly>& w) {
    if (static_cast<int>(w.size()) != S.n())
        throw DimensionMismatch("vector length " + std::to_string(w.size()) + " does not match dimension " +
                                std::to_string(S.n()));
}

// Generic t-adic lifting: apply(u, prec) = M u mod t^prec, base(r) solves M(0) u = r.
template <class Apply, class Base>
std::vector<UPoly> lift(const FieldPtr& F, const std::vector<UPoly>& v, int l, LiftStrategy strategy,
                        const Apply& apply_fn, const Base& base) {
    const std::size_t n = v.size();
    auto constant_step = [&](const std::vector<UPoly>& rhs, std::size_t k) {
        std::vector<Fq> r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = rhs[i].coeff(k);
        return base(r);
    };
    if (l <= 0) return std::vector<UPoly>(n, UPoly(F));
    if (strategy == LiftStrategy::coefficientwise) {
        std::vector<std::vector<Fq>> cols(n, std::vector<Fq>(static_cast<std::size_t>(l), Fq{0}));
        std::vector<UPoly> u(n, UPoly(F));
        for (int k = 0; k < l; ++k) {
            auto done = apply_fn(u, k + 1);
            std::vector<UPoly> res(n);
            for (std::size_t i = 0; i < n; ++i) res[i] = v[i] - done[i];
            auto c = constant_step(res, static_cast<std::size_t>(k));
            for (std::size_t i = 0; i < n; ++i) {
                cols[i][k] = c[i];
                u[i] = UPoly(F, cols[i]);
            }
        }
        return u;
    }
    auto rec = [&](auto&& self, const std::vector<UPoly>& rhs, int len) -> std::vector<UPoly> {
        if (len == 1) {
            auto c = constant_step(rhs, 0);
            std::vector<UPoly> u;
            u.reserve(n);
            for (Fq x : c) u.push_back(UPoly::constant(F, x));
            return u;
        }
        const int h = (len + 1) / 2;
        auto lo = self(self, truncate_all(rhs, h), h);
        auto done = apply_fn(lo, len);
        std::vector<UPoly> high(n);
        for (std::size_t i = 0; i < n; ++i) high[i] = (rhs[i] - done[i]).shifted_down(static_cast<std::size_t>(h));
        auto hi = self(self, high, len - h);
        for (std::size_t i = 0; i < n; ++i) lo[i] += hi[i].shifted_up(static_cast<std::size_t>(h));
        return lo;
    };
    return rec(rec, truncate_all(v, l), l);
}

}  // namespace

SylvMat::SylvMat(TzTag, Orientation o, BiPoly g1_tz, BiPoly g2_tz)
    : o_(o), g1_(std::move(g1_tz)), g2_(std::move(g2_tz)) {
    if (g1_.is_zero() || g2_.is_zero()) throw std::invalid_argument("Sylvester matrix of a zero generator");
    n1_ = g1_.deg_y();
    n2_ = g2_.deg_y();
    c1_ = g1_.deg_x();
    c2_ = g2_.deg_x();
    if (n1_ + n2_ == 0) throw std::invalid_argument("Sylvester matrix of dimension zero");
}

SylvMat::SylvMat(Orientation o, const BiPoly& g1, const BiPoly& g2)
    : SylvMat(TzTag{}, o, to_tz(o, g1), to_tz(o, g2)) {}

SylvMat SylvMat::from_tz(Orientation o, BiPoly g1_tz, BiPoly g2_tz) {
    return SylvMat(TzTag{}, o, std::move(g1_tz), std::move(g2_tz));
}

BiPoly SylvMat::g1() const { return to_tz(o_, g1_); }
BiPoly SylvMat::g2() const { return to_tz(o_, g2_); }

std::vector<int> SylvMat::column_degrees() const {
    std::vector<int> c(static_cast<std::size_t>(n()));
    for (int j = 0; j < n(); ++j) c[j] = column_degree(j);
    return c;
}

int SylvMat::min_column_degree() const {
    if (n2_ == 0) return c2_;
    if (n1_ == 0) return c1_;
    return std::min(c1_, c2_);
}

SylvMat build_Sy(const IdealBasis& I) { return SylvMat(Orientation::wrt_y, I.a(), I.b()); }

SylvMat build_Sx(const IdealBasis& I) { return SylvMat(Orientation::wrt_x, I.a(), I.b()); }

SylvMat build_Tx(const IdealBasis& I, int delta) {
    SylvMat Sx = build_Sx(I);
    if (!is_column_reduced(Sx)) throw NotColumnReduced("S_x is not column reduced");
    if (delta < I.nx()) return Sx;
    const int m = delta - I.nx() + 1;
    const UPoly s = I.a().lc_y();
    if (s.coeff(0).v != 0) return SylvMat(Orientation::wrt_x, I.a(), I.b().shifted(m, 0));
    return SylvMat(Orientation::wrt_x, I.a().shifted(m, 0), I.b());
}

ScalarMatrix leading_matrix(const SylvMat& S) {
    return scalar_sylvester(S.g1_tz().coeff_x(S.c1()), S.g2_tz().coeff_x(S.c2()), S.n1(), S.n2());
}

bool is_column_reduced(const SylvMat& S) {
    const UPoly h1 = S.g1_tz().coeff_x(S.c1());
    const UPoly h2 = S.g2_tz().coeff_x(S.c2());
    if (h1.degree() != S.n1() && h2.degree() != S.n2()) return false;
    return gcd(h1, h2).degree() == 0;
}

SylvMat column_reversed(const SylvMat& S) {
    return SylvMat::from_tz(S.orientation(), S.g1_tz().rev_x(S.c1()), S.g2_tz().rev_x(S.c2()));
}

std::vector<UPoly> matvec_trunc(const SylvMat& S, const std::vector<UPoly>& w, int prec) {
    check_dim(S, w);
    const FieldPtr& F = S.field();
    const bool cut = prec >= 0;
    const int big = std::max(S.g1_tz().deg_y(), S.g2_tz().deg_y()) + 1;
    BiPoly G1 = cut ? S.g1_tz().truncated(prec, big) : S.g1_tz();
    BiPoly G2 = cut ? S.g2_tz().truncated(prec, big) : S.g2_tz();
    std::vector<UPoly> ww = cut ? truncate_all(w, prec) : w;
    BiPoly W1 = block_to_tz(F, ww, 0, S.n2());
    BiPoly W2 = block_to_tz(F, ww, S.n2(), S.n1());
    BiPoly P = bimul(W1, G1) + bimul(W2, G2);
    auto r = vec_y(P, S.n());
    return cut ? truncate_all(r, prec) : r;
}

std::vector<UPoly> matvec(const SylvMat& S, const std::vector<UPoly>& w) { return matvec_trunc(S, w, -1); }

std::vector<UPoly> matvec_transposed_trunc(const SylvMat& S, const std::vector<UPoly>& u, int prec) {
    check_dim(S, u);
    const FieldPtr& F = S.field();
    const bool cut = prec >= 0;
    const int big = std::max(S.g1_tz().deg_y(), S.g2_tz().deg_y()) + 1;
    BiPoly G1 = cut ? S.g1_tz().truncated(prec, big) : S.g1_tz();
    BiPoly G2 = cut ? S.g2_tz().truncated(prec, big) : S.g2_tz();
    BiPoly U = BiPoly::from_y_coeffs(F, cut ? truncate_all(u, prec) : u);
    BiPoly P1 = bimul(G1, U), P2 = bimul(G2, U);
    std::vector<UPoly> r;
    r.reserve(static_cast<std::size_t>(S.n()));
    for (int k = 0; k < S.n2(); ++k) r.push_back(P1.coeff_y(S.n1() + k));
    for (int k = 0; k < S.n1(); ++k) r.push_back(P2.coeff_y(S.n2() + k));
    return cut ? truncate_all(r, prec) : r;
}

std::vector<UPoly> matvec_transposed(const SylvMat& S, const std::vector<UPoly>& u) {
    return matvec_transposed_trunc(S, u, -1);
}

PolyMatrix dense_form(const SylvMat& S) {
    const int n = S.n();
    const FieldPtr& F = S.field();
    PolyMatrix M(n, std::vector<UPoly>(n, UPoly(F)));
    for (int j = 0; j < n; ++j) {
        std::vector<UPoly> e(n, UPoly(F));
        e[j] = UPoly::constant(F, F->one());
        auto col = matvec(S, e);
        for (int i = 0; i < n; ++i) M[i][j] = col[i];
    }
    return M;
}

namespace {

struct BaseSetup {
    UPoly p1, p2;
    bool first_full;
    UPoly cofactor;
};

BaseSetup setup_base(const SylvMat& S) {
    BaseSetup b;
    b.p1 = S.g1_tz().coeff_x(0);
    b.p2 = S.g2_tz().coeff_x(0);
    if (b.p1.is_zero() && b.p2.is_zero()) throw std::domain_error("constant coefficient matrix is singular");
    const bool full1 = b.p1.degree() == S.n1(), full2 = b.p2.degree() == S.n2();
    auto g = xgcd(b.p1, b.p2);
    if ((!full1 && !full2) || g.d.degree() != 0) throw std::domain_error("constant coefficient matrix is singular");
    b.first_full = full1;
    b.cofactor = full1 ? g.v : g.u;
    return b;
}

}  // namespace

TruncSolver::TruncSolver(SylvMat S, LiftStrategy strategy)
    : S_(std::move(S)), strategy_(strategy), div_(UPoly::constant(S_.field(), S_.field()->one()), 1) {
    BaseSetup b = setup_base(S_);
    p1_ = std::move(b.p1);
    p2_ = std::move(b.p2);
    first_full_ = b.first_full;
    cofactor_ = std::move(b.cofactor);
    div_ = Divider(first_full_ ? p1_ : p2_, static_cast<std::size_t>(S_.n()) + 1);
}

std::vector<Fq> TruncSolver::solve_constant(const std::vector<Fq>& r) const {
    const int n = S_.n(), n1 = S_.n1(), n2 = S_.n2();
    const FieldPtr& F = S_.field();
    std::vector<Fq> gc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) gc[n - 1 - i] = r[i];
    UPoly g(F, std::move(gc));
    UPoly U1, U2;
    if (first_full_) {
        U2 = div_.rem(g * cofactor_);
        auto [q, rr] = div_.divrem(g - U2 * p2_);
        U1 = std::move(q);
    } else {
        U1 = div_.rem(g * cofactor_);
        auto [q, rr] = div_.divrem(g - U1 * p1_);
        U2 = std::move(q);
    }
    std::vector<Fq> u(static_cast<std::size_t>(n));
    for (int k = 0; k < n2; ++k) u[k] = U1.coeff(static_cast<std::size_t>(n2 - 1 - k));
    for (int k = 0; k < n1; ++k) u[n2 + k] = U2.coeff(static_cast<std::size_t>(n1 - 1 - k));
    return u;
}

std::vector<UPoly> TruncSolver::solve(const std::vector<UPoly>& v, int l) const {
    check_dim(S_, v);
    return lift(
        S_.field(), v, l, strategy_, [this](const std::vector<UPoly>& u, int prec) { return matvec_trunc(S_, u, prec); },
        [this](const std::vector<Fq>& r) { return solve_constant(r); });
}

TransposedTruncSolver::TransposedTruncSolver(SylvMat S) : S_(std::move(S)) {
    ScalarMatrix M0 = scalar_sylvester(S_.g1_tz().coeff_x(0), S_.g2_tz().coeff_x(0), S_.n1(), S_.n2());
    inv_t_ = inverse(*S_.field(), transpose(M0));
}

std::vector<UPoly> TransposedTruncSolver::solve(const std::vector<UPoly>& v, int l) const {
    check_dim(S_, v);
    const FieldCtx& F = *S_.field();
    return lift(
        S_.field(), v, l, LiftStrategy::divide_and_conquer,
        [this](const std::vector<UPoly>& u, int prec) { return matvec_transposed_trunc(S_, u, prec); },
        [this, &F](const std::vector<Fq>& r) { return apply(F, inv_t_, r); });
}

std::vector<UPoly> trunc_inv_apply(const SylvMat& S, const std::vector<UPoly>& v, int l) {
    return TruncSolver(S).solve(v, l);
}

}  // namespace sylvres
