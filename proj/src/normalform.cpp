#include "sylvres/normalform.hpp"

#include <algorithm>
#include <stdexcept>

#include "sylvres/errors.hpp"

namespace sylvres {

namespace {

int max_degree(const std::vector<UPoly>& v) {
    int l = kDegNegInf;
    for (const auto& p : v) l = std::max(l, p.degree());
    return l;
}

// Entries [off, off+len) of a column vector as the multiplier of the matching
// generator, in (x, y) coordinates.
BiPoly block_multiplier(const SylvMat& S, const std::vector<UPoly>& w, int off, int len) {
    const FieldPtr& F = S.field();
    std::vector<UPoly> by_z(static_cast<std::size_t>(len), UPoly(F));
    for (int k = 0; k < len; ++k) by_z[len - 1 - k] = w[off + k];
    BiPoly tz = BiPoly::from_y_coeffs(F, by_z);
    return S.orientation() == Orientation::wrt_y ? tz : tz.swapped();
}

// Power of x by which the generator g of S was multiplied relative to src.
int x_multiplier(const BiPoly& g, const BiPoly& src) { return g.deg_x() - src.deg_x(); }

Reduction ydeg_reduce(const IdealBasis& I, const BiPoly& f, LiftStrategy strategy) {
    const FieldPtr& F = I.field();
    if (f.is_zero() || f.deg_y() < I.e()) return {f, BiPoly(F), BiPoly(F)};
    SylvMat T = build_Tx(I, f.deg_x());
    MatrixDivider D(T, strategy);
    auto div = D.divrem(vec_x(f, T.n()), f.deg_y());
    Reduction r;
    r.result = unvec_x(F, div.rem);
    r.u = block_multiplier(T, div.w, 0, T.n2()).shifted(x_multiplier(T.g1(), I.a()), 0);
    r.t = block_multiplier(T, div.w, T.n2(), T.n1()).shifted(x_multiplier(T.g2(), I.b()), 0);
    return r;
}

// Transpose of v -> rem(v) for division of degree-<=l vectors by S.
std::vector<UPoly> divrem_transposed(const SylvMat& S, const std::vector<UPoly>& lambda, int l) {
    const FieldPtr& F = S.field();
    const int n = S.n();
    const int cmin = S.min_column_degree();
    const int q = l - cmin;
    if (q < 0) return lambda;
    std::vector<UPoly> rl;
    rl.reserve(static_cast<std::size_t>(n));
    for (const auto& p : lambda) rl.push_back(rev(p, static_cast<std::size_t>(l)));
    auto P = matvec_transposed(S, rl);
    std::vector<UPoly> rhs;
    rhs.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const int cj = S.column_degree(j);
        const int top = std::min(q, l - cj);
        std::vector<Fq> xi(static_cast<std::size_t>(q) + 1, Fq{0});
        for (int k = 0; k <= top; ++k) xi[q - k] = P[j].coeff(static_cast<std::size_t>(cj + k));
        rhs.emplace_back(F, std::move(xi));
    }
    TransposedTruncSolver solver(column_reversed(S));
    auto Y = solver.solve(rhs, q + 1);
    std::vector<UPoly> mu;
    mu.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) mu.push_back(lambda[i] - Y[i].shifted_up(static_cast<std::size_t>(cmin)));
    return mu;
}

}  // namespace

MatrixDivider::MatrixDivider(SylvMat S, LiftStrategy strategy)
    : S_(std::move(S)), rev_solver_((is_column_reduced(S_) ? column_reversed(S_)
                                                           : throw NotColumnReduced("matrix is not column reduced")),
                                    strategy) {}

MatrixDivision MatrixDivider::divrem(const std::vector<UPoly>& v, int l) const {
    const FieldPtr& F = S_.field();
    const int n = S_.n();
    if (static_cast<int>(v.size()) != n) throw DimensionMismatch("vector length does not match the matrix dimension");
    if (l < 0) l = max_degree(v);
    std::vector<UPoly> w(static_cast<std::size_t>(n), UPoly(F));
    const int q = l - S_.min_column_degree();
    if (l < 0 || q < 0) return {w, v};
    std::vector<UPoly> G;
    G.reserve(static_cast<std::size_t>(n));
    for (const auto& p : v) {
        std::vector<Fq> g(static_cast<std::size_t>(q) + 1);
        for (int k = 0; k <= q; ++k) g[k] = p.coeff(static_cast<std::size_t>(l - k));
        G.emplace_back(F, std::move(g));
    }
    auto X = rev_solver_.solve(G, q + 1);
    for (int j = 0; j < n; ++j) {
        const int ej = l - S_.column_degree(j);
        if (ej >= 0) w[j] = rev(X[j].truncated(static_cast<std::size_t>(ej) + 1), static_cast<std::size_t>(ej));
    }
    auto Sw = matvec(S_, w);
    std::vector<UPoly> rem(v);
    for (int i = 0; i < n; ++i) rem[i] -= Sw[i];
    return {std::move(w), std::move(rem)};
}

MatrixDivision matrix_divrem(const SylvMat& S, const std::vector<UPoly>& v) { return MatrixDivider(S).divrem(v); }

LinearForm::LinearForm(const IdealBasis& I, std::vector<Fq> coeffs)
    : F_(I.field()), d_(I.d()), ny_(I.ny()), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<std::size_t>(d_) * ny_)
        throw DimensionMismatch("linear form length must be d * n_y");
}

LinearForm LinearForm::random(const IdealBasis& I, Rng& rng) {
    std::vector<Fq> c(static_cast<std::size_t>(I.d()) * I.ny());
    for (auto& x : c) x = sample_uniform(*I.field(), rng);
    return LinearForm(I, std::move(c));
}

LinearForm LinearForm::coordinate(const IdealBasis& I, int i, int j) {
    LinearForm l(I, std::vector<Fq>(static_cast<std::size_t>(I.d()) * I.ny(), Fq{0}));
    if (i < 0 || j < 0 || i >= l.d_ || j >= l.ny_) throw std::invalid_argument("coordinate outside the monomial box");
    l.c_[l.index(i, j)] = I.field()->one();
    return l;
}

Fq LinearForm::operator()(const BiPoly& f) const {
    if (f.is_zero()) return Fq{0};
    if (f.deg_x() >= d_ || f.deg_y() >= ny_) throw std::invalid_argument("linear form applied outside its support");
    Fq s{0};
    for (int j = 0; j <= f.deg_y(); ++j)
        for (int i = 0; i <= f.deg_x(); ++i) s = F_->add(s, F_->mul(c_[index(i, j)], f.coeff(i, j)));
    return s;
}

QuotientAlgebra::QuotientAlgebra(IdealBasis I, LiftStrategy strategy)
    : I_(std::move(I)), strategy_(strategy), sy_(build_Sy(I_), strategy) {
    if (!is_column_reduced(build_Sx(I_))) throw NotColumnReduced("S_x is not column reduced");
}

Reduction QuotientAlgebra::reduce_ydeg_witness(const BiPoly& f) const { return ydeg_reduce(I_, f, strategy_); }

Reduction QuotientAlgebra::reduce_witness(const BiPoly& f) const {
    const FieldPtr& F = field();
    if (f.is_zero()) return {f, BiPoly(F), BiPoly(F)};
    Reduction r = f.deg_y() >= I_.ny() ? ydeg_reduce(I_, f, strategy_) : Reduction{f, BiPoly(F), BiPoly(F)};
    const SylvMat& S = sy_.matrix();
    auto div = sy_.divrem(vec_y(r.result, I_.ny()));
    r.result = unvec_y(F, div.rem);
    r.u += block_multiplier(S, div.w, 0, S.n2());
    r.t += block_multiplier(S, div.w, S.n2(), S.n1());
    return r;
}

BiPoly QuotientAlgebra::reduce(const BiPoly& f) const {
    const FieldPtr& F = field();
    if (f.is_zero()) return f;
    BiPoly g = f.deg_y() >= I_.ny() ? ydeg_reduce(I_, f, strategy_).result : f;
    return unvec_y(F, sy_.divrem(vec_y(g, I_.ny())).rem);
}

BiPoly QuotientAlgebra::power(const BiPoly& g, std::uint64_t k) const {
    BiPoly result = reduce(BiPoly::constant(field(), field()->one()));
    BiPoly base = reduce(g);
    while (k) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return result;
}

std::vector<Fq> QuotientAlgebra::transposed(const LinearForm& ell, int delta, int eta) const {
    if (delta < 0 || eta < 0) throw std::invalid_argument("negative degree bound");
    if (ell.d() != I_.d() || ell.ny() != I_.ny()) throw DimensionMismatch("linear form built for another basis");
    const FieldPtr& F = field();
    const int d = I_.d(), ny = I_.ny();

    // dual of phi restricted to bidegree <= (dx, dy) with dy < n_y
    auto direct = [&](int dx, int dy) {
        std::vector<UPoly> lambda;
        for (int r = 0; r < ny; ++r) {
            std::vector<Fq> c(static_cast<std::size_t>(std::min(d, dx + 1)));
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = ell.coeffs()[static_cast<std::size_t>(r) * d + i];
            lambda.emplace_back(F, std::move(c));
        }
        auto mu = divrem_transposed(sy_.matrix(), lambda, dx);
        std::vector<Fq> out(static_cast<std::size_t>(dx + 1) * (dy + 1));
        for (int j = 0; j <= dy; ++j)
            for (int i = 0; i <= dx; ++i) out[static_cast<std::size_t>(j) * (dx + 1) + i] = mu[ny - 1 - j].coeff(i);
        return out;
    };
    if (eta < ny) return direct(delta, eta);

    SylvMat T = build_Tx(I_, delta);
    const int N = T.n(), e = I_.e();
    auto inner = direct(N - 1, e - 1);
    std::vector<UPoly> lambda;
    for (int r = 0; r < N; ++r) {
        std::vector<Fq> c(static_cast<std::size_t>(e));
        for (int m = 0; m < e; ++m) c[m] = inner[static_cast<std::size_t>(m) * N + (N - 1 - r)];
        lambda.emplace_back(F, std::move(c));
    }
    auto mu = divrem_transposed(T, lambda, eta);
    std::vector<Fq> out(static_cast<std::size_t>(delta + 1) * (eta + 1));
    for (int j = 0; j <= eta; ++j)
        for (int i = 0; i <= delta; ++i) out[static_cast<std::size_t>(j) * (delta + 1) + i] = mu[N - 1 - i].coeff(j);
    return out;
}

BiPoly start_vector(const QuotientAlgebra& A, StartVector s) {
    const FieldPtr& F = A.field();
    if (s == StartVector::one) return A.reduce(BiPoly::constant(F, F->one()));
    return A.power(BiPoly::monomial(F, F->one(), 1, 1), static_cast<std::uint64_t>(A.dimension_bound()));
}

BiPoly reduce_ydeg(const IdealBasis& I, const BiPoly& f) { return ydeg_reduce(I, f, LiftStrategy::divide_and_conquer).result; }

Reduction reduce_ydeg_witness(const IdealBasis& I, const BiPoly& f) {
    return ydeg_reduce(I, f, LiftStrategy::divide_and_conquer);
}

BiPoly normal_form(const IdealBasis& I, const BiPoly& f) { return QuotientAlgebra(I).reduce(f); }

Reduction normal_form_witness(const IdealBasis& I, const BiPoly& f) { return QuotientAlgebra(I).reduce_witness(f); }

BiPoly mul_mod(const IdealBasis& I, const BiPoly& f, const BiPoly& g) { return QuotientAlgebra(I).mul(f, g); }

std::vector<Fq> transposed_normal_form(const IdealBasis& I, const LinearForm& l, int delta, int eta) {
    return QuotientAlgebra(I).transposed(l, delta, eta);
}

}  // namespace sylvres
