#include "sylvres/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sylvres {

BiPoly::BiPoly(FieldPtr F, int nx, int ny, std::vector<Fq> grid) : F_(std::move(F)) {
    if (nx < 0 || ny < 0 || grid.size() != static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny))
        throw std::invalid_argument("BiPoly: grid shape mismatch");
    dx_ = nx - 1;
    dy_ = ny - 1;
    c_ = std::move(grid);
    normalize();
}

void BiPoly::normalize() {
    if (c_.empty()) {
        dx_ = dy_ = kDegNegInf;
        return;
    }
    const int ny = dy_ + 1;
    int tx = -1, ty = -1;
    for (int i = 0; i <= dx_; ++i)
        for (int j = 0; j < ny; ++j)
            if (c_[static_cast<std::size_t>(i) * ny + j].v != 0) {
                tx = std::max(tx, i);
                ty = std::max(ty, j);
            }
    if (tx < 0) {
        c_.clear();
        dx_ = dy_ = kDegNegInf;
        return;
    }
    if (tx == dx_ && ty == dy_) return;
    std::vector<Fq> g(static_cast<std::size_t>(tx + 1) * (ty + 1));
    for (int i = 0; i <= tx; ++i)
        for (int j = 0; j <= ty; ++j) g[static_cast<std::size_t>(i) * (ty + 1) + j] = c_[static_cast<std::size_t>(i) * ny + j];
    c_ = std::move(g);
    dx_ = tx;
    dy_ = ty;
}

BiPoly BiPoly::constant(FieldPtr F, Fq c) { return BiPoly(std::move(F), 1, 1, {c}); }

BiPoly BiPoly::monomial(FieldPtr F, Fq c, int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("BiPoly: negative exponent");
    std::vector<Fq> g(static_cast<std::size_t>(i + 1) * (j + 1), Fq{0});
    g.back() = c;
    return BiPoly(std::move(F), i + 1, j + 1, std::move(g));
}

BiPoly BiPoly::from_terms(FieldPtr F, const std::vector<Term>& terms) {
    int mx = -1, my = -1;
    for (const auto& t : terms) {
        if (t.i < 0 || t.j < 0) throw std::invalid_argument("BiPoly: negative exponent");
        mx = std::max(mx, t.i);
        my = std::max(my, t.j);
    }
    if (mx < 0) return BiPoly(std::move(F));
    std::vector<Fq> g(static_cast<std::size_t>(mx + 1) * (my + 1), Fq{0});
    for (const auto& t : terms) {
        auto& slot = g[static_cast<std::size_t>(t.i) * (my + 1) + t.j];
        slot = F->add(slot, t.c);
    }
    return BiPoly(std::move(F), mx + 1, my + 1, std::move(g));
}

BiPoly BiPoly::from_ints(FieldPtr F, std::initializer_list<std::array<std::int64_t, 3>> terms) {
    std::vector<Term> ts;
    for (const auto& t : terms) ts.push_back({F->from_int(t[0]), static_cast<int>(t[1]), static_cast<int>(t[2])});
    return from_terms(std::move(F), ts);
}

BiPoly BiPoly::from_y_coeffs(FieldPtr F, const std::vector<UPoly>& by_y) {
    int mx = -1;
    for (const auto& p : by_y) mx = std::max(mx, p.degree());
    if (mx < 0 || by_y.empty()) return BiPoly(std::move(F));
    const int ny = static_cast<int>(by_y.size());
    std::vector<Fq> g(static_cast<std::size_t>(mx + 1) * ny, Fq{0});
    for (int j = 0; j < ny; ++j) {
        auto c = by_y[j].coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) g[i * ny + j] = c[i];
    }
    return BiPoly(std::move(F), mx + 1, ny, std::move(g));
}

BiPoly BiPoly::from_x_coeffs(FieldPtr F, const std::vector<UPoly>& by_x) {
    return from_y_coeffs(std::move(F), by_x).swapped();
}

BiPoly BiPoly::from_upoly_x(const UPoly& f) {
    if (f.is_zero()) return BiPoly(f.field());
    auto c = f.coeffs();
    return BiPoly(f.field(), static_cast<int>(c.size()), 1, std::vector<Fq>(c.begin(), c.end()));
}

Fq BiPoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i > dx_ || j > dy_) return Fq{0};
    return c_[static_cast<std::size_t>(i) * (dy_ + 1) + j];
}

UPoly BiPoly::coeff_y(int j) const {
    if (j < 0 || j > dy_) return UPoly(F_);
    std::vector<Fq> v(static_cast<std::size_t>(dx_) + 1);
    for (int i = 0; i <= dx_; ++i) v[i] = c_[static_cast<std::size_t>(i) * (dy_ + 1) + j];
    return UPoly(F_, std::move(v));
}

UPoly BiPoly::coeff_x(int i) const {
    if (i < 0 || i > dx_) return UPoly(F_);
    auto first = c_.begin() + static_cast<std::ptrdiff_t>(i) * (dy_ + 1);
    return UPoly(F_, std::vector<Fq>(first, first + dy_ + 1));
}

std::vector<Term> BiPoly::terms() const {
    std::vector<Term> out;
    for (int j = dy_; j >= 0; --j)
        for (int i = dx_; i >= 0; --i) {
            Fq c = coeff(i, j);
            if (c.v != 0) out.push_back({c, i, j});
        }
    return out;
}

namespace {

template <class Op>
BiPoly combine(const BiPoly& a, const BiPoly& b, Op op) {
    const FieldPtr& F = a.field() ? a.field() : b.field();
    const int nx = std::max(a.deg_x(), b.deg_x()) + 1;
    const int ny = std::max(a.deg_y(), b.deg_y()) + 1;
    if (nx <= 0) return BiPoly(F);
    std::vector<Fq> g(static_cast<std::size_t>(nx) * ny);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) g[static_cast<std::size_t>(i) * ny + j] = op(a.coeff(i, j), b.coeff(i, j));
    return BiPoly(F, nx, ny, std::move(g));
}

}  // namespace

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    const FieldCtx& F = F_ ? *F_ : *o.F_;
    return *this = combine(*this, o, [&F](Fq u, Fq v) { return F.add(u, v); });
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    const FieldCtx& F = F_ ? *F_ : *o.F_;
    return *this = combine(*this, o, [&F](Fq u, Fq v) { return F.sub(u, v); });
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) { return bimul(a, b); }

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (Fq& c : r.c_) c = F_->neg(c);
    return r;
}

BiPoly BiPoly::scaled(Fq s) const {
    if (s.v == 0) return BiPoly(F_);
    BiPoly r = *this;
    for (Fq& c : r.c_) c = F_->mul(c, s);
    return r;
}

BiPoly BiPoly::swapped() const {
    if (is_zero()) return *this;
    const int nx = dx_ + 1, ny = dy_ + 1;
    std::vector<Fq> g(c_.size());
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) g[static_cast<std::size_t>(j) * nx + i] = c_[static_cast<std::size_t>(i) * ny + j];
    return BiPoly(F_, ny, nx, std::move(g));
}

BiPoly BiPoly::shifted(int di, int dj) const {
    if (is_zero()) return *this;
    if (di < 0 || dj < 0) throw std::invalid_argument("BiPoly: negative shift");
    const int nx = dx_ + 1 + di, ny = dy_ + 1 + dj;
    std::vector<Fq> g(static_cast<std::size_t>(nx) * ny, Fq{0});
    for (int i = 0; i <= dx_; ++i)
        for (int j = 0; j <= dy_; ++j) g[static_cast<std::size_t>(i + di) * ny + j + dj] = coeff(i, j);
    return BiPoly(F_, nx, ny, std::move(g));
}

BiPoly BiPoly::truncated(int kx, int ky) const {
    if (is_zero() || kx <= 0 || ky <= 0) return BiPoly(F_);
    const int nx = std::min(kx, dx_ + 1), ny = std::min(ky, dy_ + 1);
    std::vector<Fq> g(static_cast<std::size_t>(nx) * ny);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) g[static_cast<std::size_t>(i) * ny + j] = coeff(i, j);
    return BiPoly(F_, nx, ny, std::move(g));
}

Fq BiPoly::operator()(Fq x0, Fq y0) const {
    if (is_zero()) return Fq{0};
    return eval_x(x0)(y0);
}

UPoly BiPoly::eval_x(Fq x0) const {
    if (is_zero()) return UPoly(F_);
    std::vector<Fq> r(static_cast<std::size_t>(dy_) + 1, Fq{0});
    for (int i = dx_; i >= 0; --i)
        for (int j = 0; j <= dy_; ++j) r[j] = F_->add(F_->mul(r[j], x0), coeff(i, j));
    return UPoly(F_, std::move(r));
}

UPoly BiPoly::eval_y(Fq y0) const { return swapped().eval_x(y0); }

BiPoly BiPoly::shift_y(Fq alpha) const {
    if (is_zero() || alpha.v == 0) return *this;
    std::vector<UPoly> rows;
    for (int i = 0; i <= dx_; ++i) rows.push_back(taylor_shift(coeff_x(i), alpha));
    return from_x_coeffs(F_, rows);
}

BiPoly BiPoly::shift_x(Fq beta) const { return swapped().shift_y(beta).swapped(); }

BiPoly BiPoly::rev_y(int k) const {
    if (is_zero()) return *this;
    if (k < dy_) throw std::invalid_argument("BiPoly: reversal order below the y-degree");
    std::vector<Fq> g(static_cast<std::size_t>(dx_ + 1) * (k + 1), Fq{0});
    for (int i = 0; i <= dx_; ++i)
        for (int j = 0; j <= dy_; ++j) g[static_cast<std::size_t>(i) * (k + 1) + (k - j)] = coeff(i, j);
    return BiPoly(F_, dx_ + 1, k + 1, std::move(g));
}

BiPoly BiPoly::rev_x(int k) const {
    if (is_zero()) return *this;
    if (k < dx_) throw std::invalid_argument("BiPoly: reversal order below the x-degree");
    return swapped().rev_y(k).swapped();
}

BiPoly BiPoly::in_field(const FieldPtr& E) const {
    if (same_field(E, F_)) return *this;
    if (!F_ || !F_->is_prime_field() || E->characteristic() != F_->characteristic())
        throw std::invalid_argument("BiPoly: target field does not extend the source prime field");
    BiPoly r = *this;
    r.F_ = E;
    return r;
}

BiPoly bimul(const BiPoly& f, const BiPoly& g) {
    const FieldPtr& F = f.field() ? f.field() : g.field();
    if (f.is_zero() || g.is_zero()) return BiPoly(F);
    const int D = f.deg_x() + g.deg_x() + 1;
    auto pack = [D](const BiPoly& h) {
        std::vector<Fq> v(static_cast<std::size_t>(h.deg_y()) * D + h.deg_x() + 1, Fq{0});
        for (int i = 0; i <= h.deg_x(); ++i)
            for (int j = 0; j <= h.deg_y(); ++j) v[static_cast<std::size_t>(j) * D + i] = h.coeff(i, j);
        return v;
    };
    auto pf = pack(f), pg = pack(g);
    auto prod = mul_coeffs(*F, pf, pg);
    const int ny = f.deg_y() + g.deg_y() + 1;
    std::vector<Fq> grid(static_cast<std::size_t>(D) * ny, Fq{0});
    for (std::size_t k = 0; k < prod.size(); ++k) {
        std::size_t i = k % D, j = k / D;
        grid[i * ny + j] = prod[k];
    }
    return BiPoly(F, D, ny, std::move(grid));
}

std::vector<UPoly> vec_y(const BiPoly& f, int n) {
    if (n < 0 || (!f.is_zero() && n <= f.deg_y())) throw std::invalid_argument("vec_y: length too small");
    std::vector<UPoly> v;
    v.reserve(n);
    for (int k = 0; k < n; ++k) v.push_back(f.coeff_y(n - 1 - k));
    for (auto& p : v)
        if (!p.field()) p = UPoly(f.field());
    return v;
}

BiPoly unvec_y(const FieldPtr& F, const std::vector<UPoly>& v) {
    std::vector<UPoly> by_y(v.rbegin(), v.rend());
    return BiPoly::from_y_coeffs(F, by_y);
}

std::vector<UPoly> vec_x(const BiPoly& f, int n) {
    if (n < 0 || (!f.is_zero() && n <= f.deg_x())) throw std::invalid_argument("vec_x: length too small");
    return vec_y(f.swapped(), n);
}

BiPoly unvec_x(const FieldPtr& F, const std::vector<UPoly>& v) { return unvec_y(F, v).swapped(); }

IdealBasis::IdealBasis(BiPoly a, BiPoly b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.is_zero() || b_.is_zero()) throw std::invalid_argument("IdealBasis: a and b must be nonzero");
    if (!same_field(a_.field(), b_.field())) throw std::invalid_argument("IdealBasis: a and b over different fields");
    da_ = a_.deg_x();
    db_ = b_.deg_x();
    ea_ = a_.deg_y();
    eb_ = b_.deg_y();
}

}  // namespace sylvres
