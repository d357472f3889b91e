#include "sylvres/upoly.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace sylvres {

namespace {

// ---------------------------------------------------------------------------
// three-prime NTT

struct NttPrime {
    u64 mod;
    u64 root;  // primitive root
    int max_log;
};

constexpr std::array<NttPrime, 3> kNttPrimes = {{
    {998244353ULL, 3, 23},
    {167772161ULL, 3, 25},
    {469762049ULL, 3, 26},
}};
constexpr int kNttMaxLog = 23;

u64 pw(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

void ntt(std::vector<u64>& a, bool invert, const NttPrime& P) {
    const std::size_t n = a.size();
    const u64 mod = P.mod;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        u64 w = pw(P.root, (mod - 1) / len, mod);
        if (invert) w = pw(w, mod - 2, mod);
        const std::size_t half = len >> 1;
        std::vector<u64> ws(half);
        ws[0] = 1;
        for (std::size_t k = 1; k < half; ++k) ws[k] = ws[k - 1] * w % mod;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                u64 u = a[i + k];
                u64 v = a[i + k + half] * ws[k] % mod;
                a[i + k] = u + v >= mod ? u + v - mod : u + v;
                a[i + k + half] = u >= v ? u - v : u + mod - v;
            }
        }
    }
    if (invert) {
        u64 ninv = pw(n % mod, mod - 2, mod);
        for (u64& x : a) x = x * ninv % mod;
    }
}

std::vector<Fq> mul_ntt(const FieldCtx& F, std::span<const Fq> a, std::span<const Fq> b) {
    const std::size_t out = a.size() + b.size() - 1;
    std::size_t n = 1;
    while (n < out) n <<= 1;
    std::array<std::vector<u64>, 3> res;
    for (int t = 0; t < 3; ++t) {
        const NttPrime& P = kNttPrimes[t];
        std::vector<u64> fa(n, 0), fb(n, 0);
        for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i].v % P.mod;
        for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i].v % P.mod;
        ntt(fa, false, P);
        ntt(fb, false, P);
        for (std::size_t i = 0; i < n; ++i) fa[i] = fa[i] * fb[i] % P.mod;
        ntt(fa, true, P);
        res[t] = std::move(fa);
    }
    const u64 m0 = kNttPrimes[0].mod, m1 = kNttPrimes[1].mod, m2 = kNttPrimes[2].mod;
    const u64 inv_m0_mod_m1 = pw(m0 % m1, m1 - 2, m1);
    const u64 m0m1_mod_m2 = (m0 % m2) * (m1 % m2) % m2;
    const u64 inv_m0m1_mod_m2 = pw(m0m1_mod_m2, m2 - 2, m2);
    const u64 p = F.characteristic();
    const u64 m0_mod_p = m0 % p;
    const u64 m0m1_mod_p = static_cast<u64>((static_cast<u128>(m0) * m1) % p);
    std::vector<Fq> r(out);
    for (std::size_t i = 0; i < out; ++i) {
        u64 r0 = res[0][i], r1 = res[1][i], r2 = res[2][i];
        u64 k1 = (r1 + m1 - r0 % m1) % m1 * inv_m0_mod_m1 % m1;
        u64 t = (r0 % m2 + (m0 % m2) * k1 % m2) % m2;
        u64 k2 = (r2 + m2 - t) % m2 * inv_m0m1_mod_m2 % m2;
        u128 v = static_cast<u128>(r0 % p) + static_cast<u128>(m0_mod_p) * k1 % p +
                 static_cast<u128>(m0m1_mod_p) * k2 % p;
        r[i] = Fq{static_cast<u64>(v % p)};
    }
    return r;
}

bool ntt_applicable(const FieldCtx& F, std::size_t na, std::size_t nb) {
    if (!F.is_prime_field() || F.characteristic() >= (u64{1} << 31)) return false;
    if (std::min(na, nb) < tuning::kNttCutoff) return false;
    return na + nb - 1 <= (std::size_t{1} << kNttMaxLog);
}

// ---------------------------------------------------------------------------
// Karatsuba

void add_into(const FieldCtx& F, std::vector<Fq>& dst, std::size_t off, std::span<const Fq> src) {
    if (dst.size() < off + src.size()) dst.resize(off + src.size(), Fq{0});
    for (std::size_t i = 0; i < src.size(); ++i) dst[off + i] = F.add(dst[off + i], src[i]);
}

std::vector<Fq> karatsuba(const FieldCtx& F, std::span<const Fq> a, std::span<const Fq> b) {
    if (a.size() < b.size()) std::swap(a, b);
    const std::size_t na = a.size(), nb = b.size();
    if (nb < tuning::kKaratsubaCutoff) return mul_coeffs_schoolbook(F, a, b);
    std::vector<Fq> r(na + nb - 1, Fq{0});
    if (2 * nb <= na) {
        for (std::size_t off = 0; off < na; off += nb) {
            std::size_t len = std::min(nb, na - off);
            auto part = karatsuba(F, a.subspan(off, len), b);
            add_into(F, r, off, part);
        }
        return r;
    }
    const std::size_t m = na / 2;
    auto a0 = a.subspan(0, m), a1 = a.subspan(m);
    auto b0 = b.subspan(0, std::min(m, nb)), b1 = nb > m ? b.subspan(m) : std::span<const Fq>{};
    auto z0 = karatsuba(F, a0, b0);
    std::vector<Fq> sa(std::max(a0.size(), a1.size()), Fq{0});
    for (std::size_t i = 0; i < a0.size(); ++i) sa[i] = a0[i];
    for (std::size_t i = 0; i < a1.size(); ++i) sa[i] = F.add(sa[i], a1[i]);
    if (b1.empty()) {
        auto z1 = karatsuba(F, a1, b0);
        add_into(F, r, 0, z0);
        add_into(F, r, m, z1);
        return r;
    }
    auto z2 = karatsuba(F, a1, b1);
    std::vector<Fq> sb(std::max(b0.size(), b1.size()), Fq{0});
    for (std::size_t i = 0; i < b0.size(); ++i) sb[i] = b0[i];
    for (std::size_t i = 0; i < b1.size(); ++i) sb[i] = F.add(sb[i], b1[i]);
    auto z1 = karatsuba(F, sa, sb);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = F.sub(z1[i], z0[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = F.sub(z1[i], z2[i]);
    add_into(F, r, 0, z0);
    add_into(F, r, m, z1);
    add_into(F, r, 2 * m, z2);
    r.resize(na + nb - 1);
    return r;
}

// ---------------------------------------------------------------------------
// subproduct tree

struct SubproductTree {
    // nodes[level][i]; level 0 holds the linear factors
    std::vector<std::vector<UPoly>> levels;

    SubproductTree(const FieldPtr& F, std::span<const Fq> pts) {
        std::vector<UPoly> leaves;
        leaves.reserve(pts.size());
        for (Fq p : pts) leaves.emplace_back(F, std::vector<Fq>{F->neg(p), F->one()});
        levels.push_back(std::move(leaves));
        while (levels.back().size() > 1) {
            const auto& prev = levels.back();
            std::vector<UPoly> next;
            for (std::size_t i = 0; i + 1 < prev.size(); i += 2) next.push_back(prev[i] * prev[i + 1]);
            if (prev.size() % 2) next.push_back(prev.back());
            levels.push_back(std::move(next));
        }
    }

    const UPoly& root() const { return levels.back()[0]; }

    void eval_down(const UPoly& f, std::size_t level, std::size_t idx, std::vector<Fq>& out,
                   std::size_t& cursor) const {
        UPoly r = rem(f, levels[level][idx]);
        if (level == 0) {
            out[cursor++] = r.coeff(0);
            return;
        }
        const auto& below = levels[level - 1];
        std::size_t left = 2 * idx;
        if (left + 1 < below.size() || (left + 1 == below.size() && below.size() % 2 == 0)) {
            eval_down(r, level - 1, left, out, cursor);
            eval_down(r, level - 1, left + 1, out, cursor);
        } else {
            eval_down(r, level - 1, left, out, cursor);
        }
    }

    // Linear combination sum_i c_i * M / (x - p_i) restricted to the subtree.
    UPoly combine(std::span<const Fq> c, std::size_t level, std::size_t idx, std::size_t& cursor) const {
        if (level == 0) return UPoly::constant(levels[0][idx].field(), c[cursor++]);
        const auto& below = levels[level - 1];
        std::size_t left = 2 * idx;
        bool has_right = left + 1 < below.size();
        if (!has_right) return combine(c, level - 1, left, cursor);
        UPoly l = combine(c, level - 1, left, cursor);
        UPoly r = combine(c, level - 1, left + 1, cursor);
        return l * below[left + 1] + r * below[left];
    }
};

}  // namespace

std::vector<Fq> mul_coeffs_schoolbook(const FieldCtx& F, std::span<const Fq> a, std::span<const Fq> b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size() + b.size() - 1;
    if (F.is_prime_field() && F.small_characteristic()) {
        const u64 p = F.characteristic();
        std::vector<u128> acc(n, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const u64 ai = a[i].v;
            if (ai == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<u128>(ai * b[j].v);
        }
        std::vector<Fq> r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = Fq{static_cast<u64>(acc[i] % p)};
        return r;
    }
    std::vector<Fq> r(n, Fq{0});
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].v == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return r;
}

std::vector<Fq> mul_coeffs(const FieldCtx& F, std::span<const Fq> a, std::span<const Fq> b) {
    if (a.empty() || b.empty()) return {};
    if (ntt_applicable(F, a.size(), b.size())) return mul_ntt(F, a, b);
    if (std::min(a.size(), b.size()) < tuning::kKaratsubaCutoff) return mul_coeffs_schoolbook(F, a, b);
    return karatsuba(F, a, b);
}

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(FieldPtr F, std::vector<Fq> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) { normalize(); }

void UPoly::normalize() {
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

UPoly UPoly::constant(FieldPtr F, Fq c) { return UPoly(std::move(F), std::vector<Fq>{c}); }

UPoly UPoly::monomial(FieldPtr F, Fq c, std::size_t k) {
    std::vector<Fq> v(k + 1, Fq{0});
    v[k] = c;
    return UPoly(std::move(F), std::move(v));
}

UPoly UPoly::from_ints(FieldPtr F, std::initializer_list<std::int64_t> low_to_high) {
    std::vector<Fq> v;
    v.reserve(low_to_high.size());
    for (auto c : low_to_high) v.push_back(F->from_int(c));
    return UPoly(std::move(F), std::move(v));
}

Fq UPoly::operator()(Fq x) const {
    Fq r{0};
    for (std::size_t i = c_.size(); i-- > 0;) r = F_->add(F_->mul(r, x), c_[i]);
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (!F_) F_ = o.F_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Fq{0});
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_->add(c_[i], o.c_[i]);
    normalize();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (!F_) F_ = o.F_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Fq{0});
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_->sub(c_[i], o.c_[i]);
    normalize();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    const FieldPtr& F = a.F_ ? a.F_ : b.F_;
    if (a.is_zero() || b.is_zero()) return UPoly(F);
    return UPoly(F, mul_coeffs(*F, a.c_, b.c_));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (Fq& c : r.c_) c = F_->neg(c);
    return r;
}

UPoly UPoly::scaled(Fq s) const {
    if (s.v == 0) return UPoly(F_);
    UPoly r = *this;
    for (Fq& c : r.c_) c = F_->mul(c, s);
    return r;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(F_->inv(lead()));
}

UPoly UPoly::shifted_up(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Fq> v(k, Fq{0});
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(F_, std::move(v));
}

UPoly UPoly::shifted_down(std::size_t k) const {
    if (k >= c_.size()) return UPoly(F_);
    return UPoly(F_, std::vector<Fq>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

UPoly UPoly::truncated(std::size_t k) const {
    if (k >= c_.size()) return *this;
    return UPoly(F_, std::vector<Fq>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k)));
}

// ---------------------------------------------------------------------------
// division

namespace {

std::pair<UPoly, UPoly> divrem_schoolbook(const UPoly& f, const UPoly& g) {
    const FieldCtx& F = g.ctx();
    std::vector<Fq> r(f.coeffs().begin(), f.coeffs().end());
    const std::size_t m = g.size() - 1;
    const std::size_t qlen = r.size() - m;
    std::vector<Fq> q(qlen, Fq{0});
    const Fq inv_lc = F.inv(g.lead());
    auto gc = g.coeffs();
    for (std::size_t i = qlen; i-- > 0;) {
        Fq c = F.mul(r[i + m], inv_lc);
        q[i] = c;
        if (c.v == 0) continue;
        for (std::size_t j = 0; j <= m; ++j) r[i + j] = F.sub(r[i + j], F.mul(c, gc[j]));
    }
    r.resize(m);
    return {UPoly(g.field(), std::move(q)), UPoly(g.field(), std::move(r))};
}

std::pair<UPoly, UPoly> divrem_newton(const UPoly& f, const UPoly& g, const UPoly& rev_inv) {
    const std::size_t m = g.size() - 1;
    const std::size_t qlen = f.size() - m;
    UPoly frev = rev(f).truncated(qlen);
    UPoly qrev = (frev * rev_inv.truncated(qlen)).truncated(qlen);
    UPoly q = rev(qrev, qlen - 1);
    UPoly r = (f - q * g).truncated(m);
    return {std::move(q), std::move(r)};
}

}  // namespace

UPoly series_inverse(const UPoly& h, std::size_t n) {
    if (h.coeff(0).v == 0) throw std::domain_error("series inverse requires a unit constant term");
    const FieldCtx& F = h.ctx();
    UPoly g = UPoly::constant(h.field(), F.inv(h.coeff(0)));
    std::size_t k = 1;
    while (k < n) {
        k = std::min(2 * k, n);
        UPoly e = (h.truncated(k) * g).truncated(k);
        // g <- g (2 - h g)
        UPoly two_minus = -e;
        two_minus += UPoly::constant(h.field(), F.add(F.one(), F.one()));
        g = (g * two_minus).truncated(k);
    }
    return g.truncated(n);
}

std::pair<UPoly, UPoly> divrem(const UPoly& f, const UPoly& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    const FieldPtr& F = g.field();
    if (f.degree() < g.degree()) return {UPoly(F), f};
    const std::size_t qlen = f.size() - g.size() + 1;
    if (qlen < tuning::kNewtonDivCutoff || g.size() < tuning::kNewtonDivCutoff) return divrem_schoolbook(f, g);
    return divrem_newton(f, g, series_inverse(rev(g), qlen));
}

UPoly rem(const UPoly& f, const UPoly& g) { return divrem(f, g).second; }

UPoly exact_div(const UPoly& f, const UPoly& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

Divider::Divider(UPoly g, std::size_t max_quotient_len) : g_(std::move(g)), max_q_(max_quotient_len) {
    if (g_.is_zero()) throw std::domain_error("polynomial division by zero");
    if (max_q_ >= tuning::kNewtonDivCutoff && g_.size() >= tuning::kNewtonDivCutoff)
        rev_inv_ = series_inverse(rev(g_), max_q_);
}

std::pair<UPoly, UPoly> Divider::divrem(const UPoly& f) const {
    if (f.degree() < g_.degree()) return {UPoly(g_.field()), f};
    const std::size_t qlen = f.size() - g_.size() + 1;
    if (rev_inv_.is_zero() || qlen > max_q_ || qlen < tuning::kNewtonDivCutoff) return sylvres::divrem(f, g_);
    return divrem_newton(f, g_, rev_inv_);
}

// ---------------------------------------------------------------------------
// gcd

Xgcd xgcd(const UPoly& f, const UPoly& g) {
    const FieldPtr& F = f.field() ? f.field() : g.field();
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("xgcd of two zero polynomials");
    UPoly r0 = f, r1 = g;
    UPoly s0 = UPoly::constant(F, F->one()), s1(F);
    UPoly t0(F), t1 = UPoly::constant(F, F->one());
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Fq inv_lc = F->inv(r0.lead());
    return {r0.scaled(inv_lc), s0.scaled(inv_lc), t0.scaled(inv_lc)};
}

UPoly gcd(const UPoly& f, const UPoly& g) {
    if (f.is_zero() && g.is_zero()) return f;
    UPoly a = f, b = g;
    while (!b.is_zero()) {
        UPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly lcm(const UPoly& f, const UPoly& g) {
    if (f.is_zero() || g.is_zero()) return UPoly(f.field() ? f.field() : g.field());
    return exact_div(f * g, gcd(f, g)).monic();
}

// ---------------------------------------------------------------------------

UPoly rev(const UPoly& f, std::size_t k) {
    if (f.is_zero()) return f;
    if (static_cast<std::size_t>(f.degree()) > k) throw std::invalid_argument("reversal order below degree");
    std::vector<Fq> v(k + 1, Fq{0});
    auto c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) v[k - i] = c[i];
    return UPoly(f.field(), std::move(v));
}

UPoly rev(const UPoly& f) { return f.is_zero() ? f : rev(f, static_cast<std::size_t>(f.degree())); }

UPoly taylor_shift(const UPoly& f, Fq alpha) {
    if (f.is_zero() || alpha.v == 0) return f;
    const FieldCtx& F = f.ctx();
    auto c = f.coeffs();
    std::vector<Fq> r(c.size(), Fq{0});
    // Horner in the basis of powers of (x + alpha)
    for (std::size_t i = c.size(); i-- > 0;) {
        for (std::size_t j = c.size() - 1; j > 0; --j) r[j] = F.add(r[j - 1], F.mul(r[j], alpha));
        r[0] = F.add(F.mul(r[0], alpha), c[i]);
    }
    return UPoly(f.field(), std::move(r));
}

std::pair<UPoly, std::size_t> strip_x_power(const UPoly& f) {
    if (f.is_zero()) return {f, 0};
    std::size_t k = 0;
    while (f.coeff(k).v == 0) ++k;
    return {f.shifted_down(k), k};
}

std::vector<Fq> multipoint_eval(const UPoly& f, std::span<const Fq> pts) {
    std::vector<Fq> out(pts.size());
    if (pts.size() < tuning::kSubproductCutoff || f.size() < 2) {
        for (std::size_t i = 0; i < pts.size(); ++i) out[i] = f.is_zero() ? Fq{0} : f(pts[i]);
        return out;
    }
    SubproductTree tree(f.field(), pts);
    std::size_t cursor = 0;
    tree.eval_down(f, tree.levels.size() - 1, 0, out, cursor);
    return out;
}

namespace {

void require_distinct(std::span<const Fq> pts) {
    std::vector<Fq> s(pts.begin(), pts.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("interpolation points must be pairwise distinct");
}

UPoly interpolate_newton(const FieldPtr& F, std::span<const Fq> pts, std::span<const Fq> vals) {
    const std::size_t n = pts.size();
    std::vector<Fq> dd(vals.begin(), vals.end());
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) {
            dd[i] = F->div(F->sub(dd[i], dd[i - 1]), F->sub(pts[i], pts[i - k]));
            if (i == k) break;
        }
    UPoly r(F);
    for (std::size_t i = n; i-- > 0;) {
        r = r * UPoly(F, std::vector<Fq>{F->neg(pts[i]), F->one()});
        r += UPoly::constant(F, dd[i]);
    }
    return r;
}

}  // namespace

UPoly interpolate(const FieldPtr& F, std::span<const Fq> pts, std::span<const Fq> vals) {
    if (pts.size() != vals.size()) throw std::invalid_argument("interpolation: size mismatch");
    require_distinct(pts);
    if (pts.empty()) return UPoly(F);
    if (pts.size() < tuning::kSubproductCutoff) return interpolate_newton(F, pts, vals);
    SubproductTree tree(F, pts);
    const UPoly& m = tree.root();
    std::vector<Fq> dm(m.size() > 1 ? m.size() - 1 : 0);
    for (std::size_t i = 1; i < m.size(); ++i) dm[i - 1] = F->mul(F->from_uint(i), m.coeff(i));
    UPoly deriv(F, std::move(dm));
    std::vector<Fq> w = multipoint_eval(deriv, pts);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = F->div(vals[i], w[i]);
    std::size_t cursor = 0;
    return tree.combine(w, tree.levels.size() - 1, 0, cursor);
}

UPoly berlekamp_massey(const FieldPtr& F, std::span<const Fq> s) {
    // connection polynomial C with s_j + sum_{i=1..L} C_i s_{j-i} = 0
    std::vector<Fq> C{F->one()}, B{F->one()};
    std::size_t L = 0, m = 1;
    Fq b = F->one();
    for (std::size_t n = 0; n < s.size(); ++n) {
        Fq disc = s[n];
        for (std::size_t i = 1; i <= L && i < C.size(); ++i) disc = F->add(disc, F->mul(C[i], s[n - i]));
        if (disc.v == 0) {
            ++m;
            continue;
        }
        Fq coef = F->div(disc, b);
        std::vector<Fq> T = C;
        if (C.size() < B.size() + m) C.resize(B.size() + m, Fq{0});
        for (std::size_t i = 0; i < B.size(); ++i) C[i + m] = F->sub(C[i + m], F->mul(coef, B[i]));
        if (2 * L <= n) {
            L = n + 1 - L;
            B = std::move(T);
            b = disc;
            m = 1;
        } else {
            ++m;
        }
    }
    C.resize(std::max(C.size(), L + 1), Fq{0});
    C.resize(L + 1);
    std::vector<Fq> mu(L + 1);
    for (std::size_t i = 0; i <= L; ++i) mu[L - i] = C[i];
    return UPoly(F, std::move(mu));
}

}  // namespace sylvres
