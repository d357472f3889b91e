#include "sylvres/field.hpp"

#include <algorithm>
#include <limits>

namespace sylvres {

namespace {

constexpr u64 kMaxCardinality = u64{1} << 62;

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 splitmix64(u64& state) {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Dense arithmetic in F_p[t] on low-to-high coefficient vectors, used only for
// irreducibility testing where the field object does not exist yet.
using PolyP = std::vector<u64>;

void trim(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP poly_mulmod(const PolyP& a, const PolyP& b, const PolyP& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
    }
    const std::size_t k = m.size() - 1;  // m monic
    for (std::size_t i = r.size(); i-- > k;) {
        u64 c = r[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= k; ++j) {
            u64 t = mulmod_u64(c, m[j], p);
            r[i - k + j] = (r[i - k + j] + p - t) % p;
        }
    }
    if (r.size() > k) r.resize(k);
    trim(r);
    return r;
}

PolyP poly_powmod(PolyP base, u64 e, const PolyP& m, u64 p) {
    PolyP r{1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

PolyP poly_rem(PolyP a, const PolyP& b, u64 p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const u64 inv_lc = powmod_u64(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        u64 c = mulmod_u64(a.back(), inv_lc, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j <= db; ++j) {
            u64 t = mulmod_u64(c, b[j], p);
            a[shift + j] = (a[shift + j] + p - t) % p;
        }
        trim(a);
    }
    return a;
}

PolyP poly_gcd(PolyP a, PolyP b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyP r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            fs.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool is_probable_prime(u64 n, int rounds) {
    if (n < 2) return false;
    for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == sp) return true;
        if (n % sp == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 state = n;
    for (int r = 0; r < rounds; ++r) {
        u64 a = 2 + splitmix64(state) % (n - 3);
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_irreducible_mod_p(std::span<const u64> monic, u64 p) {
    PolyP m(monic.begin(), monic.end());
    trim(m);
    if (m.size() < 2 || m.back() != 1) return false;
    const u64 k = m.size() - 1;
    if (k == 1) return true;
    const PolyP x{0, 1};
    // x^(p^k) == x mod m
    PolyP xp = x;
    std::vector<PolyP> powers(k + 1);  // powers[i] = x^(p^i) mod m
    powers[0] = x;
    for (u64 i = 1; i <= k; ++i) {
        xp = poly_powmod(xp, p, m, p);
        powers[i] = xp;
    }
    PolyP last = powers[k];
    last.resize(std::max<std::size_t>(last.size(), 2), 0);
    last[1] = (last[1] + p - 1) % p;
    trim(last);
    if (!last.empty()) return false;
    for (u64 r : prime_factors(k)) {
        PolyP h = powers[k / r];
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = (h[1] + p - 1) % p;
        trim(h);
        PolyP g = poly_gcd(m, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

FieldCtx::FieldCtx(u64 p, std::vector<u64> modulus)
    : p_(p), k_(modulus.empty() ? 1 : static_cast<unsigned>(modulus.size() - 1)), q_(p),
      small_(p < (u64{1} << 32)), modulus_(std::move(modulus)) {
    for (unsigned i = 1; i < k_; ++i) q_ *= p_;
}

FieldPtr FieldCtx::prime(u64 p) {
    if (p >= kMaxCardinality) throw std::invalid_argument("characteristic must be below 2^62");
    if (!is_probable_prime(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
    return FieldPtr(new FieldCtx(p, {}));
}

FieldPtr FieldCtx::extension(u64 p, std::vector<u64> modulus) {
    if (!is_probable_prime(p)) throw std::invalid_argument("characteristic is not prime: " + std::to_string(p));
    trim(modulus);
    if (modulus.size() < 3) throw std::invalid_argument("extension modulus must have degree >= 2");
    for (u64& c : modulus) c %= p;
    if (modulus.back() != 1) throw std::invalid_argument("extension modulus must be monic");
    u64 q = 1;
    for (std::size_t i = 1; i < modulus.size(); ++i) {
        if (q > kMaxCardinality / p) throw std::invalid_argument("extension field too large (q must stay below 2^62)");
        q *= p;
    }
    if (!is_irreducible_mod_p(modulus, p)) throw std::invalid_argument("extension modulus is reducible");
    return FieldPtr(new FieldCtx(p, std::move(modulus)));
}

Fq FieldCtx::from_int(std::int64_t c) const {
    std::int64_t r = c % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return {static_cast<u64>(r)};
}

Fq FieldCtx::element_at(u64 i) const {
    if (i >= q_) throw std::out_of_range("field enumeration index out of range");
    return {i};
}

std::vector<u64> FieldCtx::digits(Fq x) const {
    std::vector<u64> ds(k_, 0);
    u64 v = x.v;
    for (unsigned i = 0; i < k_; ++i) {
        ds[i] = v % p_;
        v /= p_;
    }
    return ds;
}

Fq FieldCtx::from_digits(std::span<const u64> ds) const {
    u64 v = 0;
    for (std::size_t i = std::min<std::size_t>(ds.size(), k_); i-- > 0;) v = v * p_ + ds[i] % p_;
    return {v};
}

Fq FieldCtx::add_ext(Fq a, Fq b) const {
    u64 r = 0, scale = 1, x = a.v, y = b.v;
    for (unsigned i = 0; i < k_; ++i) {
        u64 s = x % p_ + y % p_;
        if (s >= p_) s -= p_;
        r += s * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return {r};
}

Fq FieldCtx::sub_ext(Fq a, Fq b) const {
    u64 r = 0, scale = 1, x = a.v, y = b.v;
    for (unsigned i = 0; i < k_; ++i) {
        u64 xd = x % p_, yd = y % p_;
        u64 s = xd >= yd ? xd - yd : xd + p_ - yd;
        r += s * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return {r};
}

Fq FieldCtx::mul_ext(Fq a, Fq b) const {
    if (a.v == 0 || b.v == 0) return {0};
    if (p_ == 2) {
        u128 prod = 0;
        u64 x = a.v;
        for (unsigned i = 0; x; ++i, x >>= 1)
            if (x & 1) prod ^= static_cast<u128>(b.v) << i;
        u128 mbits = 0;
        for (unsigned i = 0; i <= k_; ++i)
            if (modulus_[i]) mbits |= static_cast<u128>(1) << i;
        for (int i = 2 * static_cast<int>(k_) - 2; i >= static_cast<int>(k_); --i)
            if ((prod >> i) & 1) prod ^= mbits << (i - k_);
        return {static_cast<u64>(prod)};
    }
    u64 da[64], db[64], r[128] = {};
    u64 x = a.v, y = b.v;
    for (unsigned i = 0; i < k_; ++i) {
        da[i] = x % p_;
        db[i] = y % p_;
        x /= p_;
        y /= p_;
    }
    for (unsigned i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j) r[i + j] = (r[i + j] + mulmod_u64(da[i], db[j], p_)) % p_;
    }
    for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
        u64 c = r[i];
        if (c != 0) {
            for (unsigned j = 0; j < k_; ++j) {
                u64 t = mulmod_u64(c, modulus_[j], p_);
                r[i - k_ + j] = (r[i - k_ + j] + p_ - t) % p_;
            }
        }
        if (i == k_) break;
    }
    u64 v = 0;
    for (unsigned i = k_; i-- > 0;) v = v * p_ + r[i];
    return {v};
}

Fq FieldCtx::inv(Fq a) const {
    if (a.v == 0) throw std::domain_error("inverse of zero in finite field");
    if (k_ == 1) {
        // extended Euclid on residues
        __int128 t = 0, newt = 1;
        __int128 r = p_, newr = a.v;
        while (newr != 0) {
            __int128 qt = r / newr;
            __int128 tmp = t - qt * newt;
            t = newt;
            newt = tmp;
            tmp = r - qt * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += p_;
        return {static_cast<u64>(t)};
    }
    return pow(a, q_ - 2);
}

Fq FieldCtx::pow(Fq a, u64 e) const {
    Fq r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FieldPtr build_extension(u64 p, u64 min_cardinality, Rng& rng) {
    if (min_cardinality < 2) throw std::invalid_argument("min_cardinality must be at least 2");
    if (p >= min_cardinality) return FieldCtx::prime(p);
    if (!is_probable_prime(p)) throw std::invalid_argument("characteristic is not prime: " + std::to_string(p));
    unsigned k = 1;
    u64 q = p;
    while (q < min_cardinality) {
        if (q > kMaxCardinality / p) throw std::invalid_argument("requested extension exceeds 2^62 elements");
        q *= p;
        ++k;
    }
    std::uniform_int_distribution<u64> coeff(0, p - 1);
    for (;;) {
        std::vector<u64> m(k + 1);
        for (unsigned i = 0; i < k; ++i) m[i] = coeff(rng);
        m[k] = 1;
        if (m[0] == 0) continue;
        if (is_irreducible_mod_p(m, p)) return FieldCtx::extension(p, std::move(m));
    }
}

Fq sample_uniform(const FieldCtx& F, Rng& rng) {
    std::uniform_int_distribution<u64> dist(0, F.cardinality() - 1);
    return {dist(rng)};
}

u64 derive_seed(u64 seed, u64 index) {
    u64 state = seed ^ (0xd1b54a32d192ed03ULL * (index + 1));
    return splitmix64(state);
}

}  // namespace sylvres
