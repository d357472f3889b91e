#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace sylvres;
using sylvres::testing::random_monic;
using sylvres::testing::random_upoly;

namespace {

Fq horner(const FieldCtx& F, const UPoly& f, Fq x) {
    Fq r{0};
    for (int i = f.degree(); i >= 0; --i) r = F.add(F.mul(r, x), f.coeff(static_cast<std::size_t>(i)));
    return r;
}

// Terms s_0..s_{n-1} of the sequence annihilated by the monic mu.
std::vector<Fq> forward_recurrence(const FieldCtx& F, const UPoly& mu, std::vector<Fq> init, std::size_t n) {
    const std::size_t L = static_cast<std::size_t>(mu.degree());
    while (init.size() < n) {
        std::size_t j = init.size();
        Fq s{0};
        for (std::size_t i = 0; i < L; ++i) s = F.sub(s, F.mul(mu.coeff(i), init[j - L + i]));
        init.push_back(s);
    }
    return init;
}

}  // namespace

TEST_CASE("multiplication") {
    auto F2 = FieldCtx::prime(2);
    UPoly xp1 = UPoly::from_ints(F2, {1, 1});
    CHECK(xp1 * xp1 == UPoly::from_ints(F2, {1, 0, 1}));
    CHECK((xp1 * UPoly(F2)).is_zero());

    Rng rng(3);
    std::vector<FieldPtr> fields{FieldCtx::prime(65537), FieldCtx::prime(4611686018427387847ULL),
                                 build_extension(2, 1 << 10, rng), build_extension(5, 3000, rng),
                                 FieldCtx::prime(2147483647)};
    for (const auto& F : fields) {
        for (int da : {0, 5, 31, 40, 64, 70, 200, 300}) {
            for (int db : {0, 3, 33, 64, 129}) {
                UPoly f = random_upoly(F, da, rng), g = random_upoly(F, db, rng);
                UPoly oracle(F, mul_coeffs_schoolbook(*F, f.coeffs(), g.coeffs()));
                CHECK(f * g == oracle);
            }
        }
    }
}

TEST_CASE("divrem") {
    auto F2 = FieldCtx::prime(2);
    auto [q, r] = divrem(UPoly::from_ints(F2, {1, 0, 1}), UPoly::from_ints(F2, {1, 1}));
    CHECK(q == UPoly::from_ints(F2, {1, 1}));
    CHECK(r.is_zero());

    auto F = FieldCtx::prime(65537);
    Rng rng(4);
    UPoly small = random_upoly(F, 3, rng), big = random_upoly(F, 7, rng);
    auto [q0, r0] = divrem(small, big);
    CHECK(q0.is_zero());
    CHECK(r0 == small);
    CHECK_THROWS_AS(divrem(small, UPoly(F)), std::domain_error);

    for (int df : {0, 10, 80, 200, 500}) {
        for (int dg : {0, 1, 20, 70, 150}) {
            UPoly f = random_upoly(F, df, rng), g = random_upoly(F, dg, rng);
            auto [qq, rr] = divrem(f, g);
            CHECK(qq * g + rr == f);
            CHECK(rr.degree() < g.degree());
            Divider D(g, 400);
            auto [q2, r2] = D.divrem(f);
            CHECK(q2 == qq);
            CHECK(r2 == rr);
        }
    }
}

TEST_CASE("series inverse") {
    auto F = FieldCtx::prime(65537);
    Rng rng(5);
    UPoly h = random_upoly(F, 50, rng);
    if (h.coeff(0).v == 0) h += UPoly::constant(F, F->one());
    UPoly g = series_inverse(h, 130);
    CHECK((h * g).truncated(130) == UPoly::constant(F, F->one()));
}

TEST_CASE("xgcd") {
    auto F = FieldCtx::prime(101);
    UPoly x = UPoly::x(F);
    UPoly q = UPoly::from_ints(F, {1, 0, 1});
    auto g = xgcd(x, q);
    CHECK(g.d == UPoly::constant(F, F->one()));
    CHECK(g.u * x + g.v * q == g.d);

    Rng rng(6);
    UPoly f = random_upoly(F, 6, rng);
    auto self = xgcd(f, f);
    CHECK(self.d == f.monic());
    CHECK(self.u * f + self.v * f == self.d);
    auto withzero = xgcd(f, UPoly(F));
    CHECK(withzero.d == f.monic());
    CHECK(withzero.u == UPoly::constant(F, F->inv(f.lead())));
    CHECK(withzero.v.is_zero());
    CHECK_THROWS_AS(xgcd(UPoly(F), UPoly(F)), std::invalid_argument);

    for (int it = 0; it < 30; ++it) {
        UPoly c = random_monic(F, it % 4, rng);
        UPoly a = random_upoly(F, 8, rng) * c, b = random_upoly(F, 5, rng) * c;
        auto r = xgcd(a, b);
        CHECK(r.u * a + r.v * b == r.d);
        CHECK(rem(r.d, c).is_zero());
        CHECK(rem(a, r.d).is_zero());
        CHECK(rem(b, r.d).is_zero());
        CHECK(gcd(a, b) == r.d);
        UPoly l = lcm(a, b);
        CHECK(rem(l, a).is_zero());
        CHECK(rem(l, b).is_zero());
    }
}

TEST_CASE("reversal") {
    auto F = FieldCtx::prime(101);
    CHECK(rev(UPoly::from_ints(F, {3, 1}), 2) == UPoly::from_ints(F, {0, 1, 3}));
    CHECK(rev(UPoly::constant(F, Fq{9}), 0) == UPoly::constant(F, Fq{9}));
    CHECK_THROWS_AS(rev(UPoly::from_ints(F, {1, 2, 3}), 1), std::invalid_argument);
    Rng rng(7);
    for (int it = 0; it < 20; ++it) {
        UPoly f = random_upoly(F, it, rng);
        if (f.coeff(0).v == 0) f += UPoly::constant(F, F->one());
        CHECK(rev(rev(f)) == f);
    }
}

TEST_CASE("Taylor shift") {
    auto F = FieldCtx::prime(101);
    UPoly x2 = UPoly::from_ints(F, {0, 0, 1});
    CHECK(taylor_shift(x2, F->one()) == UPoly::from_ints(F, {1, 2, 1}));
    Rng rng(8);
    for (int it = 0; it < 20; ++it) {
        UPoly f = random_upoly(F, it, rng);
        Fq a = sample_uniform(*F, rng);
        CHECK(taylor_shift(f, Fq{0}) == f);
        UPoly s = taylor_shift(f, a);
        CHECK(taylor_shift(s, F->neg(a)) == f);
        Fq t = sample_uniform(*F, rng);
        CHECK(s(t) == f(F->add(t, a)));
    }
}

TEST_CASE("multipoint evaluation and interpolation") {
    auto F = FieldCtx::prime(65537);
    Rng rng(9);
    for (std::size_t n : {1u, 5u, 15u, 16u, 40u, 129u}) {
        std::vector<Fq> pts(n);
        for (std::size_t i = 0; i < n; ++i) pts[i] = F->from_uint(3 * i + 1);
        UPoly c = UPoly::constant(F, Fq{42});
        for (Fq v : multipoint_eval(c, pts)) CHECK(v == Fq{42});
        UPoly f = random_upoly(F, static_cast<int>(n) - 1, rng);
        auto vals = multipoint_eval(f, pts);
        for (std::size_t i = 0; i < n; ++i) CHECK(vals[i] == horner(*F, f, pts[i]));
        CHECK(interpolate(F, pts, vals) == f);
        UPoly big = random_upoly(F, static_cast<int>(3 * n), rng);
        auto bv = multipoint_eval(big, pts);
        for (std::size_t i = 0; i < n; ++i) CHECK(bv[i] == horner(*F, big, pts[i]));
    }
    std::vector<Fq> dup{Fq{1}, Fq{2}, Fq{1}};
    std::vector<Fq> vals{Fq{0}, Fq{0}, Fq{0}};
    CHECK_THROWS_AS(interpolate(F, dup, vals), std::invalid_argument);

    Rng r2(10);
    auto E = build_extension(3, 500, r2);
    std::vector<Fq> pts;
    for (u64 i = 0; i < 30; ++i) pts.push_back(E->element_at(i * 7 + 2));
    UPoly f = random_upoly(E, 29, r2);
    CHECK(interpolate(E, pts, multipoint_eval(f, pts)) == f);
}

TEST_CASE("Berlekamp-Massey") {
    auto F = FieldCtx::prime(65537);
    std::vector<Fq> ones(10, F->one());
    CHECK(berlekamp_massey(F, ones) == UPoly::from_ints(F, {-1, 1}));

    std::vector<Fq> fib{Fq{0}, Fq{1}};
    while (fib.size() < 20) fib.push_back(F->add(fib[fib.size() - 1], fib[fib.size() - 2]));
    CHECK(berlekamp_massey(F, fib) == UPoly::from_ints(F, {-1, -1, 1}));

    std::vector<Fq> zeros(8, Fq{0});
    CHECK(berlekamp_massey(F, zeros) == UPoly::constant(F, F->one()));

    Rng rng(11);
    for (int it = 0; it < 30; ++it) {
        UPoly mu = random_monic(F, 8, rng);
        std::vector<Fq> init(8);
        for (auto& v : init) v = sample_uniform(*F, rng);
        auto seq = forward_recurrence(*F, mu, init, 16);
        UPoly g = berlekamp_massey(F, seq);
        CHECK(rem(mu, g).is_zero());
        CHECK(g == mu);
    }
    auto F2 = FieldCtx::prime(2);
    for (int it = 0; it < 30; ++it) {
        UPoly mu = random_monic(F2, 6, rng);
        std::vector<Fq> init(6);
        for (auto& v : init) v = sample_uniform(*F2, rng);
        auto seq = forward_recurrence(*F2, mu, init, 12);
        UPoly g = berlekamp_massey(F2, seq);
        CHECK(rem(mu, g).is_zero());
    }
}
