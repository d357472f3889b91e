#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace sylvres;
using sylvres::testing::random_bipoly;

namespace {

BiPoly schoolbook(const BiPoly& f, const BiPoly& g) {
    const FieldCtx& F = f.ctx();
    std::vector<Term> ts;
    for (int i = 0; i <= f.deg_x(); ++i)
        for (int j = 0; j <= f.deg_y(); ++j)
            for (int k = 0; k <= g.deg_x(); ++k)
                for (int l = 0; l <= g.deg_y(); ++l) ts.push_back({F.mul(f.coeff(i, j), g.coeff(k, l)), i + k, j + l});
    return BiPoly::from_terms(f.field(), ts);
}

}  // namespace

TEST_CASE("construction and degrees") {
    auto F = FieldCtx::prime(101);
    BiPoly z(F);
    CHECK(z.is_zero());
    CHECK(z.deg_x() == kDegNegInf);
    CHECK(z.deg_y() == kDegNegInf);
    BiPoly f = BiPoly::from_ints(F, {{1, 2, 1}, {1, 0, 1}, {5, 3, 0}, {-5, 3, 0}});
    CHECK(f.deg_x() == 2);
    CHECK(f.deg_y() == 1);
    CHECK(f.coeff(2, 1) == Fq{1});
    CHECK(f.lc_y() == UPoly::from_ints(F, {1, 0, 1}));
    CHECK(f.terms().size() == 2);
    CHECK(BiPoly::from_ints(F, {{3, 1, 1}, {-3, 1, 1}}).is_zero());
}

TEST_CASE("bimul") {
    auto F = FieldCtx::prime(101);
    BiPoly x = BiPoly::x(F), y = BiPoly::y(F);
    CHECK((x + y) * (x - y) == BiPoly::from_ints(F, {{1, 2, 0}, {-1, 0, 2}}));
    Rng rng(1);
    BiPoly f = random_bipoly(F, 4, 6, rng);
    CHECK(f * BiPoly::constant(F, F->one()) == f);
    CHECK((f * BiPoly(F)).is_zero());
    std::vector<FieldPtr> fields{F, FieldCtx::prime(65537), build_extension(2, 200, rng)};
    for (const auto& K : fields)
        for (int it = 0; it < 30; ++it) {
            BiPoly a = random_bipoly(K, it % 9, (it * 5) % 9, rng);
            BiPoly b = random_bipoly(K, (it * 3) % 9, (it * 7) % 9, rng);
            BiPoly c = random_bipoly(K, 3, 2, rng);
            CHECK(a * b == schoolbook(a, b));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
}

TEST_CASE("vectorization") {
    auto F = FieldCtx::prime(101);
    auto v = vec_y(BiPoly::x(F), 3);
    REQUIRE(v.size() == 3);
    CHECK(v[0].is_zero());
    CHECK(v[1].is_zero());
    CHECK(v[2] == UPoly::x(F));
    for (const auto& p : vec_y(BiPoly(F), 4)) CHECK(p.is_zero());
    CHECK_THROWS_AS(vec_y(BiPoly::y(F), 1), std::invalid_argument);

    Rng rng(2);
    for (int it = 0; it < 20; ++it) {
        BiPoly f = random_bipoly(F, it % 5, it % 7, rng);
        CHECK(unvec_y(F, vec_y(f, 8)) == f);
        CHECK(unvec_x(F, vec_x(f, 6)) == f);
        auto w = vec_x(f, 6);
        for (int k = 0; k < 6; ++k) CHECK(w[k] == f.coeff_x(5 - k));
    }
}

TEST_CASE("shifts, reversals, evaluation") {
    auto F = FieldCtx::prime(101);
    Rng rng(3);
    for (int it = 0; it < 20; ++it) {
        BiPoly f = random_bipoly(F, 3, 4, rng);
        Fq a = sample_uniform(*F, rng), b = sample_uniform(*F, rng);
        Fq x0 = sample_uniform(*F, rng), y0 = sample_uniform(*F, rng);
        CHECK(f.shift_y(a)(x0, y0) == f(x0, F->add(y0, a)));
        CHECK(f.shift_x(b)(x0, y0) == f(F->add(x0, b), y0));
        if (y0.v != 0) CHECK(f.rev_y(6)(x0, y0) == F->mul(F->pow(y0, 6), f(x0, F->inv(y0))));
        if (x0.v != 0) CHECK(f.rev_x(4)(x0, y0) == F->mul(F->pow(x0, 4), f(F->inv(x0), y0)));
        CHECK(f.eval_x(x0)(y0) == f.eval_y(y0)(x0));
        CHECK(f.swapped().swapped() == f);
        CHECK(f.swapped()(y0, x0) == f(x0, y0));
        CHECK(f.shifted(2, 1) == f * BiPoly::monomial(F, F->one(), 2, 1));
    }
    CHECK_THROWS_AS(BiPoly::y(F).rev_y(0), std::invalid_argument);
}

TEST_CASE("ideal basis degrees") {
    auto F = FieldCtx::prime(101);
    BiPoly a = BiPoly::from_ints(F, {{1, 2, 1}, {1, 0, 1}});
    BiPoly b = BiPoly::from_ints(F, {{1, 1, 2}, {1, 1, 0}});
    IdealBasis I(a, b);
    CHECK(I.da() == 2);
    CHECK(I.db() == 1);
    CHECK(I.ea() == 1);
    CHECK(I.eb() == 2);
    CHECK(I.d() == 2);
    CHECK(I.e() == 2);
    CHECK(I.nx() == 3);
    CHECK(I.ny() == 3);
    CHECK_THROWS_AS(IdealBasis(a, BiPoly(F)), std::invalid_argument);
}

TEST_CASE("field embedding") {
    auto F = FieldCtx::prime(7);
    Rng rng(4);
    auto E = build_extension(7, 49, rng);
    BiPoly f = BiPoly::from_ints(F, {{3, 1, 1}, {5, 0, 0}});
    BiPoly g = f.in_field(E);
    CHECK(g.field() == E);
    CHECK(g.coeff(1, 1) == Fq{3});
    CHECK_THROWS_AS(f.in_field(FieldCtx::prime(11)), std::invalid_argument);
}
