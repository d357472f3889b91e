#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "sylvres/errors.hpp"
#include "sylvres/normalform.hpp"

using namespace sylvres;
using namespace sylvres::testing;

namespace {

IdealBasis example2(const FieldPtr& F) {
    return IdealBasis(BiPoly::from_ints(F, {{1, 2, 1}, {1, 0, 1}}), BiPoly::from_ints(F, {{1, 1, 2}, {1, 1, 0}}));
}

// Re-dividing a remainder gives a zero quotient and the same remainder.
bool divides_trivially(const MatrixDivider& D, const std::vector<UPoly>& r) {
    auto again = D.divrem(r);
    for (const auto& w : again.w)
        if (!w.is_zero()) return false;
    return again.rem == r;
}

}  // namespace

TEST_CASE("second example: division of (0, 0, x) by S_y") {
    auto F = FieldCtx::prime(101);
    IdealBasis I = example2(F);
    std::vector<UPoly> v{UPoly(F), UPoly(F), UPoly::x(F)};
    auto div = matrix_divrem(build_Sy(I), v);
    CHECK(div.w == std::vector<UPoly>{UPoly(F), UPoly(F), up(F, {1})});
    CHECK(div.rem == std::vector<UPoly>{up(F, {0, -1}), UPoly(F), UPoly(F)});
}

TEST_CASE("division with equal column degrees and a low degree vector") {
    auto F = FieldCtx::prime(65537);
    Rng rng(1);
    IdealBasis I = random_reduced_basis(F, 3, 2, 3, 2, rng);
    SylvMat S = build_Sy(I);
    auto v = random_vector(F, S.n(), 2, rng);
    auto div = matrix_divrem(S, v);
    for (const auto& w : div.w) CHECK(w.is_zero());
    CHECK(div.rem == v);
}

TEST_CASE("worked normal form") {
    auto F = FieldCtx::prime(101);
    IdealBasis I = example2(F);
    BiPoly f = BiPoly::from_ints(F, {{1, 0, 3}, {1, 3, 2}, {1, 0, 0}});
    BiPoly fprime = BiPoly::from_ints(F, {{-1, 3, 0}, {1, 2, 1}, {1, 0, 0}});
    CHECK(reduce_ydeg(I, f) == fprime);
    auto wit = reduce_ydeg_witness(I, f);
    CHECK(f - wit.result == wit.u * I.a() + wit.t * I.b());
    CHECK(normal_form(I, f) == BiPoly::from_ints(F, {{-1, 1, 2}, {-1, 0, 1}, {1, 0, 0}}));
    CHECK(normal_form(I, BiPoly::x(F)) == BiPoly::from_ints(F, {{-1, 1, 2}}));
    CHECK(normal_form(I, I.a()).is_zero());
    CHECK(normal_form(I, BiPoly(F)).is_zero());
    BiPoly c = BiPoly::from_ints(F, {{4, 0, 0}});
    CHECK(reduce_ydeg(I, c) == c);
    auto full = normal_form_witness(I, f);
    CHECK(f - full.result == full.u * I.a() + full.t * I.b());
}

TEST_CASE("membership witness for f = a") {
    auto F = FieldCtx::prime(101);
    IdealBasis I = example2(F);
    auto wit = reduce_ydeg_witness(I, I.a().shifted(2, 3));
    CHECK(I.a().shifted(2, 3) - wit.result == wit.u * I.a() + wit.t * I.b());
}

TEST_CASE("non-reduced inputs are rejected") {
    auto F = FieldCtx::prime(2);
    IdealBasis I(BiPoly::from_ints(F, {{1, 1, 1}, {1, 0, 1}, {1, 2, 0}}),
                 BiPoly::from_ints(F, {{1, 1, 2}, {1, 0, 2}, {1, 0, 1}}));
    CHECK_THROWS_AS(QuotientAlgebra{I}, NotColumnReduced);
    CHECK_THROWS_AS(normal_form(I, BiPoly::x(F)), NotColumnReduced);
    CHECK_THROWS_AS(MatrixDivider{build_Sx(I)}, NotColumnReduced);
}

TEST_CASE("normal form properties on random reduced bases") {
    Rng rng(2);
    auto F = FieldCtx::prime(65537);
    for (int it = 0; it < 40; ++it) {
        int da = 1 + static_cast<int>(rng() % 4), db = static_cast<int>(rng() % 4);
        int ea = 1 + static_cast<int>(rng() % 4), eb = static_cast<int>(rng() % 4);
        IdealBasis I = random_reduced_basis(F, da, ea, db, eb, rng);
        QuotientAlgebra A(I);
        BiPoly f = random_bipoly(F, 2 * I.d() + 1, 2 * I.ny() + 1, rng);
        BiPoly g = random_bipoly(F, 3, 3, rng);
        Fq lam = sample_uniform(*F, rng);
        BiPoly pf = A.reduce(f);
        CHECK(pf.deg_x() < I.d());
        CHECK(pf.deg_y() < I.ny());
        CHECK(A.reduce(pf) == pf);
        CHECK(A.reduce(f.scaled(lam) + g) == A.reduce(f).scaled(lam) + A.reduce(g));
        BiPoly u = random_bipoly(F, 3, 3, rng), t = random_bipoly(F, 3, 3, rng);
        CHECK(A.reduce(f + u * I.a() + t * I.b()) == pf);
        CHECK(A.reduce(u * I.a() + t * I.b()).is_zero());
        auto wit = A.reduce_witness(f);
        CHECK(wit.result == pf);
        CHECK(f - pf == wit.u * I.a() + wit.t * I.b());
        CHECK(A.mul(f, g) == A.mul(g, f));
        CHECK(A.mul(f, BiPoly::constant(F, F->one())) == pf);
        BiPoly xk = A.reduce(BiPoly::constant(F, F->one()));
        for (int k = 0; k <= 20; ++k) {
            BiPoly next = A.mul(BiPoly::x(F), xk);
            CHECK(next == A.reduce(BiPoly::monomial(F, F->one(), k + 1, 0)));
            xk = next;
        }
        CHECK(A.power(BiPoly::x(F), 21) == xk);

        for (auto S : {build_Sy(I), build_Sx(I)}) {
            MatrixDivider D(S);
            auto v = random_vector(F, S.n(), static_cast<int>(rng() % 9), rng);
            auto div = D.divrem(v);
            auto back = matvec(S, div.w);
            for (int i = 0; i < S.n(); ++i) CHECK(back[i] + div.rem[i] == v[i]);
            for (const auto& r : div.rem) CHECK(r.degree() < S.max_column_degree());
            CHECK(divides_trivially(D, div.rem));
        }
    }
}

TEST_CASE("lift strategies agree") {
    Rng rng(3);
    auto F = FieldCtx::prime(65537);
    for (int it = 0; it < 10; ++it) {
        IdealBasis I = random_reduced_basis(F, 3, 3, 2, 3, rng);
        QuotientAlgebra fast(I), slow(I, LiftStrategy::coefficientwise);
        BiPoly f = random_bipoly(F, 9, 9, rng);
        CHECK(fast.reduce(f) == slow.reduce(f));
    }
}

TEST_CASE("duality of the transposed normal form") {
    Rng rng(4);
    auto F = FieldCtx::prime(65537);
    for (int it = 0; it < 40; ++it) {
        int da = 1 + static_cast<int>(rng() % 3), db = static_cast<int>(rng() % 3);
        int ea = 1 + static_cast<int>(rng() % 3), eb = static_cast<int>(rng() % 3);
        IdealBasis I = random_reduced_basis(F, da, ea, db, eb, rng);
        QuotientAlgebra A(I);
        LinearForm ell = LinearForm::random(I, rng);
        int delta = static_cast<int>(rng() % 7), eta = static_cast<int>(rng() % 7);
        auto r = A.transposed(ell, delta, eta);
        REQUIRE(r.size() == static_cast<std::size_t>((delta + 1) * (eta + 1)));
        BiPoly f = random_bipoly(F, delta, eta, rng);
        Fq lhs{0};
        for (int j = 0; j <= eta; ++j)
            for (int i = 0; i <= delta; ++i) lhs = F->add(lhs, F->mul(r[j * (delta + 1) + i], f.coeff(i, j)));
        CHECK(lhs == ell(A.reduce(f)));
        for (int j = 0; j <= eta; ++j)
            for (int i = 0; i <= delta; ++i)
                CHECK(r[j * (delta + 1) + i] == ell(A.reduce(BiPoly::monomial(F, F->one(), i, j))));
    }
}

TEST_CASE("transposed normal form on the second example") {
    auto F = FieldCtx::prime(101);
    IdealBasis I = example2(F);
    LinearForm ell = LinearForm::coordinate(I, 0, 0);
    auto r = transposed_normal_form(I, ell, 1, 0);
    CHECK(r[1] == Fq{0});
    CHECK(r[0] == ell(normal_form(I, BiPoly::constant(F, F->one()))));
    Rng rng(5);
    auto single = transposed_normal_form(I, LinearForm::random(I, rng), 0, 0);
    CHECK(single.size() == 1);
}
