#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "support.hpp"
#include "sylvres/condition.hpp"
#include "sylvres/oracle.hpp"

using namespace sylvres;
using namespace sylvres::testing;

namespace {

IdealBasis random_basis(const FieldPtr& F, Rng& rng) {
    for (;;) {
        int da = 1 + rng() % 3, ea = 1 + rng() % 3, db = 1 + rng() % 3, eb = 1 + rng() % 3;
        IdealBasis I(random_bipoly_exact(F, da, ea, rng), random_bipoly_exact(F, db, eb, rng));
        if (!dense_resultant(I).is_zero()) return I;
    }
}

UPoly descend(const FieldPtr& F, const UPoly& f) {
    std::vector<Fq> c(f.coeffs().begin(), f.coeffs().end());
    for (Fq v : c) REQUIRE(f.ctx().in_prime_subfield(v));
    return UPoly(F, std::move(c));
}

}  // namespace

TEST_CASE("first example: conditioning for S_x keeps the last invariant factor") {
    Rng rng(1);
    auto F2 = FieldCtx::prime(2);
    auto E = build_extension(2, 64, rng);
    REQUIRE(E->cardinality() == 64);
    IdealBasis I = example1(F2).in_field(E);
    CHECK_FALSE(is_column_reduced(build_Sx(I)));
    int reduced = 0;
    for (int attempt = 0; attempt < 16; ++attempt) {
        IdealBasis J = condition_for_Sx(I, sample_uniform(*E, rng));
        if (!is_column_reduced(build_Sx(J))) continue;
        ++reduced;
        CHECK(descend(F2, dense_last_invariant(J)) == example1_resultant(F2));
    }
    CHECK(reduced > 0);
}

TEST_CASE("zero shift gives a reduced S_x when Res_x does not vanish at 0") {
    auto F = FieldCtx::prime(65537);
    Rng rng(2);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        IdealBasis I = random_basis(F, rng);
        UPoly rx = dense_resultant(IdealBasis(I.a().swapped(), I.b().swapped()));
        if (rx.is_zero() || rx.coeff(0).v == 0) continue;
        ++checked;
        IdealBasis J = condition_for_Sx(I, Fq{0});
        CHECK(dense_column_reduced(*F, dense_form(build_Sx(J))));
        CHECK(is_column_reduced(build_Sx(J)));
    }
    CHECK(checked > 20);
}

TEST_CASE("conditioning for S_x preserves the Smith form of S_y") {
    auto F = FieldCtx::prime(65537);
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        IdealBasis I = random_basis(F, rng);
        IdealBasis J = condition_for_Sx(I, sample_uniform(*F, rng));
        CHECK(same_degrees(I, J));
        CHECK(dense_smith(dense_form(build_Sy(J))) == dense_smith(dense_form(build_Sy(I))));
    }
}

TEST_CASE("zero shifts: reversal-only path recovers the last factor") {
    auto F = FieldCtx::prime(65537);
    Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        IdealBasis I = random_reduced_basis(F, 1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3, rng);
        auto [J, rec] = condition_for_both(I, Fq{0}, Fq{0});
        if (!same_degrees(I, J)) continue;
        CHECK(recover_last_invariant(dense_last_invariant(J), rec) == dense_last_invariant(I));
    }
}

TEST_CASE("third example: both matrices reduced after conditioning") {
    Rng rng(5);
    auto E = build_extension(7, 2401, rng);
    IdealBasis I = example3(FieldCtx::prime(7)).in_field(E);
    int reduced = 0;
    for (int attempt = 0; attempt < 16; ++attempt) {
        auto [J, rec] = condition_for_both(I, sample_uniform(*E, rng), sample_uniform(*E, rng));
        CHECK(same_degrees(I, J));
        if (is_column_reduced(build_Sx(J)) && is_column_reduced(build_Sy(J))) ++reduced;
    }
    CHECK(reduced >= 1);
}

TEST_CASE("recovery without the x stage only normalizes") {
    auto F = FieldCtx::prime(101);
    ConditioningRecord rec;
    rec.y_stage = true;
    CHECK(recover_last_invariant(up(F, {4, 6, 2}), rec) == up(F, {2, 3, 1}));
    CHECK_THROWS_AS(recover_last_invariant(UPoly(F), rec), std::invalid_argument);
}

TEST_CASE("recovery inverts the x stage") {
    auto F = FieldCtx::prime(101);
    ConditioningRecord rec;
    rec.x_stage = true;
    rec.beta = F->from_int(3);
    // sigma = (x - 5)(x - 2); after x -> 1/x + 3 and reversal: (1 - 2x)(1 + x) x^2
    UPoly conditioned = up(F, {1, -2}) * up(F, {1, 1}) * up(F, {0, 0, 7});
    CHECK(recover_last_invariant(conditioned, rec) == up(F, {-5, 1}) * up(F, {-2, 1}));
}

TEST_CASE("conditioning roundtrip on random bases") {
    auto F = FieldCtx::prime(65537);
    Rng rng(6);
    int done = 0;
    for (int trial = 0; trial < 40; ++trial) {
        IdealBasis I = random_basis(F, rng);
        auto [J, rec] = condition_for_both(I, sample_uniform(*F, rng), sample_uniform(*F, rng));
        if (!same_degrees(I, J)) continue;
        ++done;
        UPoly s = recover_last_invariant(dense_last_invariant(J), rec);
        CHECK(s == dense_last_invariant(I));
        CHECK(s.lead() == F->one());
    }
    CHECK(done > 30);
}

TEST_CASE("first example end to end over F_128") {
    Rng rng(8);
    auto F2 = FieldCtx::prime(2);
    auto E = build_extension(2, 128, rng);
    IdealBasis I = example1(F2).in_field(E);
    int done = 0;
    for (int attempt = 0; attempt < 16; ++attempt) {
        auto [J, rec] = condition_for_both(I, sample_uniform(*E, rng), sample_uniform(*E, rng));
        if (!same_degrees(I, J) || !is_column_reduced(build_Sx(J)) || !is_column_reduced(build_Sy(J))) continue;
        ++done;
        CHECK(descend(F2, recover_last_invariant(dense_last_invariant(J), rec)) == example1_resultant(F2));
    }
    CHECK(done > 0);
}
