#pragma once

// Randomized drivers: power projections, minimal polynomial of x, last
// invariant factor of S_y, elimination generator, certified resultant.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sylvres/condition.hpp"
#include "sylvres/normalform.hpp"

namespace sylvres {

enum class ResultStatus {
    certified_resultant,
    invariant_factor_probable,
    divisor_or_failure,
    failure,
};

std::string to_string(ResultStatus s);

enum class ProjectionStrategy { baseline };

struct InvariantOptions {
    int trials = 3;
    double epsilon = 0.1;
    int max_attempts = 16;
    /// Degree of the working field over F_p; 0 picks it from the size threshold.
    unsigned ext_degree = 0;
    StartVector start = StartVector::one;
    LiftStrategy strategy = LiftStrategy::divide_and_conquer;
    /// Reported only.
    std::uint64_t seed = 0;
};

struct InvariantReport {
    UPoly sigma;
    ResultStatus status = ResultStatus::failure;
    ConditioningRecord record;
    int trials = 0;
    int attempts = 0;
    std::uint64_t seed = 0;
    /// Working field the computation ran over.
    FieldPtr working_field;
    /// Res_y(a, b) = scale * sigma when certified.
    Fq scale{0};
    UPoly resultant;
    std::vector<std::pair<std::string, std::uint64_t>> timings_ns;
};

/// l(phi(x^i)) for i < N, iterating multiplication by x from phi(1).
std::vector<Fq> projection_sequence(const QuotientAlgebra& A, const LinearForm& l, int N,
                                    ProjectionStrategy strategy = ProjectionStrategy::baseline,
                                    StartVector start = StartVector::one);

/// lcm over the trials of the minimal generator of 4de projections of a random form.
UPoly min_poly_mult_x(const QuotientAlgebra& A, Rng& rng, int trials = 3, StartVector start = StartVector::one);

/// Field used for a basis over F with q < (12de)^(1+epsilon) lifted to an extension.
FieldPtr working_field(const IdealBasis& I, const InvariantOptions& opts, Rng& rng);

InvariantReport last_invariant_factor(const BiPoly& a, const BiPoly& b, Rng& rng, const InvariantOptions& opts = {});
/// Throws RootsAtInfinity if the y-leading coefficients of a and b are not coprime.
InvariantReport elimination_generator(const BiPoly& a, const BiPoly& b, Rng& rng, const InvariantOptions& opts = {});
/// Throws NotColumnReduced if S_y is not column reduced.
InvariantReport resultant_certified(const BiPoly& a, const BiPoly& b, Rng& rng, const InvariantOptions& opts = {});

}  // namespace sylvres
