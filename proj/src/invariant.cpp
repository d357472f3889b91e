#include "sylvres/invariant.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "sylvres/errors.hpp"
#include "sylvres/linalg.hpp"

namespace sylvres {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point t0) {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
}

// Coefficients of f in the prime subfield, as a polynomial over F.
bool descend(const UPoly& f, const FieldPtr& F, UPoly& out) {
    std::vector<Fq> c;
    c.reserve(f.size());
    for (Fq v : f.coeffs()) {
        if (!f.ctx().in_prime_subfield(v)) return false;
        c.push_back(v);
    }
    out = UPoly(F, std::move(c));
    return true;
}

// Determinant of S_y(x0) built from the coefficients of a and b.
Fq sylvester_det_at(const IdealBasis& I, Fq x0) {
    return determinant(*I.field(), evaluate(dense_form(build_Sy(I)), x0));
}

}  // namespace

std::string to_string(ResultStatus s) {
    switch (s) {
        case ResultStatus::certified_resultant: return "certified-resultant";
        case ResultStatus::invariant_factor_probable: return "invariant-factor-probable";
        case ResultStatus::divisor_or_failure: return "divisor-or-failure";
        case ResultStatus::failure: return "failure";
    }
    return "failure";
}

std::vector<Fq> projection_sequence(const QuotientAlgebra& A, const LinearForm& l, int N, ProjectionStrategy,
                                    StartVector start) {
    std::vector<Fq> seq;
    if (N <= 0) return seq;
    seq.reserve(static_cast<std::size_t>(N));
    BiPoly f = start_vector(A, start);
    for (int i = 0; i < N; ++i) {
        seq.push_back(l(f));
        if (i + 1 < N) f = A.mul_x(f);
    }
    return seq;
}

UPoly min_poly_mult_x(const QuotientAlgebra& A, Rng& rng, int trials, StartVector start) {
    const FieldPtr& F = A.field();
    const int N = 4 * A.basis().d() * A.basis().e();
    UPoly mu = UPoly::constant(F, F->one());
    for (int t = 0; t < std::max(trials, 1); ++t) {
        auto seq = projection_sequence(A, LinearForm::random(A.basis(), rng), N, ProjectionStrategy::baseline, start);
        mu = lcm(mu, berlekamp_massey(F, seq));
    }
    return mu;
}

FieldPtr working_field(const IdealBasis& I, const InvariantOptions& opts, Rng& rng) {
    const FieldPtr& F = I.field();
    const u64 p = F->characteristic();
    if (opts.ext_degree == 1) return F;
    if (opts.ext_degree > 1) {
        if (!F->is_prime_field()) throw std::invalid_argument("extension degree requires a prime base field");
        u64 q = 1;
        for (unsigned k = 1; k < opts.ext_degree; ++k) {
            if (q > (u64{1} << 62) / p) throw std::invalid_argument("requested extension exceeds 2^62 elements");
            q *= p;
        }
        return build_extension(p, q + 1, rng);
    }
    const double threshold = std::pow(12.0 * I.d() * I.e(), 1.0 + opts.epsilon);
    if (static_cast<double>(F->cardinality()) >= threshold || !F->is_prime_field()) return F;
    return build_extension(p, static_cast<u64>(std::ceil(threshold)), rng);
}

InvariantReport last_invariant_factor(const BiPoly& a, const BiPoly& b, Rng& rng, const InvariantOptions& opts) {
    const auto t_start = Clock::now();
    IdealBasis I(a, b);
    const FieldPtr& F = I.field();
    InvariantReport rep;
    rep.seed = opts.seed;
    rep.sigma = UPoly(F);
    rep.working_field = working_field(I, opts, rng);
    const FieldPtr& E = rep.working_field;
    const IdealBasis IE = same_field(E, F) ? I : I.in_field(E);

    std::uint64_t t_cond = 0, t_min = 0;
    for (int attempt = 1; attempt <= opts.max_attempts; ++attempt) {
        rep.attempts = attempt;
        auto t0 = Clock::now();
        const Fq alpha = sample_uniform(*E, rng), beta = sample_uniform(*E, rng);
        auto [J, rec] = condition_for_both(IE, alpha, beta);
        const bool ok = same_degrees(IE, J) && is_column_reduced(build_Sx(J)) && is_column_reduced(build_Sy(J));
        t_cond += elapsed_ns(t0);
        if (!ok) continue;

        t0 = Clock::now();
        QuotientAlgebra A(J, opts.strategy);
        UPoly mu = min_poly_mult_x(A, rng, opts.trials, opts.start);
        t_min += elapsed_ns(t0);
        rep.trials += std::max(opts.trials, 1);

        UPoly sigma = recover_last_invariant(mu, rec);
        if (!same_field(E, F) && !descend(sigma, F, sigma)) continue;
        rep.sigma = std::move(sigma);
        rep.record = rec;
        rep.status = ResultStatus::invariant_factor_probable;
        break;
    }
    rep.timings_ns = {{"condition", t_cond}, {"minpoly", t_min}, {"total", elapsed_ns(t_start)}};
    return rep;
}

InvariantReport elimination_generator(const BiPoly& a, const BiPoly& b, Rng& rng, const InvariantOptions& opts) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("generators must be nonzero");
    if (gcd(a.lc_y(), b.lc_y()).degree() != 0)
        throw RootsAtInfinity("roots at infinity: the y-leading coefficients of a and b share a factor");
    return last_invariant_factor(a, b, rng, opts);
}

InvariantReport resultant_certified(const BiPoly& a, const BiPoly& b, Rng& rng, const InvariantOptions& opts) {
    IdealBasis I(a, b);
    const SylvMat Sy = build_Sy(I);
    if (!is_column_reduced(Sy)) throw NotColumnReduced("S_y is not column reduced; no degree certificate");
    InvariantReport rep = last_invariant_factor(a, b, rng, opts);
    if (rep.status == ResultStatus::failure) return rep;

    int degree_sum = 0;
    for (int c : Sy.column_degrees()) degree_sum += c;
    if (rep.sigma.degree() != degree_sum) {
        rep.status = ResultStatus::divisor_or_failure;
        return rep;
    }

    const auto t0 = Clock::now();
    const FieldPtr& F = I.field();
    const FieldPtr& E = rep.working_field;
    const IdealBasis IE = same_field(E, F) ? I : I.in_field(E);
    const UPoly sigmaE = same_field(E, F) ? rep.sigma : UPoly(E, std::vector<Fq>(rep.sigma.coeffs().begin(), rep.sigma.coeffs().end()));
    const Fq lead = determinant(*F, leading_matrix(Sy));
    bool found = false;
    Fq c{0};
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
        const Fq x0 = sample_uniform(*E, rng);
        const Fq s = sigmaE(x0);
        if (E->is_zero(s)) continue;
        c = E->div(sylvester_det_at(IE, x0), s);
        found = true;
    }
    rep.timings_ns.insert(rep.timings_ns.end() - 1, {"certify", elapsed_ns(t0)});
    if (!found || !E->in_prime_subfield(c) || c != lead) {
        rep.status = ResultStatus::divisor_or_failure;
        return rep;
    }
    rep.scale = c;
    rep.resultant = rep.sigma.scaled(c);
    rep.status = ResultStatus::certified_resultant;
    return rep;
}

}  // namespace sylvres
