#include "sylvres/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "sylvres/errors.hpp"
#include "sylvres/invariant.hpp"
#include "sylvres/kucompose.hpp"
#include "sylvres/oracle.hpp"

namespace sylvres::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Options {
    u64 modulus = 0;
    unsigned ext_degree = 0;
    u64 seed = 0;
    std::string a, b, f;
    std::string algo = "baseline";
    int d_eps = 0;
    int trials = 3;
    bool verify = false;
    bool json = false;
    std::vector<int> sizes;
    int reps = 1;
    std::vector<std::string> ops{"normal_form"};
};

// Reported for failed oracle comparisons.
class OracleMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t elapsed_ns(Clock::time_point t0) {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
}

template <class T>
bool parse_number(const std::string& s, T& v) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && p == s.data() + s.size();
}

json terms_json(const BiPoly& f) {
    json t = json::array();
    for (const auto& term : f.terms()) t.push_back({term.c.v, term.i, term.j});
    return t;
}

json terms_json(const UPoly& f) {
    json t = json::array();
    for (std::size_t i = f.size(); i-- > 0;)
        if (f.coeff(i).v != 0) t.push_back({f.coeff(i).v, i});
    return t;
}

json timings_json(const std::vector<std::pair<std::string, std::uint64_t>>& t) {
    json j = json::object();
    for (const auto& [k, v] : t) j[k] = v;
    return j;
}

int degree_or_minus_one(int d) { return d < 0 ? -1 : d; }

FieldPtr base_field(const Options& o) {
    try {
        return FieldCtx::prime(o.modulus);
    } catch (const std::invalid_argument&) {
        throw UsageError("modulus is not a prime: " + std::to_string(o.modulus));
    }
}

IdealBasis read_basis(const FieldPtr& F, const Options& o) {
    BiPoly a = read_terms_file(F, o.a), b = read_terms_file(F, o.b);
    if (a.is_zero() || b.is_zero()) throw UsageError("generators must be nonzero");
    return IdealBasis(std::move(a), std::move(b));
}

InvariantOptions invariant_options(const Options& o) {
    InvariantOptions opts;
    opts.trials = o.trials;
    opts.ext_degree = o.ext_degree;
    opts.seed = o.seed;
    return opts;
}

void require_oracle_size(const IdealBasis& I) {
    if (I.ny() > kOracleMaxDim) throw std::runtime_error("oracle unavailable above dimension 64");
}

int cmd_nf(const Options& o, std::ostream& out) {
    const FieldPtr F = base_field(o);
    const IdealBasis I = read_basis(F, o);
    const BiPoly f = read_terms_file(F, o.f);
    const auto t0 = Clock::now();
    QuotientAlgebra A(I);
    BiPoly r;
    if (o.algo == "ku") {
        if (f.deg_y() > 0) throw UsageError("--algo ku needs f in x only");
        UPoly fx = f.is_zero() ? UPoly(F) : f.coeff_y(0);
        r = compose_rem(A, fx, KUParams::make(std::max(fx.degree() + 1, 1), o.d_eps));
    } else {
        r = A.reduce(f);
    }
    const std::uint64_t t = elapsed_ns(t0);
    std::string oracle;
    if (o.verify) {
        Reduction w = A.reduce_witness(f);
        const bool ok = w.result == r && f - r == w.u * I.a() + w.t * I.b() &&
                        (r.is_zero() || (r.deg_x() < I.d() && r.deg_y() < I.ny()));
        if (!ok) throw OracleMismatch("normal form does not match the division witness");
        oracle = "agree";
    }
    if (o.json) {
        json j;
        j["status"] = "ok";
        j["sigma_terms"] = terms_json(r);
        j["degree"] = {degree_or_minus_one(r.deg_x()), degree_or_minus_one(r.deg_y())};
        j["trials"] = 0;
        j["seed"] = o.seed;
        j["timings_ns"] = {{"total", t}};
        if (!oracle.empty()) j["oracle"] = oracle;
        out << j.dump() << '\n';
    } else {
        out << format_terms(r);
    }
    return kOk;
}

enum class Driver { invfact, elimgen, resultant };

int cmd_invariant(const Options& o, Driver which, std::ostream& out, std::ostream& err) {
    const FieldPtr F = base_field(o);
    const IdealBasis I = read_basis(F, o);
    Rng rng(o.seed);
    const InvariantOptions opts = invariant_options(o);
    InvariantReport rep;
    switch (which) {
        case Driver::invfact: rep = last_invariant_factor(I.a(), I.b(), rng, opts); break;
        case Driver::elimgen: rep = elimination_generator(I.a(), I.b(), rng, opts); break;
        case Driver::resultant: rep = resultant_certified(I.a(), I.b(), rng, opts); break;
    }
    const bool failed = rep.status == ResultStatus::failure;
    const bool certified = rep.status == ResultStatus::certified_resultant;
    const UPoly& shown = certified ? rep.resultant : rep.sigma;

    std::string oracle;
    if (o.verify && !failed) {
        require_oracle_size(I);
        bool ok;
        if (certified) {
            ok = rep.resultant == dense_resultant(I);
        } else {
            const UPoly last = dense_last_invariant(I);
            ok = rep.status == ResultStatus::divisor_or_failure ? rem(last, rep.sigma).is_zero() : rep.sigma == last;
        }
        if (!ok) throw OracleMismatch("result differs from the dense oracle");
        oracle = "agree";
    }

    if (o.json) {
        json j;
        j["status"] = to_string(rep.status);
        j["sigma_terms"] = terms_json(shown);
        j["degree"] = degree_or_minus_one(shown.degree());
        j["trials"] = rep.trials;
        j["seed"] = o.seed;
        j["timings_ns"] = timings_json(rep.timings_ns);
        if (!oracle.empty()) j["oracle"] = oracle;
        out << j.dump() << '\n';
    } else if (!failed) {
        out << "# " << to_string(rep.status) << '\n' << format_terms(shown);
    }
    if (failed) {
        err << "error: no conditioning with column reduced matrices found in " << rep.attempts << " attempts\n";
        return kFailure;
    }
    return kOk;
}

int cmd_smith(const Options& o, std::ostream& out) {
    const FieldPtr F = base_field(o);
    const IdealBasis I = read_basis(F, o);
    require_oracle_size(I);
    auto s = dense_smith(dense_form(build_Sy(I)));
    if (o.json) {
        json j;
        j["status"] = "ok";
        json factors = json::array();
        for (const auto& f : s) factors.push_back(terms_json(f));
        j["sigma_terms"] = terms_json(s.back());
        j["degree"] = degree_or_minus_one(s.back().degree());
        j["trials"] = 0;
        j["seed"] = o.seed;
        j["timings_ns"] = json::object();
        j["factors"] = factors;
        out << j.dump() << '\n';
        return kOk;
    }
    for (std::size_t k = 0; k < s.size(); ++k) out << "# s_" << k + 1 << '\n' << format_terms(s[k]);
    return kOk;
}

BiPoly random_dense(const FieldPtr& F, int dx, int dy, Rng& rng) {
    std::vector<Fq> g(static_cast<std::size_t>(dx + 1) * (dy + 1));
    for (;;) {
        for (auto& c : g) c = sample_uniform(*F, rng);
        BiPoly f(F, dx + 1, dy + 1, g);
        if (f.deg_x() == dx && f.deg_y() == dy) return f;
    }
}

int cmd_bench(const Options& o, std::ostream& out) {
    const u64 q = o.modulus ? o.modulus : 65537;
    Options base = o;
    base.modulus = q;
    const FieldPtr F = base_field(base);
    for (const auto& op : o.ops)
        if (op != "normal_form" && op != "invfact") throw UsageError("unknown bench operation: " + op);
    if (o.algo == "ku")
        for (const auto& op : o.ops)
            if (op != "normal_form") throw UsageError("--algo ku only supports the normal_form operation");

    out << "d,e,q,algo,seed,op,wall_ns,status\n";
    u64 index = 0;
    for (int d : o.sizes) {
        if (d < 1) throw UsageError("bench sizes must be positive");
        const int e = d;
        for (int r = 0; r < o.reps; ++r) {
            const u64 seed = derive_seed(o.seed, index++);
            Rng rng(seed);
            std::optional<IdealBasis> I;
            for (int attempt = 0; attempt < 16 && !I; ++attempt) {
                IdealBasis J(random_dense(F, d, e, rng), random_dense(F, d, e, rng));
                if (is_column_reduced(build_Sx(J)) && is_column_reduced(build_Sy(J))) I = std::move(J);
            }
            for (const auto& op : o.ops) {
                std::string status = "ok";
                std::uint64_t wall = 0;
                if (!I) {
                    status = "failure";
                } else if (op == "normal_form") {
                    QuotientAlgebra A(*I);
                    if (o.algo == "ku") {
                        const int delta = 4 * d * e;
                        UPoly f(F);
                        {
                            std::vector<Fq> c(static_cast<std::size_t>(delta));
                            for (auto& x : c) x = sample_uniform(*F, rng);
                            f = UPoly(F, std::move(c));
                        }
                        const auto t0 = Clock::now();
                        try {
                            compose_rem(A, f, KUParams::make(delta, o.d_eps));
                        } catch (const FieldTooSmall&) {
                            status = "field-too-small";
                        }
                        wall = elapsed_ns(t0);
                    } else {
                        BiPoly f = random_dense(F, 2 * d - 1, 2 * e - 1, rng);
                        const auto t0 = Clock::now();
                        A.reduce(f);
                        wall = elapsed_ns(t0);
                    }
                } else {
                    InvariantOptions opts = invariant_options(o);
                    const auto t0 = Clock::now();
                    auto rep = last_invariant_factor(I->a(), I->b(), rng, opts);
                    wall = elapsed_ns(t0);
                    status = to_string(rep.status);
                }
                out << d << ',' << e << ',' << q << ',' << o.algo << ',' << seed << ',' << op << ',' << wall << ','
                    << status << '\n';
            }
        }
    }
    return kOk;
}

}  // namespace

BiPoly parse_terms(const FieldPtr& F, std::istream& in) {
    std::vector<Term> terms;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ss(line);
        std::vector<std::string> tok;
        for (std::string t; ss >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() > 3 || tok.size() < 2)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'c i j' or 'c i'");
        std::int64_t c;
        int i, j = 0;
        if (!parse_number(tok[0], c)) throw ParseError("line " + std::to_string(lineno) + ": bad coefficient");
        if (!parse_number(tok[1], i) || i < 0 || (tok.size() == 3 && (!parse_number(tok[2], j) || j < 0)))
            throw ParseError("line " + std::to_string(lineno) + ": bad exponent");
        terms.push_back({F->from_int(c), i, j});
    }
    if (in.bad()) throw ParseError("read error");
    return BiPoly::from_terms(F, terms);
}

BiPoly read_terms_file(const FieldPtr& F, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return parse_terms(F, in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string format_terms(const BiPoly& f) {
    std::string s;
    for (const auto& t : f.terms())
        s += std::to_string(t.c.v) + ' ' + std::to_string(t.i) + ' ' + std::to_string(t.j) + '\n';
    return s;
}

std::string format_terms(const UPoly& f) {
    std::string s;
    for (std::size_t i = f.size(); i-- > 0;)
        if (f.coeff(i).v != 0) s += std::to_string(f.coeff(i).v) + ' ' + std::to_string(i) + '\n';
    return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal forms, invariant factors and resultants of bivariate systems over finite fields",
                 "sylvres"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool needs_f) {
        sub->add_option("-p,--modulus", o.modulus, "prime field characteristic");
        sub->add_option("--ext-degree", o.ext_degree, "extension degree of the working field (0 = auto)");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--a", o.a, "term file of a");
        sub->add_option("--b", o.b, "term file of b");
        if (needs_f) sub->add_option("--f", o.f, "term file of f")->required();
        sub->add_option("--algo", o.algo, "baseline or ku")->check(CLI::IsMember({"baseline", "ku"}));
        sub->add_option("--d-eps", o.d_eps, "radix of the inverse Kronecker substitution (0 = auto)");
        sub->add_option("--trials", o.trials, "projection trials")->check(CLI::PositiveNumber);
        sub->add_flag("--verify-oracle", o.verify, "compare with the dense oracles");
        sub->add_flag("--json", o.json, "JSON report");
    };
    auto* nf = app.add_subcommand("nf", "normal form of f modulo <a, b>");
    common(nf, true);
    auto* inv = app.add_subcommand("invfact", "last invariant factor of S_y");
    common(inv, false);
    auto* elim = app.add_subcommand("elimgen", "generator of <a, b> intersected with F_p[x]");
    common(elim, false);
    auto* res = app.add_subcommand("resultant", "certified Res_y(a, b)");
    common(res, false);
    auto* smith = app.add_subcommand("smith-oracle", "dense Smith form of S_y");
    common(smith, false);
    auto* bench = app.add_subcommand("bench", "timing harness, CSV on stdout");
    common(bench, false);
    bench->add_option("--sizes", o.sizes, "values of d = e")->delimiter(',');
    bench->add_option("--reps", o.reps, "seeds per size")->check(CLI::NonNegativeNumber);
    bench->add_option("--ops", o.ops, "normal_form, invfact")->delimiter(',');

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    try {
        if (o.algo == "ku" && sub != nf && sub != bench) throw UsageError("--algo ku applies to nf and bench only");
        if (sub != bench) {
            if (o.modulus == 0) throw UsageError("--modulus is required");
            if (o.a.empty() || o.b.empty()) throw UsageError("--a and --b are required");
        }
        if (sub == nf) return cmd_nf(o, out);
        if (sub == inv) return cmd_invariant(o, Driver::invfact, out, err);
        if (sub == elim) return cmd_invariant(o, Driver::elimgen, out, err);
        if (sub == res) return cmd_invariant(o, Driver::resultant, out, err);
        if (sub == smith) return cmd_smith(o, out);
        return cmd_bench(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const OracleMismatch& e) {
        err << "oracle mismatch: " << e.what() << '\n';
        return kOracleMismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

}  // namespace sylvres::cli
