#pragma once

// Verification suites. Each suite sweeps one module's invariants over a
// parameter range and reduces the outcome to case/failure counts and a
// worst residual. Reports are deterministic for fixed parameters and seed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclotomic.hpp"
#include "parallel.hpp"
#include "qgroup.hpp"
#include "rings.hpp"
#include "star_algebra.hpp"
#include "theta.hpp"
#include "uq_sl2.hpp"
#include "weyl.hpp"

namespace moduli {

inline constexpr const char* kToolVersion = "1.0.0";

struct IntRange {
    long long lo = 0;
    long long hi = 0;

    [[nodiscard]] bool contains(long long v) const { return lo <= v && v <= hi; }
    [[nodiscard]] long long count() const { return hi - lo + 1; }
};

inline IntRange parse_range(const std::string& text) {
    const auto colon = text.find(':', text.empty() ? 0 : 1);
    try {
        if (colon == std::string::npos) {
            const long long v = std::stoll(text);
            return {v, v};
        }
        std::size_t used_lo = 0;
        std::size_t used_hi = 0;
        const std::string lo = text.substr(0, colon);
        const std::string hi = text.substr(colon + 1);
        IntRange out{std::stoll(lo, &used_lo), std::stoll(hi, &used_hi)};
        if (used_lo != lo.size() || used_hi != hi.size()) {
            throw std::invalid_argument("trailing characters");
        }
        if (out.lo > out.hi) {
            throw std::invalid_argument("empty range");
        }
        return out;
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid range '" + text + "', expected A:B with A <= B");
    }
}

struct SuiteParams {
    IntRange r_range{3, 10};
    IntRange pq_range{-5, 5};
    double tol = 1e-8;
    double quad_tol = 1e-10;
    int trunc_order = 8;
    int quad_y = 400;
    std::uint64_t seed = 20240607;
    int samples = 100;
    CocycleVariant variant = CocycleVariant::displayed;
};

struct SuiteResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    double worst_residual = 0.0;
    nlohmann::json details = nlohmann::json::object();

    [[nodiscard]] bool pass() const { return failures == 0; }

    /// Records one case with its residual against a threshold.
    void record(double residual, double threshold) {
        ++cases;
        worst_residual = std::max(worst_residual, residual);
        if (!(residual < threshold)) {
            ++failures;
        }
    }

    void record_bool(bool ok) {
        ++cases;
        if (!ok) {
            ++failures;
        }
    }
};

inline void to_json(nlohmann::json& j, const SuiteResult& s) {
    j = nlohmann::json{{"suite", s.name},
                       {"cases", s.cases},
                       {"failures", s.failures},
                       {"worst_residual", s.worst_residual},
                       {"pass", s.pass()},
                       {"details", s.details}};
}

struct VerificationReport {
    std::string version = kToolVersion;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<SuiteResult> suites;
    nlohmann::json timestamp = nullptr;

    [[nodiscard]] bool pass() const {
        return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass(); });
    }
};

inline void to_json(nlohmann::json& j, const VerificationReport& rep) {
    j = nlohmann::json{{"tool_version", rep.version},
                       {"parameters", rep.parameters},
                       {"suites", rep.suites},
                       {"timestamp", rep.timestamp},
                       {"pass", rep.pass()}};
}

/// Residual summary, one row per suite.
inline std::string report_to_csv(const VerificationReport& rep) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10);
    os << "suite,cases,failures,worst_residual,pass\n";
    for (const SuiteResult& s : rep.suites) {
        os << s.name << ',' << s.cases << ',' << s.failures << ',' << s.worst_residual << ','
           << (s.pass() ? "true" : "false") << '\n';
    }
    return os.str();
}

inline nlohmann::json params_to_json(const SuiteParams& p) {
    return nlohmann::json{{"r_range", {p.r_range.lo, p.r_range.hi}},
                          {"pq_range", {p.pq_range.lo, p.pq_range.hi}},
                          {"tol", p.tol},
                          {"quad_tol", p.quad_tol},
                          {"trunc_order", p.trunc_order},
                          {"quad_y", p.quad_y},
                          {"seed", p.seed},
                          {"samples", p.samples},
                          {"cocycle_variant", p.variant == CocycleVariant::displayed ? "displayed" : "mu-nu"}};
}

inline void require_levels(const IntRange& r) {
    if (r.lo < 3) {
        throw std::invalid_argument("levels must satisfy r >= 3");
    }
}

inline ThetaSpec suite_theta_spec(int N, const SuiteParams& p, int max_frequency) {
    ThetaSpecOptions opt;
    opt.tol = p.quad_tol;
    opt.quad_y = p.quad_y;
    opt.max_frequency = max_frequency;
    return make_theta_spec(N, opt);
}

// ---------------------------------------------------------------------------

inline SuiteResult run_uq_relations(const SuiteParams& p) {
    require_levels(p.r_range);
    SuiteResult out{"uq-relations"};
    nlohmann::json failed = nlohmann::json::array();
    for (long long r = p.r_range.lo; r <= p.r_range.hi; ++r) {
        for (int k = 1; k <= r - 1; ++k) {
            const RelationReport rep = verify_relations(k, static_cast<int>(r));
            out.record_bool(rep.all());
            if (!rep.all()) {
                failed.push_back(rep);
            }
        }
    }
    out.details["failed"] = std::move(failed);
    return out;
}

/// Uniform point in the strip [0,1) x [lo, hi].
inline cplx random_point(std::mt19937_64& rng, double lo = 0.0, double hi = 1.0) {
    std::uniform_real_distribution<double> ux(0.0, 1.0);
    std::uniform_real_distribution<double> uy(lo, hi);
    const double x = ux(rng);
    return {x, uy(rng)};
}

inline SuiteResult run_theta_identities(const SuiteParams& p) {
    require_levels(p.r_range);
    SuiteResult out{"theta-identities"};
    constexpr double kRel = 1e-9;
    std::map<std::string, double> worst;
    const auto track = [&](const std::string& id, double res, double thr) {
        out.record(res, thr);
        worst[id] = std::max(worst[id], res);
    };
    std::mt19937_64 rng(p.seed);
    for (long long rr = p.r_range.lo; rr <= p.r_range.hi; ++rr) {
        const int r = static_cast<int>(rr);
        const int N = 2 * r;
        const ThetaSpec spec = suite_theta_spec(N, p, 1);
        std::uniform_int_distribution<int> jdist(-N, N);
        std::uniform_int_distribution<int> kdist(1, r - 1);
        std::uniform_int_distribution<int> mdist(-2, 2);
        std::uniform_int_distribution<int> ndist(-1, 1);
        for (int s = 0; s < p.samples; ++s) {
            const int j = jdist(rng);
            const cplx z = random_point(rng, -0.5, 0.5);
            const double nd = N;
            // theta_{j+N} = e^{pi (N + 2j)} theta_j
            const cplx shifted = theta_eval(j + N, z, spec);
            track("theta_shift", relative_residual(shifted, std::exp(kPi * (nd + 2.0 * j)) * theta_eval(j, z, spec)),
                  kRel);
            track("theta_reflect", relative_residual(theta_eval(-j, -z, spec), theta_eval(j, z, spec)), kRel);

            // quasi-periodicity with both arguments inside |Im| <= 1
            const int m = mdist(rng);
            const int n = ndist(rng);
            const cplx zq = random_point(rng, std::max(-1.0, -1.0 - n), std::min(1.0, 1.0 - n));
            track("quasi_periodicity", check_quasi_periodicity(j, m, n, zq, spec), kRel);

            // zeta_r vanishes relative to the size of its two theta pieces
            const double scale = zeta_normalization(r, N) * (std::abs(theta_eval(r, z, spec)) + std::abs(theta_eval(-r, z, spec)));
            track("zeta_r_zero", std::abs(zeta_eval(r, z, spec)) / scale, kRel);

            const int k = kdist(rng);
            track("zeta_reflect", relative_residual(zeta_eval(r + k, z, spec), -zeta_eval(r - k, z, spec)), kRel);
            const int jz = jdist(rng) / 2;
            track("zeta_period", relative_residual(zeta_eval(jz + N, z, spec), zeta_eval(jz, z, spec)), kRel);
            track("zeta_odd", relative_residual(zeta_eval(k, -z, spec), -zeta_eval(k, z, spec)), kRel);
            track("zeta_negate", relative_residual(zeta_eval(-k, z, spec), -zeta_eval(k, z, spec)), kRel);
        }
        const Matrix<cplx> g = gram_matrix(spec);
        const auto id = Matrix<cplx>::identity(g.rows(), cplx{}, cplx{1.0, 0.0});
        track("gram_identity", max_abs_difference(g, id), 1e-8);
    }
    for (const auto& [id, w] : worst) {
        out.details["worst"][id] = w;
    }
    return out;
}

inline GroupElement random_group_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> t(-2, 2);
    std::uniform_int_distribution<int> s(0, 1);
    const int m = t(rng);
    const int n = t(rng);
    return {m, n, s(rng) == 0 ? 1 : -1};
}

inline SuiteResult run_cocycle(const SuiteParams& p) {
    require_levels(p.r_range);
    SuiteResult out{"cocycle"};
    std::map<std::string, double> worst;
    const auto track = [&](const std::string& id, double res, double thr) {
        out.record(res, thr);
        worst[id] = std::max(worst[id], res);
    };
    std::mt19937_64 rng(p.seed);
    for (int s = 0; s < p.samples; ++s) {
        const cplx z = random_point(rng, 0.0, 1.0);
        const GroupElement lambda = random_group_element(rng);
        const GroupElement mu = random_group_element(rng);
        track("cocycle_condition", verify_cocycle(z, lambda, mu, p.variant), 1e-10);
        track("hermitian", verify_hermitian(z, lambda.m, lambda.n), 1e-10);
    }
    for (long long rr = p.r_range.lo; rr <= p.r_range.hi; ++rr) {
        const int N = static_cast<int>(2 * rr);
        const ThetaSpec spec = suite_theta_spec(N, p, 1);
        std::uniform_int_distribution<int> jdist(0, N - 1);
        std::uniform_int_distribution<int> mdist(-2, 2);
        std::uniform_int_distribution<int> ndist(-1, 1);
        for (int s = 0; s < p.samples; ++s) {
            const int n = ndist(rng);
            const cplx z = random_point(rng, std::max(-1.0, -1.0 - n), std::min(1.0, 1.0 - n));
            track("section_correspondence", verify_section_correspondence(jdist(rng), mdist(rng), n, z, spec), 1e-9);
        }
    }
    for (const auto& [id, w] : worst) {
        out.details["worst"][id] = w;
    }
    return out;
}

struct LemmaCase {
    int N = 0;
    long long j = 0;
    long long p = 0;
    long long q = 0;
    LemmaRegime regime = LemmaRegime::direct;
    double error = 0.0;        // |closed - oracle| / max(1, |closed|)
    double off_target = 0.0;   // normalized size of a non-target matrix element
};

/// Closed-form Toeplitz scalars against quadrature for one level, all
/// j in 0..N-1 and |p|, |q| <= pq_max.
inline std::vector<LemmaCase> certify_toeplitz_level(int N, int pq_max, const SuiteParams& p) {
    const ThetaSpec spec = suite_theta_spec(N, p, pq_max);
    const TorusGrid grid(spec);
    const SampledBasis theta = sample_theta_basis(grid, spec);
    std::vector<double> norm_sq(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) {
        norm_sq[static_cast<std::size_t>(k)] = theta.integrate({0, 0}, static_cast<std::size_t>(k), static_cast<std::size_t>(k)).real();
    }
    const long long side = 2LL * pq_max + 1;
    std::vector<LemmaCase> cases(static_cast<std::size_t>(N * side * side));
    parallel_for(cases.size(), [&](std::size_t idx) {
        const long long j = static_cast<long long>(idx) / (side * side);
        const long long rest = static_cast<long long>(idx) % (side * side);
        const long long pp = rest / side - pq_max;
        const long long qq = rest % side - pq_max;
        const ToeplitzScalar closed = toeplitz_monomial_closed_form(pp, qq, j, N);
        const auto k = static_cast<std::size_t>(closed.target);
        const TrigMonomial symbol{static_cast<int>(pp), static_cast<int>(qq)};
        const cplx oracle = theta.integrate(symbol, static_cast<std::size_t>(j), k) / norm_sq[k];
        const std::size_t other = (k + 1) % static_cast<std::size_t>(N);
        const cplx off = theta.integrate(symbol, static_cast<std::size_t>(j), other);
        LemmaCase c;
        c.N = N;
        c.j = j;
        c.p = pp;
        c.q = qq;
        c.regime = closed.regime;
        c.error = std::abs(closed.scalar - oracle) / std::max(1.0, std::abs(closed.scalar));
        c.off_target = std::abs(off) / std::sqrt(norm_sq[static_cast<std::size_t>(j)] * norm_sq[other]);
        cases[idx] = c;
    });
    return cases;
}

inline SuiteResult run_toeplitz_lemmas(const SuiteParams& p, int pq_max = 6, long long min_regime_cases = 100) {
    require_levels(p.r_range);
    SuiteResult out{"toeplitz-lemmas"};
    long long direct = 0;
    long long wrapped = 0;
    double worst_off = 0.0;
    for (long long r = p.r_range.lo; r <= p.r_range.hi; ++r) {
        for (const LemmaCase& c : certify_toeplitz_level(static_cast<int>(2 * r), pq_max, p)) {
            out.record(c.error, p.tol);
            out.record(c.off_target, p.tol);
            worst_off = std::max(worst_off, c.off_target);
            (c.regime == LemmaRegime::direct ? direct : wrapped) += 1;
        }
    }
    out.details["direct_regime_cases"] = direct;
    out.details["wrapped_regime_cases"] = wrapped;
    out.details["worst_off_target"] = worst_off;
    out.record_bool(direct >= min_regime_cases && wrapped >= min_regime_cases);
    return out;
}

inline SuiteResult run_equivalence(const SuiteParams& p) {
    require_levels(p.r_range);
    SuiteResult out{"equivalence"};
    const long long side = p.pq_range.count();
    const long long pq_max = std::max(std::abs(p.pq_range.lo), std::abs(p.pq_range.hi));
    nlohmann::json per_level = nlohmann::json::array();
    for (long long rr = p.r_range.lo; rr <= p.r_range.hi; ++rr) {
        const int r = static_cast<int>(rr);
        const WeylOracle oracle(suite_theta_spec(2 * r, p, static_cast<int>(pq_max)));
        std::vector<EquivalenceResult> results(static_cast<std::size_t>(side * side));
        parallel_for(results.size(), [&](std::size_t idx) {
            const long long pp = p.pq_range.lo + static_cast<long long>(idx) / side;
            const long long qq = p.pq_range.lo + static_cast<long long>(idx) % side;
            results[idx] = compare_with_qgroup(pp, qq, oracle, p.tol);
        });
        double level_worst = 0.0;
        for (const auto& res : results) {
            out.record(res.max_abs_deviation, p.tol);
            level_worst = std::max(level_worst, res.max_abs_deviation);
        }
        per_level.push_back({{"r", r}, {"cases", results.size()}, {"max_abs_deviation", level_worst}});
    }
    out.details["levels"] = std::move(per_level);
    return out;
}

inline SuiteResult run_product_to_sum(const SuiteParams& p, IntRange mnpq = {-4, 4}) {
    require_levels(p.r_range);
    SuiteResult out{"product-to-sum"};
    const long long side = mnpq.count();
    for (long long rr = p.r_range.lo; rr <= p.r_range.hi; ++rr) {
        const int r = static_cast<int>(rr);
        // C(a,b) for every (a,b) the identity can touch
        std::map<std::pair<long long, long long>, ExactOperator> cache;
        const auto op = [&](long long a, long long b) -> const ExactOperator& {
            auto it = cache.find({a, b});
            if (it == cache.end()) {
                it = cache.emplace(std::pair{a, b}, cosine_operator(a, b, r)).first;
            }
            return it->second;
        };
        for (long long a = 2 * mnpq.lo; a <= 2 * mnpq.hi; ++a) {
            for (long long b = 2 * mnpq.lo; b <= 2 * mnpq.hi; ++b) {
                op(a, b);
            }
        }
        const long long total = side * side * side * side;
        std::vector<char> ok(static_cast<std::size_t>(total), 0);
        parallel_for(ok.size(), [&](std::size_t idx) {
            long long rest = static_cast<long long>(idx);
            const long long q = mnpq.lo + rest % side;
            rest /= side;
            const long long pv = mnpq.lo + rest % side;
            rest /= side;
            const long long n = mnpq.lo + rest % side;
            rest /= side;
            const long long m = mnpq.lo + rest;
            const long long d = determinant(m, n, pv, q);
            const ExactOperator lhs = cache.at({m, n}) * cache.at({pv, q});
            const ExactOperator rhs =
                t_pow(d, r) * cache.at({m + pv, n + q}) + t_pow(-d, r) * cache.at({m - pv, n - q});
            ok[idx] = lhs == rhs ? 1 : 0;
        });
        for (char v : ok) {
            out.record_bool(v != 0);
        }
    }
    return out;
}

inline SuiteResult run_kauffman(const SuiteParams& p, IntRange mnpq = {-3, 3}) {
    require_levels(p.r_range);
    SuiteResult out{"kauffman"};
    long long odd_q_cases = 0;
    long long differing = 0;
    for (long long rr = p.r_range.lo; rr <= p.r_range.hi; ++rr) {
        const int r = static_cast<int>(rr);
        for (long long a = p.pq_range.lo; a <= p.pq_range.hi; ++a) {
            for (long long b = p.pq_range.lo; b <= p.pq_range.hi; ++b) {
                const ExactOperator t_op = kauffman_operator(a, b, r);
                const ExactOperator c_op = cosine_operator(a, b, r);
                const auto parity = CyclotomicElement::from_int(b % 2 == 0 ? 1 : -1, r);
                out.record_bool(t_op == parity * c_op);
                if (b % 2 != 0) {
                    ++odd_q_cases;
                    // the sign obstruction: some entry must differ
                    const bool differs = !(t_op == c_op);
                    differing += differs ? 1 : 0;
                    out.record_bool(differs);
                }
            }
        }
        for (long long m = mnpq.lo; m <= mnpq.hi; ++m) {
            for (long long n = mnpq.lo; n <= mnpq.hi; ++n) {
                for (long long a = mnpq.lo; a <= mnpq.hi; ++a) {
                    for (long long b = mnpq.lo; b <= mnpq.hi; ++b) {
                        out.record_bool(product_to_sum_holds(kauffman_operator, m, n, a, b, r));
                    }
                }
            }
        }
    }
    out.details["odd_q_cases"] = odd_q_cases;
    out.details["odd_q_differing_from_cosine"] = differing;
    return out;
}

// random inputs for the star-algebra suite ----------------------------------

inline RationalPolynomial random_rational_polynomial(std::mt19937_64& rng, int max_terms = 3, int max_freq = 3,
                                                     int max_coeff = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> freq(-max_freq, max_freq);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::uniform_int_distribution<int> den(1, 3);
    RationalPolynomial f;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        const int c = coeff(rng);
        const int pp = freq(rng);
        const int qq = freq(rng);
        f.add(pp, qq, Rational(c == 0 ? 1 : c, den(rng)));
    }
    if (f.empty()) {
        f.add(1, 0, Rational(1));
    }
    return f;
}

inline TrigPolynomial<CyclotomicElement> random_cyclotomic_polynomial(std::mt19937_64& rng, int r, int max_terms = 3,
                                                                      int max_freq = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> freq(-max_freq, max_freq);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> expo(0, 4 * r - 1);
    TrigPolynomial<CyclotomicElement> f;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        CyclotomicElement c = CyclotomicElement::from_int(coeff(rng), r) + t_pow(expo(rng), r);
        const int pp = freq(rng);
        const int qq = freq(rng);
        f.add(pp, qq, c);
    }
    return f;
}

inline SuiteResult run_star_formal(const SuiteParams& p, int triples = 200, int compat_pairs = 500, int bk_order = 6) {
    require_levels(p.r_range);
    SuiteResult out{"star-formal"};
    std::mt19937_64 rng(p.seed);
    const FormalRing formal{p.trunc_order};
    long long assoc_formal = 0;
    long long assoc_exact = 0;
    long long compat = 0;
    bool ratio_half = true;
    for (int s = 0; s < triples; ++s) {
        const auto f = random_rational_polynomial(rng);
        const auto g = random_rational_polynomial(rng);
        const auto h = random_rational_polynomial(rng);
        const bool a = check_associativity(lift_to_formal(f, formal.order), lift_to_formal(g, formal.order),
                                           lift_to_formal(h, formal.order), formal);
        out.record_bool(a);
        assoc_formal += a ? 1 : 0;

        const CorrespondenceReport corr = check_correspondence(f, g, p.trunc_order);
        out.record_bool(corr.matches_b1);
        if (!corr.both_zero) {
            const bool half = corr.poisson_ratio && *corr.poisson_ratio == Rational(1, 2);
            ratio_half = ratio_half && half;
            out.record_bool(half);
        }
        out.record_bool(check_bk_exponential(f, g, std::min(bk_order, 10)));
    }
    for (long long rr = p.r_range.lo; rr <= p.r_range.hi; ++rr) {
        const int r = static_cast<int>(rr);
        const CyclotomicRing ring{r};
        for (int s = 0; s < triples; ++s) {
            const auto f = random_cyclotomic_polynomial(rng, r);
            const auto g = random_cyclotomic_polynomial(rng, r);
            const auto h = random_cyclotomic_polynomial(rng, r);
            const bool a = check_associativity(f, g, h, ring);
            out.record_bool(a);
            assoc_exact += a ? 1 : 0;
        }
        for (int s = 0; s < compat_pairs; ++s) {
            const auto f = random_cyclotomic_polynomial(rng, r);
            const auto g = random_cyclotomic_polynomial(rng, r);
            const bool ok = check_operator_compatibility(f, g, r);
            out.record_bool(ok);
            compat += ok ? 1 : 0;
        }
    }
    if (triples > 0) {
        out.details["associative_formal"] = assoc_formal;
        out.details["associative_exact"] = assoc_exact;
        out.details["poisson_ratio"] = ratio_half ? "1/2" : "not uniformly 1/2";
    }
    if (compat_pairs > 0) {
        out.details["operator_compatible"] = compat;
    }
    return out;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"uq-relations", "theta-identities", "cocycle", "toeplitz-lemmas",
                                                   "equivalence", "product-to-sum", "kauffman", "star-formal"};
    return names;
}

inline SuiteResult run_suite(const std::string& name, const SuiteParams& params) {
    if (name == "uq-relations") return run_uq_relations(params);
    if (name == "theta-identities") return run_theta_identities(params);
    if (name == "cocycle") return run_cocycle(params);
    if (name == "toeplitz-lemmas") return run_toeplitz_lemmas(params);
    if (name == "equivalence") return run_equivalence(params);
    if (name == "product-to-sum") return run_product_to_sum(params);
    if (name == "kauffman") return run_kauffman(params);
    if (name == "star-formal") return run_star_formal(params);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace moduli
