// moduli: command line driver for the quantization library.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 configuration error.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "moduli/poly_text.hpp"
#include "moduli/qgroup.hpp"
#include "moduli/star_algebra.hpp"
#include "moduli/suites.hpp"
#include "moduli/uq_sl2.hpp"
#include "moduli/weyl.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw ConfigError(message);
    }
}

void check_level(long long r, const char* flag = "--r") {
    require(r >= 3, std::string(flag) + " must be an integer >= 3, got " + std::to_string(r));
    require(r <= 1000, std::string(flag) + " must be <= 1000, got " + std::to_string(r));
}

void check_tol(double tol, const char* flag) {
    require(tol > 0.0 && tol < 1.0, std::string(flag) + " must lie in (0, 1), got " + std::to_string(tol));
}

void check_quad_y(int quad_y) {
    require(quad_y >= 20 && quad_y % 20 == 0 && quad_y <= 20000,
            "--quad-y must be a positive multiple of 20 (at most 20000), got " + std::to_string(quad_y));
}

/// ISO-8601 UTC timestamp, when requested or pinned by SOURCE_DATE_EPOCH.
nlohmann::json report_timestamp(bool requested) {
    std::time_t when = 0;
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        try {
            when = static_cast<std::time_t>(std::stoll(epoch));
        } catch (const std::exception&) {
            throw ConfigError(std::string("SOURCE_DATE_EPOCH must be an integer, got '") + epoch + "'");
        }
    } else if (requested) {
        when = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    } else {
        return nullptr;
    }
    std::tm tm{};
    gmtime_r(&when, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(out), "cannot open output file '" + path + "' for writing");
    out << text;
    out.flush();
    require(static_cast<bool>(out), "failed to write output file '" + path + "'");
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

struct UqOptions {
    long long r = 0;
    std::string out;
};

int run_uq_verify(const UqOptions& o) {
    check_level(o.r);
    nlohmann::json table = nlohmann::json::array();
    bool pass = true;
    for (int k = 1; k <= o.r - 1; ++k) {
        const moduli::RelationReport rep = moduli::verify_relations(k, static_cast<int>(o.r));
        pass = pass && rep.all();
        table.push_back(rep);
    }
    write_output(dump({{"r", o.r}, {"relations", table}, {"pass", pass}}), o.out);
    return pass ? kExitPass : kExitFail;
}

struct QgroupOptions {
    long long r = 0;
    long long p = 0;
    long long q = 0;
    std::string op = "cosine";
    bool exact = false;
    bool complex = false;
    std::string out;
};

int run_qgroup_matrix(const QgroupOptions& o) {
    check_level(o.r);
    const auto kind = moduli::parse_operator_kind(o.op);
    require(kind.has_value(), "--op must be one of cosine, sine, kauffman; got '" + o.op + "'");
    require(!(o.exact && o.complex), "--exact and --complex are mutually exclusive");
    require(!(*kind == moduli::OperatorKind::sine && o.p == 0 && o.q == 0), "--op sine needs (p, q) != (0, 0)");
    const moduli::ExactOperator op = moduli::make_operator(*kind, o.p, o.q, static_cast<int>(o.r));
    nlohmann::json j;
    if (o.complex) {
        j = moduli::ComplexMatrix{op.to_complex(), moduli::kZetaBasisTag};
        j["r"] = o.r;
    } else {
        j = op;
    }
    j["op"] = o.op;
    j["p"] = o.p;
    j["q"] = o.q;
    write_output(dump(j), o.out);
    return kExitPass;
}

struct WeylOptions {
    long long r = 0;
    long long p = 0;
    long long q = 0;
    std::string method = "closed-form";
    double quad_tol = 1e-10;
    int quad_y = 400;
    std::string out;
};

int run_weyl_matrix(const WeylOptions& o) {
    check_level(o.r);
    require(o.method == "closed-form" || o.method == "oracle",
            "--method must be closed-form or oracle; got '" + o.method + "'");
    check_tol(o.quad_tol, "--quad-tol");
    check_quad_y(o.quad_y);
    moduli::ThetaSpecOptions opt;
    opt.tol = o.quad_tol;
    opt.quad_y = o.quad_y;
    opt.max_frequency = static_cast<int>(std::max(std::abs(o.p), std::abs(o.q)));
    const moduli::ThetaSpec spec = moduli::make_theta_spec(static_cast<int>(2 * o.r), opt);
    const auto method = o.method == "oracle" ? moduli::WeylMethod::oracle : moduli::WeylMethod::closed_form;
    nlohmann::json j = moduli::weyl_cosine_matrix(o.p, o.q, spec, method);
    j["r"] = o.r;
    j["N"] = 2 * o.r;
    j["p"] = o.p;
    j["q"] = o.q;
    j["method"] = o.method;
    write_output(dump(j), o.out);
    return kExitPass;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::string suite;
    std::string r_range = "3:10";
    std::string pq_range = "-5:5";
    double tol = 1e-8;
    double quad_tol = 1e-10;
    int trunc_order = 8;
    int quad_y = 400;
    std::uint64_t seed = moduli::SuiteParams{}.seed;
    int samples = 100;
    std::string format = "json";
    std::string variant = "displayed";
    std::string out;
    bool timestamp = false;
};

moduli::SuiteParams suite_params(const VerifyOptions& o) {
    moduli::SuiteParams p;
    try {
        p.r_range = moduli::parse_range(o.r_range);
        p.pq_range = moduli::parse_range(o.pq_range);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    check_level(p.r_range.lo, "--r-range lower bound");
    check_level(p.r_range.hi, "--r-range upper bound");
    require(std::abs(p.pq_range.lo) <= 1000 && std::abs(p.pq_range.hi) <= 1000, "--pq-range bounds must lie in -1000..1000");
    check_tol(o.tol, "--tol");
    check_tol(o.quad_tol, "--quad-tol");
    require(o.trunc_order >= 1 && o.trunc_order <= 64,
            "--trunc-order must lie in 1..64, got " + std::to_string(o.trunc_order));
    check_quad_y(o.quad_y);
    require(o.samples >= 1 && o.samples <= 1000000, "--samples must lie in 1..1000000, got " + std::to_string(o.samples));
    require(o.format == "json" || o.format == "csv", "--format must be json or csv; got '" + o.format + "'");
    require(o.variant == "displayed" || o.variant == "mu-nu",
            "--variant must be displayed or mu-nu; got '" + o.variant + "'");
    p.tol = o.tol;
    p.quad_tol = o.quad_tol;
    p.trunc_order = o.trunc_order;
    p.quad_y = o.quad_y;
    p.seed = o.seed;
    p.samples = o.samples;
    p.variant = o.variant == "mu-nu" ? moduli::CocycleVariant::mu_nu : moduli::CocycleVariant::displayed;
    return p;
}

int emit_report(const moduli::VerificationReport& rep, const VerifyOptions& o) {
    write_output(o.format == "csv" ? moduli::report_to_csv(rep) : dump(rep), o.out);
    return rep.pass() ? kExitPass : kExitFail;
}

int run_verify(const VerifyOptions& o) {
    const auto& names = moduli::suite_names();
    require(o.suite == "all" || std::find(names.begin(), names.end(), o.suite) != names.end(),
            "unknown suite '" + o.suite + "'");
    const moduli::SuiteParams params = suite_params(o);
    if (!o.out.empty() && o.out != "-") {
        // fail on an unwritable path before running the sweep
        std::ofstream probe(o.out, std::ios::app);
        require(static_cast<bool>(probe), "cannot open output file '" + o.out + "' for writing");
    }
    moduli::VerificationReport rep;
    rep.parameters = moduli::params_to_json(params);
    rep.timestamp = report_timestamp(o.timestamp);
    if (o.suite == "all") {
        for (const std::string& name : names) {
            rep.suites.push_back(moduli::run_suite(name, params));
        }
    } else {
        rep.suites.push_back(moduli::run_suite(o.suite, params));
    }
    return emit_report(rep, o);
}

struct ThetaOptions {
    long long N = 0;
    VerifyOptions common;
};

int run_theta_check(ThetaOptions o) {
    require(o.N >= 6 && o.N % 2 == 0 && o.N <= 2000, "--N must be an even integer in 6..2000, got " + std::to_string(o.N));
    o.common.r_range = std::to_string(o.N / 2) + ":" + std::to_string(o.N / 2);
    const moduli::SuiteParams params = suite_params(o.common);
    moduli::VerificationReport rep;
    rep.parameters = moduli::params_to_json(params);
    rep.parameters["N"] = o.N;
    rep.timestamp = report_timestamp(o.common.timestamp);
    rep.suites.push_back(moduli::run_theta_identities(params));
    rep.suites.push_back(moduli::run_cocycle(params));
    return emit_report(rep, o.common);
}

// ---------------------------------------------------------------------------

struct StarOptions {
    std::string mode = "exact";
    long long r = 0;
    std::string expr_a;
    std::string expr_b;
    int trunc_order = 8;
    bool json = false;
    std::string out;
};

template <class Ring>
int star_in(const Ring& ring, const StarOptions& o) {
    const auto a = moduli::parse_polynomial(o.expr_a, ring);
    const auto b = moduli::parse_polynomial(o.expr_b, ring);
    const std::string product = moduli::emit_polynomial(moduli::star(a, b, ring), ring);
    if (o.json) {
        write_output(dump({{"mode", o.mode},
                           {"r", o.r},
                           {"a", moduli::emit_polynomial(a, ring)},
                           {"b", moduli::emit_polynomial(b, ring)},
                           {"product", product}}),
                     o.out);
    } else {
        write_output(product + "\n", o.out);
    }
    return kExitPass;
}

int run_star(const StarOptions& o) {
    check_level(o.r);
    require(o.trunc_order >= 0 && o.trunc_order <= 64,
            "--trunc-order must lie in 0..64, got " + std::to_string(o.trunc_order));
    const int r = static_cast<int>(o.r);
    try {
        if (o.mode == "exact") {
            return star_in(moduli::CyclotomicRing{r}, o);
        }
        if (o.mode == "formal") {
            return star_in(moduli::FormalRing{o.trunc_order}, o);
        }
        if (o.mode == "complex") {
            return star_in(moduli::ComplexRing{2 * r}, o);
        }
    } catch (const moduli::PolyParseError& e) {
        throw ConfigError(e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("--mode must be exact, formal or complex; got '" + o.mode + "'");
}

void add_verify_flags(CLI::App* cmd, VerifyOptions& o, bool with_ranges) {
    if (with_ranges) {
        cmd->add_option("--r-range", o.r_range, "levels A:B")->capture_default_str();
        cmd->add_option("--pq-range", o.pq_range, "lattice range A:B")->capture_default_str();
    }
    cmd->add_option("--tol", o.tol, "comparison tolerance")->capture_default_str();
    cmd->add_option("--quad-tol", o.quad_tol, "theta truncation / quadrature tolerance")->capture_default_str();
    cmd->add_option("--trunc-order", o.trunc_order, "formal series truncation order K")->capture_default_str();
    cmd->add_option("--quad-y", o.quad_y, "Gauss-Legendre nodes in y (multiple of 20)")->capture_default_str();
    cmd->add_option("--seed", o.seed, "RNG seed for randomized suites")->capture_default_str();
    cmd->add_option("--samples", o.samples, "random samples per identity")->capture_default_str();
    cmd->add_option("--format", o.format, "json or csv")->capture_default_str();
    cmd->add_option("--variant", o.variant, "cocycle variant: displayed or mu-nu")->capture_default_str();
    cmd->add_option("--out", o.out, "output file (default stdout)");
    cmd->add_flag("--timestamp", o.timestamp, "record the current UTC time in the report");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-group and Weyl quantization of the SU(2) torus moduli space"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(moduli::kToolVersion));

    UqOptions uq;
    auto* uq_cmd = app.add_subcommand("uq-verify", "check the U_t(sl2) relations on V^1..V^{r-1}");
    uq_cmd->add_option("--r", uq.r, "level r >= 3")->required();
    uq_cmd->add_option("--out", uq.out, "output file (default stdout)");

    QgroupOptions qg;
    auto* qg_cmd = app.add_subcommand("qgroup", "quantum-group operators");
    qg_cmd->require_subcommand(1);
    auto* qg_matrix = qg_cmd->add_subcommand("matrix", "matrix of C(p,q), S(p,q) or (p,q)_T");
    qg_matrix->add_option("--r", qg.r, "level r >= 3")->required();
    qg_matrix->add_option("--p", qg.p, "first lattice index")->required();
    qg_matrix->add_option("--q", qg.q, "second lattice index")->required();
    qg_matrix->add_option("--op", qg.op, "cosine, sine or kauffman")->capture_default_str();
    qg_matrix->add_flag("--exact", qg.exact, "exact Z[t] entries (default)");
    qg_matrix->add_flag("--complex", qg.complex, "complex entries");
    qg_matrix->add_option("--out", qg.out, "output file (default stdout)");

    WeylOptions wy;
    auto* wy_cmd = app.add_subcommand("weyl", "Weyl quantization");
    wy_cmd->require_subcommand(1);
    auto* wy_matrix = wy_cmd->add_subcommand("matrix", "Weyl matrix of 2cos 2pi(px+qy) in the zeta basis");
    wy_matrix->add_option("--r", wy.r, "level r >= 3 (N = 2r)")->required();
    wy_matrix->add_option("--p", wy.p, "first lattice index")->required();
    wy_matrix->add_option("--q", wy.q, "second lattice index")->required();
    wy_matrix->add_option("--method", wy.method, "closed-form or oracle")->capture_default_str();
    wy_matrix->add_option("--quad-tol", wy.quad_tol, "quadrature tolerance")->capture_default_str();
    wy_matrix->add_option("--quad-y", wy.quad_y, "Gauss-Legendre nodes in y")->capture_default_str();
    wy_matrix->add_option("--out", wy.out, "output file (default stdout)");

    ThetaOptions th;
    auto* th_cmd = app.add_subcommand("theta", "theta functions");
    th_cmd->require_subcommand(1);
    auto* th_check = th_cmd->add_subcommand("check", "theta identities, Gram matrix and cocycle checks at level N");
    th_check->add_option("--N", th.N, "even level N >= 6")->required();
    add_verify_flags(th_check, th.common, false);

    VerifyOptions vf;
    auto* vf_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suites_help = "all";
    for (const auto& n : moduli::suite_names()) {
        suites_help += " | " + n;
    }
    vf_cmd->add_option("suite", vf.suite, suites_help)->required();
    add_verify_flags(vf_cmd, vf, true);

    StarOptions st;
    auto* st_cmd = app.add_subcommand("star", "star product of two cosine polynomials");
    st_cmd->add_option("--mode", st.mode, "exact, formal or complex")->capture_default_str();
    st_cmd->add_option("--r", st.r, "level r >= 3")->required();
    st_cmd->add_option("--expr-a", st.expr_a, "left factor, e.g. '2*c(1,0) + t^3*c(2,-1)'")->required();
    st_cmd->add_option("--expr-b", st.expr_b, "right factor")->required();
    st_cmd->add_option("--trunc-order", st.trunc_order, "formal truncation order K")->capture_default_str();
    st_cmd->add_flag("--json", st.json, "emit JSON instead of text");
    st_cmd->add_option("--out", st.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*uq_cmd) return run_uq_verify(uq);
        if (*qg_matrix) return run_qgroup_matrix(qg);
        if (*wy_matrix) return run_weyl_matrix(wy);
        if (*th_check) return run_theta_check(th);
        if (*vf_cmd) return run_verify(vf);
        if (*st_cmd) return run_star(st);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitConfig;
}
