// Command-line front end: permanent kernels, theorem-check suites, series
// domain reports, and the embedded counterexample, all with machine-readable
// output. Structured output goes to stdout; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 mathematical check failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fockbench/convergence.hpp"
#include "fockbench/counterexample.hpp"
#include "fockbench/operators.hpp"
#include "fockbench/permanent.hpp"
#include "fockbench/serialization.hpp"
#include "fockbench/suites.hpp"

namespace {

using namespace fockbench;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

struct CommonOpts {
    int d = 3;
    int n_max = 6;
    std::string backend = "exact";
    std::uint64_t seed = 20260810;
    long trials = 200;
    std::string output = "json";
    double tau = kDefaultTau;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_workspace = true) {
    if (with_workspace) {
        cmd->add_option("--d", o.d, "one-particle dimension");
        cmd->add_option("--n-max", o.n_max, "grade cutoff of the workspace");
        cmd->add_option("--backend", o.backend, "scalar backend")
            ->check(CLI::IsMember({"exact", "float"}));
        cmd->add_option("--seed", o.seed, "seed for randomized suites");
        cmd->add_option("--trials", o.trials, "number of randomized trials");
    }
    cmd->add_option("--output", o.output, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--tau", o.tau, "relative tolerance for float comparisons");
}

void emit(const Json& j, const std::string& output) {
    if (output == "csv")
        std::cout << json_to_csv(j);
    else
        std::cout << j.dump(2) << "\n";
}

int ryser_limit_from(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("FOCKBENCH_MAX_RYSER_N")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
            throw Error("FOCKBENCH_MAX_RYSER_N is not a positive integer");
        }
    }
    return kRyserPermanentLimit;
}

Json max_residual_json(const SuiteOutcome& o) {
    if (std::holds_alternative<BigRational>(o.max_residual))
        return real_to_json(std::get<BigRational>(o.max_residual));
    return real_to_json(std::get<double>(o.max_residual));
}

// --- perm ---------------------------------------------------------------

struct PermOpts {
    std::string matrix_path;
    std::string algorithm = "both";
    int max_naive_n = 0;
    int max_ryser_n = 0;
};

template <ScalarType S>
int run_perm(const CommonOpts& c, const PermOpts& p, const Json& matrix_json) {
    SquareMatrix<S> m = matrix_from_json<S>(matrix_json);
    int naive_limit = p.max_naive_n > 0 ? p.max_naive_n : kNaivePermanentLimit;
    int ryser_limit = ryser_limit_from(p.max_ryser_n);

    Json out;
    out["command"] = "perm";
    out["n"] = m.size();
    out["backend"] = scalar_traits<S>::backend_name();
    bool want_naive = p.algorithm == "naive" || p.algorithm == "both";
    bool want_ryser = p.algorithm == "ryser" || p.algorithm == "both";
    S naive{}, ryser{};
    if (want_naive) {
        naive = permanent_naive(m, naive_limit);
        out["naive"] = scalar_to_json(naive);
    }
    if (want_ryser) {
        ryser = permanent_ryser(m, ryser_limit);
        out["ryser"] = scalar_to_json(ryser);
    }
    bool agree = true;
    if (want_naive && want_ryser) {
        agree = scalar_equal(naive, ryser, c.tau);
        out["agree"] = agree;
    }
    emit(out, c.output);
    return agree ? kExitOk : kExitCheckFailed;
}

// --- check ----------------------------------------------------------------

template <ScalarType S>
int run_check(const CommonOpts& c, const std::string& suite) {
    if (c.d < 1) throw Error("dimension d must be >= 1");
    if (c.n_max < 1) throw Error("check suites need a grade cutoff n_max >= 1");
    if (c.trials < 1) throw Error("trials must be >= 1");
    SuiteParams params;
    params.d = c.d;
    params.n_max = c.n_max;
    params.seed = c.seed;
    params.trials = c.trials;
    params.tau = c.tau;
    SuiteOutcome o = run_suite<S>(suite, params);

    Json out;
    out["command"] = "check";
    out["suite"] = o.suite;
    out["d"] = params.d;
    out["n_max"] = params.n_max;
    out["backend"] = o.backend;
    out["seed"] = params.seed;
    out["trials"] = o.trials;
    out["failures"] = o.failures;
    out["max_residual"] = max_residual_json(o);
    out["notes"] = o.notes;
    emit(out, c.output);
    return o.failures == 0 ? kExitOk : kExitCheckFailed;
}

// --- domain -----------------------------------------------------------

struct DomainOpts {
    std::string spec_text;
    std::vector<long> N_values = {100, 10000, 100000};
    double threshold = 12.0;
};

int run_domain(const CommonOpts& c, const DomainOpts& d) {
    for (std::size_t i = 0; i < d.N_values.size(); ++i) {
        if (d.N_values[i] < 1) throw Error("witness endpoints must be >= 1");
        if (i > 0 && d.N_values[i] <= d.N_values[i - 1])
            throw Error("witness endpoints must be strictly increasing");
    }
    SeqSpec lambda_sq = parse_seq_spec(d.spec_text);
    DomainReport report = domain_report(lambda_sq, d.N_values, d.threshold);
    Json out;
    out["command"] = "domain";
    out["spec"] = d.spec_text;
    Json body = domain_report_to_json(report);
    for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
    emit(out, c.output);
    return kExitOk;
}

// --- counterexample -------------------------------------------------------

struct CounterexampleOpts {
    int d = 12;
    int n_max = -1;
    std::string v_coords;  // comma-separated floats; defaults to all ones
};

std::vector<double> parse_coords(const std::string& text, int d) {
    if (text.empty()) return std::vector<double>(d, 1.0);
    std::vector<double> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            out.push_back(std::stod(piece));
        } catch (const std::exception&) {
            throw Error("cannot parse coordinate '" + piece + "'");
        }
    }
    if (static_cast<int>(out.size()) != d)
        throw Error("expected " + std::to_string(d) + " coordinates, got " +
                    std::to_string(out.size()));
    return out;
}

int run_counterexample(const CommonOpts& c, const CounterexampleOpts& ce) {
    using C = std::complex<double>;
    auto phi = counterexample_truncate(ce.d, ce.n_max);
    std::vector<double> coords = parse_coords(ce.v_coords, ce.d);
    std::vector<C> vc(coords.begin(), coords.end());
    OneParticleVector<C> v(std::move(vc));

    bool pass = true;
    Json grades = Json::array(), expected = Json::array();
    double max_grade_err = 0.0;
    for (int n = 1; n <= ce.d; ++n) {
        double got = norm_sq(grade_project(phi, n));
        double want = 1.0 / (static_cast<double>(n) * n);
        grades.push_back(got);
        expected.push_back(want);
        max_grade_err = std::max(max_grade_err, std::abs(got - want));
    }
    if (max_grade_err > c.tau) pass = false;

    BigRational harmonic_exact;
    for (int n = 1; n <= ce.d; ++n) harmonic_exact += BigRational(1, n);
    double harmonic = rational_to_double(harmonic_exact);
    double energy = number_sqrt_norm_sq(phi);
    if (std::abs(energy - harmonic) > c.tau * std::max(1.0, harmonic)) pass = false;

    double v_norm = v.norm_sq();
    double annihilated = norm_sq(annihilate(v, phi));
    double annihilated_expected = 0.0;
    for (int n = 1; n <= ce.d; ++n)
        annihilated_expected += std::norm(v[n - 1]) / static_cast<double>(n);
    bool bound_holds = annihilated <= v_norm;
    if (!bound_holds) pass = false;
    if (std::abs(annihilated - annihilated_expected) > c.tau * std::max(1.0, v_norm))
        pass = false;

    Json out;
    out["command"] = "counterexample";
    out["d"] = ce.d;
    out["n_max"] = ce.n_max < 0 ? ce.d : ce.n_max;
    out["grade_norm_sq"] = grades;
    out["expected_grade_norm_sq"] = expected;
    out["max_grade_norm_error"] = max_grade_err;
    out["norm_sq"] = norm_sq(phi);
    out["number_sqrt_norm_sq"] = energy;
    out["harmonic_sum"] = harmonic;
    out["v"] = coords;
    out["norm_sq_v"] = v_norm;
    out["annihilated_norm_sq"] = annihilated;
    out["annihilated_expected"] = annihilated_expected;
    out["annihilator_bound_holds"] = bound_holds;
    out["checks_pass"] = pass;
    emit(out, c.output);
    return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fockbench: a computation kit for truncated bosonic Fock space"};
    app.require_subcommand(1);

    CommonOpts perm_common, check_common, domain_common, ce_common;
    PermOpts perm_opts;
    DomainOpts domain_opts;
    CounterexampleOpts ce_opts;
    std::string suite;

    CLI::App* perm = app.add_subcommand("perm", "evaluate a matrix permanent");
    perm->add_option("--matrix", perm_opts.matrix_path, "path to a matrix JSON file")
        ->required();
    perm->add_option("--algorithm", perm_opts.algorithm, "kernel to run")
        ->check(CLI::IsMember({"naive", "ryser", "both"}));
    perm->add_option("--max-naive-n", perm_opts.max_naive_n, "override the naive size guard");
    perm->add_option("--max-ryser-n", perm_opts.max_ryser_n,
                     "override the Ryser size guard (FOCKBENCH_MAX_RYSER_N also works)");
    perm->add_option("--backend", perm_common.backend, "scalar backend")
        ->check(CLI::IsMember({"exact", "float"}));
    add_common(perm, perm_common, false);

    CLI::App* check = app.add_subcommand("check", "run an identity-check suite");
    check->add_option("--suite", suite, "adjoint | theorem1 | theorem2 | ccr | sum-ca")
        ->required()
        ->check(CLI::IsMember({"adjoint", "theorem1", "theorem2", "ccr", "sum-ca"}));
    add_common(check, check_common);

    CLI::App* domain = app.add_subcommand("domain", "series domain report for |lambda_n|^2");
    domain->add_option("--spec", domain_opts.spec_text, "sequence spec text for |lambda_n|^2")
        ->required();
    domain->add_option("--N", domain_opts.N_values, "partial-sum witness endpoints")
        ->delimiter(',');
    domain->add_option("--threshold", domain_opts.threshold,
                       "divergence threshold for crossing witnesses");
    add_common(domain, domain_common, false);

    CLI::App* ce = app.add_subcommand("counterexample", "embedded counterexample truncation");
    ce->add_option("--d", ce_opts.d, "truncation depth (and workspace dimension)");
    ce->add_option("--n-max", ce_opts.n_max, "workspace cutoff (default: d)");
    ce->add_option("--v", ce_opts.v_coords, "annihilator argument, comma-separated floats");
    add_common(ce, ce_common, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (perm->parsed()) {
            std::ifstream in(perm_opts.matrix_path);
            if (!in) throw Error("cannot open matrix file '" + perm_opts.matrix_path + "'");
            Json matrix_json = Json::parse(in);
            if (perm_common.backend == "exact")
                return run_perm<GaussianRational>(perm_common, perm_opts, matrix_json);
            return run_perm<std::complex<double>>(perm_common, perm_opts, matrix_json);
        }
        if (check->parsed()) {
            if (check_common.backend == "exact")
                return run_check<GaussianRational>(check_common, suite);
            return run_check<std::complex<double>>(check_common, suite);
        }
        if (domain->parsed()) return run_domain(domain_common, domain_opts);
        if (ce->parsed()) return run_counterexample(ce_common, ce_opts);
    } catch (const fockbench::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (domain->parsed())
            std::cerr << caret_diagnostic(domain_opts.spec_text, e.position) << "\n";
        return kExitUsage;
    } catch (const Json::exception& e) {
        std::cerr << "error: invalid JSON input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
