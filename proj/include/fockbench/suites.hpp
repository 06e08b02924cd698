#ifndef FOCKBENCH_SUITES_HPP
#define FOCKBENCH_SUITES_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "fockbench/operators.hpp"
#include "fockbench/random_gen.hpp"

namespace fockbench {

struct SuiteParams {
    int d = 3;
    int n_max = 5;
    std::uint64_t seed = 20260810;
    long trials = 200;
    double tau = kDefaultTau;
};

/// Summary of one randomized or exhaustive identity suite. On the exact
/// backend max_residual is an exact rational and failures must be zero; on
/// the float backend it is the largest scaled deviation seen.
struct SuiteOutcome {
    std::string suite;
    std::string backend;
    SuiteParams params;
    long trials = 0;
    long failures = 0;
    std::variant<BigRational, double> max_residual = BigRational(0);
    std::vector<std::string> notes;  // first few failure descriptions
};

namespace detail {

template <ScalarType S>
void record(SuiteOutcome& out, bool ok, const typename scalar_traits<S>::real_type& residual,
            const std::string& what) {
    ++out.trials;
    if constexpr (scalar_traits<S>::is_exact) {
        BigRational& mr = std::get<BigRational>(out.max_residual);
        if (residual > mr) mr = residual;
    } else {
        double& mr = std::get<double>(out.max_residual);
        if (residual > mr) mr = residual;
    }
    if (!ok) {
        ++out.failures;
        if (out.notes.size() < 5) out.notes.push_back(what);
    }
}

template <ScalarType S>
SuiteOutcome make_outcome(const char* suite, const SuiteParams& p) {
    SuiteOutcome out;
    out.suite = suite;
    out.backend = scalar_traits<S>::backend_name();
    out.params = p;
    if constexpr (!scalar_traits<S>::is_exact) out.max_residual = 0.0;
    return out;
}

/// All monomial indices over d slots with grade <= max_grade, in graded-lex
/// order.
std::vector<std::vector<int>> enumerate_indices(int d, int max_grade);

}  // namespace detail

/// <psi | c(v) phi> = <a(v) psi | phi> on random vectors.
template <ScalarType S>
SuiteOutcome run_adjoint_suite(const SuiteParams& p) {
    auto out = detail::make_outcome<S>("adjoint", p);
    Rng rng(p.seed);
    Workspace ws{p.d, p.n_max};
    for (long t = 0; t < p.trials; ++t) {
        auto v = random_one_particle<S>(rng, p.d);
        auto psi = random_fock_vector<S>(rng, ws, 5, p.n_max);
        auto phi = random_fock_vector<S>(rng, ws, 5, p.n_max - 1);
        auto rep = check_adjoint(v, psi, phi, p.tau);
        detail::record<S>(out, rep.equal, rep.residual,
                          "adjointness failed at trial " + std::to_string(t));
    }
    return out;
}

/// ||c(u) phi||^2 <= (n+1) ||phi||^2 exhaustively on monomials with u = e_1,
/// with equality exactly on the pure powers e_1^n.
template <ScalarType S>
SuiteOutcome run_theorem1_suite(const SuiteParams& p) {
    auto out = detail::make_outcome<S>("theorem1", p);
    Workspace ws{p.d, p.n_max};
    auto u = OneParticleVector<S>::basis(p.d, 0);
    for (const auto& counts : detail::enumerate_indices(p.d, p.n_max - 1)) {
        OccupationIndex alpha(counts);
        auto phi = FockVector<S>::monomial(ws, alpha);
        auto rep = creator_bound_report(u, phi, p.tau);
        bool holds = rep.flags[0] == "bound-holds";
        bool equality = rep.equal;
        bool flagged = rep.flags.size() > 1 && rep.flags[1] == "equality-case";
        bool is_pure_power = alpha.grade() == alpha[0];
        bool ok = holds && equality == is_pure_power && flagged == is_pure_power;
        // the report's residual is the slack rhs - lhs; the suite tracks the
        // bound violation, which must be zero
        typename scalar_traits<S>::real_type violation{};
        if (rep.residual < violation) violation = -rep.residual;
        detail::record<S>(out, ok, violation,
                          "creator bound failed on monomial " + alpha.to_string());
    }
    return out;
}

/// ||N^(1/2) Phi||^2 = sum_j ||a(e_j) Phi||^2 on random vectors.
template <ScalarType S>
SuiteOutcome run_theorem2_suite(const SuiteParams& p) {
    auto out = detail::make_outcome<S>("theorem2", p);
    Rng rng(p.seed);
    Workspace ws{p.d, p.n_max};
    for (long t = 0; t < p.trials; ++t) {
        auto phi = random_fock_vector<S>(rng, ws, 6, p.n_max);
        auto rep = theorem2_identity_report(phi, p.tau);
        detail::record<S>(out, rep.equal, rep.residual,
                          "square-root-energy identity failed at trial " + std::to_string(t));
    }
    return out;
}

/// a(v)c(w) - c(w)a(v) = <v|w> I, the commutation relation the two operator
/// definitions force; checked as exact vector equality on random triples.
template <ScalarType S>
SuiteOutcome run_ccr_suite(const SuiteParams& p) {
    using T = scalar_traits<S>;
    auto out = detail::make_outcome<S>("ccr", p);
    Rng rng(p.seed);
    Workspace ws{p.d, p.n_max};
    for (long t = 0; t < p.trials; ++t) {
        auto v = random_one_particle<S>(rng, p.d);
        auto w = random_one_particle<S>(rng, p.d);
        auto phi = random_fock_vector<S>(rng, ws, 5, p.n_max - 1);
        auto lhs = annihilate(v, create(w, phi)) - create(w, annihilate(v, phi));
        auto rhs = one_particle_inner(v, w) * phi;
        auto diff = lhs - rhs;
        typename T::real_type residual{};
        for (const auto& [alpha, c] : diff.terms()) {
            auto dev = T::abs_sq(c);
            if (dev > residual) residual = dev;
        }
        bool ok;
        if constexpr (T::is_exact)
            ok = lhs == rhs;
        else
            ok = approx_equal(lhs, rhs, p.tau);
        detail::record<S>(out, ok, residual,
                          "commutation relation failed at trial " + std::to_string(t));
    }
    return out;
}

/// sum_j c(e_j) a(e_j) = N, exhaustive on monomials up to the headroom grade
/// plus `trials` random vectors.
template <ScalarType S>
SuiteOutcome run_sum_ca_suite(const SuiteParams& p) {
    using T = scalar_traits<S>;
    auto out = detail::make_outcome<S>("sum-ca", p);
    Rng rng(p.seed);
    Workspace ws{p.d, p.n_max};
    auto check_one = [&](const FockVector<S>& phi, const std::string& what) {
        auto lhs = sum_create_annihilate(phi);
        auto rhs = number(phi);
        auto diff = lhs - rhs;
        typename T::real_type residual{};
        for (const auto& [alpha, c] : diff.terms()) {
            auto dev = T::abs_sq(c);
            if (dev > residual) residual = dev;
        }
        bool ok;
        if constexpr (T::is_exact)
            ok = lhs == rhs;
        else
            ok = approx_equal(lhs, rhs, p.tau);
        detail::record<S>(out, ok, residual, what);
    };
    for (const auto& counts : detail::enumerate_indices(p.d, p.n_max - 1)) {
        OccupationIndex alpha(counts);
        check_one(FockVector<S>::monomial(ws, alpha),
                  "number identity failed on monomial " + alpha.to_string());
    }
    for (long t = 0; t < p.trials; ++t)
        check_one(random_fock_vector<S>(rng, ws, 5, p.n_max - 1),
                  "number identity failed at random trial " + std::to_string(t));
    return out;
}

template <ScalarType S>
SuiteOutcome run_suite(const std::string& name, const SuiteParams& p) {
    if (name == "adjoint") return run_adjoint_suite<S>(p);
    if (name == "theorem1") return run_theorem1_suite<S>(p);
    if (name == "theorem2") return run_theorem2_suite<S>(p);
    if (name == "ccr") return run_ccr_suite<S>(p);
    if (name == "sum-ca") return run_sum_ca_suite<S>(p);
    throw Error("unknown suite '" + name + "'");
}

}  // namespace fockbench

#endif
