#ifndef FOCKBENCH_OPERATORS_HPP
#define FOCKBENCH_OPERATORS_HPP

#include <string>
#include <vector>

#include "fockbench/fock_vector.hpp"

namespace fockbench {

inline constexpr double kDefaultTau = 1e-12;

/// Carrier for two-sided identity checks. `equal` means the two sides agree
/// (literally on the exact backend, at tolerance tau on the float backend);
/// `residual` is zero exactly when they do. For bound-style reports the
/// residual is the slack rhs - lhs, so equality still reads as residual 0.
template <ScalarType S>
struct OperatorReport {
    S lhs{};
    S rhs{};
    bool equal = false;
    typename scalar_traits<S>::real_type residual{};
    std::vector<std::string> flags;
};

template <ScalarType S>
OperatorReport<S> make_report(const S& lhs, const S& rhs, double tau) {
    OperatorReport<S> r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.equal = scalar_equal(lhs, rhs, tau);
    r.residual = scalar_residual(lhs, rhs);
    return r;
}

/// c(v)phi = v phi: multiplication by v, raising every grade by one.
/// Linear in v and in phi; needs one grade of headroom below the cutoff.
template <ScalarType S>
FockVector<S> create(const OneParticleVector<S>& v, const FockVector<S>& phi) {
    return multiply_by_one_particle(v, phi);
}

/// a(v): the derivation that kills the vacuum, contracting one factor at a
/// time: a(v)(v_1...v_n) = sum_j <v|v_j> v_1...v^_j...v_n. On monomials this
/// is a(e_i) e^alpha = alpha_i e^(alpha - delta_i). Antilinear in v, linear
/// in phi, lowers every grade by one.
template <ScalarType S>
FockVector<S> annihilate(const OneParticleVector<S>& v, const FockVector<S>& phi) {
    const Workspace& ws = phi.workspace();
    if (v.dimension() != ws.d)
        throw DimensionMismatch("annihilator argument dimension does not match workspace");
    FockVector<S> out(ws);
    for (const auto& [alpha, c] : phi.terms()) {
        for (int i = 0; i < ws.d; ++i) {
            if (alpha[i] == 0) continue;
            S w = scalar_traits<S>::conj(v[i]);
            if (scalar_traits<S>::is_zero(w)) continue;
            out.add_term(alpha.lowered(i), w * c * scalar_traits<S>::from_int(alpha[i]));
        }
    }
    return out;
}

/// N phi: scales each grade-n component by n.
template <ScalarType S>
FockVector<S> number(const FockVector<S>& phi) {
    FockVector<S> out(phi.workspace());
    for (const auto& [alpha, c] : phi.terms()) {
        int n = alpha.grade();
        if (n == 0) continue;
        out.add_term(alpha, c * scalar_traits<S>::from_int(n));
    }
    return out;
}

/// ||N^(1/2) phi||^2 = sum_n n ||phi_n||^2, the square-root-domain energy.
/// Equals inner(phi, number(phi)); evaluated term-by-term here since grades
/// are orthogonal.
template <ScalarType S>
typename scalar_traits<S>::real_type number_sqrt_norm_sq(const FockVector<S>& phi) {
    using T = scalar_traits<S>;
    typename T::real_type acc{};
    for (const auto& [alpha, c] : phi.terms())
        acc += T::abs_sq(c) * T::real_part(T::from_bigint(alpha.factorial_product())) *
               T::real_part(T::from_int(alpha.grade()));
    return acc;
}

/// Mutual adjointness <psi | c(v) phi> = <a(v) psi | phi>, both sides
/// evaluated independently.
template <ScalarType S>
OperatorReport<S> check_adjoint(const OneParticleVector<S>& v, const FockVector<S>& psi,
                                const FockVector<S>& phi, double tau = kDefaultTau) {
    S lhs = inner(psi, create(v, phi));
    S rhs = inner(annihilate(v, psi), phi);
    return make_report(lhs, rhs, tau);
}

/// sum_j c(e_j) a(e_j) phi over the full orthonormal basis; equals
/// number(phi). Requires one grade of headroom even though the final result
/// stays within phi's top grade: each c(e_j, a(e_j) .) passes through the
/// generic creator, which is what the contract documents.
template <ScalarType S>
FockVector<S> sum_create_annihilate(const FockVector<S>& phi) {
    const Workspace& ws = phi.workspace();
    if (!phi.is_zero() && phi.max_grade() > ws.n_max - 1)
        throw GradeOverflow("sum_create_annihilate needs one grade of headroom below n_max");
    FockVector<S> out(ws);
    for (int j = 0; j < ws.d; ++j) {
        auto ej = OneParticleVector<S>::basis(ws.d, j);
        out += create(ej, annihilate(ej, phi));
    }
    return out;
}

/// ||c(u)phi||^2 <= (n+1) ||phi||^2 for a unit u and homogeneous phi of
/// grade n, with equality exactly when phi is proportional to u^n. The
/// report carries lhs = ||c(u)phi||^2, rhs = (n+1)||phi||^2, residual =
/// slack, and flags "bound-holds" / "bound-violated" plus "equality-case"
/// when proportionality to u^n is detected (projection-norm comparison).
template <ScalarType S>
OperatorReport<S> creator_bound_report(const OneParticleVector<S>& u, const FockVector<S>& phi,
                                       double tau = kDefaultTau) {
    using T = scalar_traits<S>;
    const Workspace& ws = phi.workspace();
    if (u.dimension() != ws.d)
        throw DimensionMismatch("creator bound: vector dimension does not match workspace");
    S unit_check = one_particle_inner(u, u);
    if (!scalar_equal(unit_check, T::from_int(1), tau))
        throw Error("creator bound requires a unit vector");
    auto grade = phi.homogeneous_grade();
    if (!grade) throw Error("creator bound requires a homogeneous vector");
    const int n = *grade;

    typename T::real_type lhs = norm_sq(create(u, phi));
    typename T::real_type rhs = norm_sq(phi) * T::real_part(T::from_int(n + 1));

    OperatorReport<S> r = make_report(T::from_real(lhs), T::from_real(rhs), tau);
    r.residual = rhs - lhs;
    bool holds;
    if constexpr (T::is_exact)
        holds = lhs <= rhs;
    else
        holds = lhs <= rhs + tau * std::max(1.0, rhs);
    r.flags.push_back(holds ? "bound-holds" : "bound-violated");

    // Equality case: phi proportional to u^n, detected by comparing the
    // norm of the projection onto u^n with the norm of phi itself.
    auto u_pow = tensor_to_occupation(ws, std::vector<OneParticleVector<S>>(n, u));
    typename T::real_type g = norm_sq(u_pow);
    S proj = inner(u_pow, phi) / T::from_real(g);
    typename T::real_type proj_norm = T::abs_sq(proj) * g;
    bool proportional;
    if constexpr (T::is_exact)
        proportional = proj_norm == norm_sq(phi);
    else
        proportional = std::abs(proj_norm - norm_sq(phi)) <= tau * std::max(1.0, norm_sq(phi));
    if (proportional) r.flags.push_back("equality-case");
    return r;
}

/// ||N^(1/2) Phi||^2 = sum_j ||a(e_j) Phi||^2, both sides evaluated
/// independently (lhs grade-wise, rhs via d annihilator norms).
template <ScalarType S>
OperatorReport<S> theorem2_identity_report(const FockVector<S>& phi, double tau = kDefaultTau) {
    using T = scalar_traits<S>;
    const Workspace& ws = phi.workspace();
    typename T::real_type lhs = number_sqrt_norm_sq(phi);
    typename T::real_type rhs{};
    for (int j = 0; j < ws.d; ++j)
        rhs += norm_sq(annihilate(OneParticleVector<S>::basis(ws.d, j), phi));
    return make_report(T::from_real(lhs), T::from_real(rhs), tau);
}

}  // namespace fockbench

#endif
