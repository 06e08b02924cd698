#ifndef FOCKBENCH_FOCK_VECTOR_HPP
#define FOCKBENCH_FOCK_VECTOR_HPP

#include <map>
#include <optional>
#include <vector>

#include "fockbench/occupation.hpp"
#include "fockbench/one_particle.hpp"
#include "fockbench/scalar.hpp"

namespace fockbench {

/// Element of the truncated symmetric algebra, stored as a sparse map from
/// occupation indices to coefficients in the UNNORMALIZED monomial basis
/// e^alpha (squared norm alpha!). Multiplication by a one-particle vector is
/// then literal creator action; normalization factors appear only in norms.
///
/// Invariants: no stored zero coefficients (so map equality is vector
/// equality), every key has grade <= n_max, and all keys share the
/// workspace dimension d. Values are immutable in spirit: every operation
/// returns a fresh vector, and nothing here locks.
template <ScalarType S>
class FockVector {
public:
    using real_type = typename scalar_traits<S>::real_type;
    using term_map = std::map<OccupationIndex, S>;

    explicit FockVector(Workspace ws) : ws_(ws) { ws_.validate(); }

    /// The unit 1 of grade 0.
    static FockVector vacuum(Workspace ws) {
        FockVector v(ws);
        v.add_term(OccupationIndex::zero(ws.d), scalar_traits<S>::from_int(1));
        return v;
    }

    static FockVector monomial(Workspace ws, const OccupationIndex& alpha,
                               const S& coeff = scalar_traits<S>::from_int(1)) {
        FockVector v(ws);
        v.add_term(alpha, coeff);
        return v;
    }

    const Workspace& workspace() const { return ws_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Largest occupied grade; 0 for the zero vector.
    int max_grade() const { return terms_.empty() ? 0 : terms_.rbegin()->first.grade(); }

    /// Grade shared by all terms, or nullopt for an inhomogeneous vector.
    /// The zero vector counts as homogeneous of grade 0.
    std::optional<int> homogeneous_grade() const {
        if (terms_.empty()) return 0;
        int lo = terms_.begin()->first.grade();
        int hi = terms_.rbegin()->first.grade();
        if (lo != hi) return std::nullopt;
        return lo;
    }

    /// Accumulates coeff onto the term at alpha, pruning exact zeros.
    void add_term(const OccupationIndex& alpha, const S& coeff) {
        if (alpha.dimension() != ws_.d)
            throw DimensionMismatch("term index dimension does not match workspace");
        if (alpha.grade() > ws_.n_max)
            throw GradeOverflow("term grade " + std::to_string(alpha.grade()) +
                                " exceeds workspace cutoff n_max=" + std::to_string(ws_.n_max));
        if (scalar_traits<S>::is_zero(coeff)) return;
        auto [it, inserted] = terms_.emplace(alpha, coeff);
        if (!inserted) {
            it->second += coeff;
            if (scalar_traits<S>::is_zero(it->second)) terms_.erase(it);
        }
    }

    FockVector& operator+=(const FockVector& o) {
        require_same_workspace(o);
        for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
        return *this;
    }

    FockVector& operator-=(const FockVector& o) {
        require_same_workspace(o);
        for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
        return *this;
    }

    FockVector& operator*=(const S& a) {
        if (scalar_traits<S>::is_zero(a)) {
            terms_.clear();
            return *this;
        }
        for (auto& [alpha, c] : terms_) c = c * a;
        return *this;
    }

    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const S& a, FockVector v) { return v *= a; }
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.ws_ == b.ws_ && a.terms_ == b.terms_;
    }

    void require_same_workspace(const FockVector& o) const {
        if (!(ws_ == o.ws_))
            throw WorkspaceMismatch("vectors live in different workspaces");
    }

private:
    Workspace ws_;
    term_map terms_;
};

/// Sesquilinear extension of the monomial inner product: antilinear in the
/// first slot, linear in the second. Grades contribute independently.
template <ScalarType S>
S inner(const FockVector<S>& phi, const FockVector<S>& psi) {
    phi.require_same_workspace(psi);
    S acc{};
    for (const auto& [alpha, c] : phi.terms()) {
        auto it = psi.terms().find(alpha);
        if (it == psi.terms().end()) continue;
        acc += scalar_traits<S>::conj(c) * it->second *
               scalar_traits<S>::from_bigint(alpha.factorial_product());
    }
    return acc;
}

/// ||phi||^2 = sum_alpha |phi[alpha]|^2 * alpha!; real, >= 0, zero iff phi = 0.
template <ScalarType S>
typename scalar_traits<S>::real_type norm_sq(const FockVector<S>& phi) {
    using T = scalar_traits<S>;
    typename T::real_type acc{};
    for (const auto& [alpha, c] : phi.terms())
        acc += T::abs_sq(c) * T::real_part(T::from_bigint(alpha.factorial_product()));
    return acc;
}

/// Restriction of phi to its grade-n component. n above the cutoff simply
/// gives the zero vector.
template <ScalarType S>
FockVector<S> grade_project(const FockVector<S>& phi, int n) {
    if (n < 0) throw Error("grade_project: grade must be >= 0");
    FockVector<S> out(phi.workspace());
    for (const auto& [alpha, c] : phi.terms())
        if (alpha.grade() == n) out.add_term(alpha, c);
    return out;
}

/// phi * v in the symmetric algebra: distributes v's coordinates over every
/// term, raising each grade by one. Refuses to cross the cutoff.
template <ScalarType S>
FockVector<S> multiply_by_one_particle(const OneParticleVector<S>& v, const FockVector<S>& phi) {
    const Workspace& ws = phi.workspace();
    if (v.dimension() != ws.d)
        throw DimensionMismatch("one-particle factor dimension does not match workspace");
    if (!phi.is_zero() && phi.max_grade() + 1 > ws.n_max)
        throw GradeOverflow("multiplication would exceed grade cutoff n_max=" +
                            std::to_string(ws.n_max));
    FockVector<S> out(ws);
    for (const auto& [alpha, c] : phi.terms())
        for (int i = 0; i < ws.d; ++i) {
            if (scalar_traits<S>::is_zero(v[i])) continue;
            out.add_term(alpha.raised(i), v[i] * c);
        }
    return out;
}

/// Expands the product x_1 ... x_n of one-particle vectors into the
/// occupation basis. The empty list denotes the vacuum. Multilinear in the
/// factors and invariant under permuting them.
template <ScalarType S>
FockVector<S> tensor_to_occupation(Workspace ws, const std::vector<OneParticleVector<S>>& factors) {
    if (static_cast<int>(factors.size()) > ws.n_max)
        throw GradeOverflow("product of " + std::to_string(factors.size()) +
                            " factors exceeds grade cutoff n_max=" + std::to_string(ws.n_max));
    FockVector<S> acc = FockVector<S>::vacuum(ws);
    for (const auto& v : factors) acc = multiply_by_one_particle(v, acc);
    return acc;
}

inline FockVector<std::complex<double>> to_float_vector(const FockVector<GaussianRational>& phi) {
    FockVector<std::complex<double>> out(phi.workspace());
    for (const auto& [alpha, c] : phi.terms()) out.add_term(alpha, c.to_complex());
    return out;
}

/// Term-by-term comparison at relative tolerance tau (largest scaled
/// coefficient deviation). Exact equality is just operator==.
template <ScalarType S>
bool approx_equal(const FockVector<S>& a, const FockVector<S>& b, double tau) {
    a.require_same_workspace(b);
    auto ia = a.terms().begin(), ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
            if (!scalar_equal(ia->second, S{}, tau)) return false;
            ++ia;
        } else if (ia == a.terms().end() || ib->first < ia->first) {
            if (!scalar_equal(ib->second, S{}, tau)) return false;
            ++ib;
        } else {
            if (!scalar_equal(ia->second, ib->second, tau)) return false;
            ++ia;
            ++ib;
        }
    }
    return true;
}

}  // namespace fockbench

#endif
