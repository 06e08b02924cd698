#ifndef FOCKBENCH_RANDOM_GEN_HPP
#define FOCKBENCH_RANDOM_GEN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "fockbench/fock_vector.hpp"

namespace fockbench {

/// Deterministic generator for the randomized suites. mt19937_64 is fully
/// specified by the standard and the samplers below avoid the
/// implementation-defined std distributions, so a seed pins the byte-exact
/// trial stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [lo, hi] via rejection sampling.
    long uniform(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    bool coin() { return (eng_() & 1) != 0; }

private:
    std::mt19937_64 eng_;
};

/// Random rational with numerator in [-max_num, max_num] and denominator in
/// [1, max_den]. Small bounds keep exact arithmetic fast while avoiding
/// degenerate all-integer inputs.
inline BigRational random_rational(Rng& rng, long max_num = 16, long max_den = 16) {
    return BigRational(rng.uniform(-max_num, max_num), rng.uniform(1, max_den));
}

inline GaussianRational random_gaussian_rational(Rng& rng) {
    return {random_rational(rng), random_rational(rng)};
}

inline GaussianRational random_nonzero_gaussian_rational(Rng& rng) {
    for (;;) {
        GaussianRational z = random_gaussian_rational(rng);
        if (!z.is_zero()) return z;
    }
}

template <ScalarType S>
S random_scalar(Rng& rng);

template <>
inline GaussianRational random_scalar<GaussianRational>(Rng& rng) {
    return random_gaussian_rational(rng);
}

template <>
inline std::complex<double> random_scalar<std::complex<double>>(Rng& rng) {
    return random_gaussian_rational(rng).to_complex();
}

template <ScalarType S>
OneParticleVector<S> random_one_particle(Rng& rng, int d) {
    std::vector<S> coords;
    coords.reserve(d);
    for (int i = 0; i < d; ++i) coords.push_back(random_scalar<S>(rng));
    return OneParticleVector<S>(std::move(coords));
}

/// Random occupation index of the given grade (balls into d boxes).
inline OccupationIndex random_index(Rng& rng, int d, int grade) {
    std::vector<int> counts(d, 0);
    for (int i = 0; i < grade; ++i) ++counts[rng.uniform(0, d - 1)];
    return OccupationIndex(std::move(counts));
}

/// Sparse random vector with up to max_terms monomials of grade <= max_grade.
template <ScalarType S>
FockVector<S> random_fock_vector(Rng& rng, Workspace ws, int max_terms, int max_grade) {
    FockVector<S> v(ws);
    int terms = static_cast<int>(rng.uniform(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        int grade = static_cast<int>(rng.uniform(0, max_grade));
        v.add_term(random_index(rng, ws.d, grade), random_scalar<S>(rng));
    }
    return v;
}

}  // namespace fockbench

#endif
