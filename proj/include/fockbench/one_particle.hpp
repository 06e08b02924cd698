#ifndef FOCKBENCH_ONE_PARTICLE_HPP
#define FOCKBENCH_ONE_PARTICLE_HPP

#include <vector>

#include "fockbench/errors.hpp"
#include "fockbench/scalar.hpp"

namespace fockbench {

/// Coordinate vector v = sum_i v_i e_i in C^d over the fixed orthonormal
/// basis; the argument of creators and annihilators.
template <ScalarType S>
class OneParticleVector {
public:
    explicit OneParticleVector(std::vector<S> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw DimensionMismatch("one-particle vector needs dimension >= 1");
    }

    static OneParticleVector zero(int d) { return OneParticleVector(std::vector<S>(d, S{})); }

    static OneParticleVector basis(int d, int i) {
        std::vector<S> c(d, S{});
        c.at(i) = scalar_traits<S>::from_int(1);
        return OneParticleVector(std::move(c));
    }

    int dimension() const { return static_cast<int>(coords_.size()); }
    const S& operator[](int i) const { return coords_[i]; }
    const std::vector<S>& coords() const { return coords_; }

    typename scalar_traits<S>::real_type norm_sq() const {
        typename scalar_traits<S>::real_type acc{};
        for (const S& c : coords_) acc += scalar_traits<S>::abs_sq(c);
        return acc;
    }

    bool is_zero() const {
        for (const S& c : coords_)
            if (!scalar_traits<S>::is_zero(c)) return false;
        return true;
    }

    OneParticleVector& operator+=(const OneParticleVector& o) {
        if (o.dimension() != dimension())
            throw DimensionMismatch("one-particle vector dimensions differ");
        for (int i = 0; i < dimension(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }

    OneParticleVector& operator*=(const S& a) {
        for (S& c : coords_) c = c * a;
        return *this;
    }

    friend OneParticleVector operator+(OneParticleVector a, const OneParticleVector& b) { return a += b; }
    friend OneParticleVector operator*(const S& a, OneParticleVector v) { return v *= a; }
    friend bool operator==(const OneParticleVector& a, const OneParticleVector& b) = default;

private:
    std::vector<S> coords_;
};

/// <v|w> on the one-particle space, antilinear in the first slot.
template <ScalarType S>
S one_particle_inner(const OneParticleVector<S>& v, const OneParticleVector<S>& w) {
    if (v.dimension() != w.dimension())
        throw DimensionMismatch("one-particle inner product: dimensions differ");
    S acc{};
    for (int i = 0; i < v.dimension(); ++i) acc += scalar_traits<S>::conj(v[i]) * w[i];
    return acc;
}

inline OneParticleVector<std::complex<double>> to_float_vector(
    const OneParticleVector<GaussianRational>& v) {
    std::vector<std::complex<double>> c;
    c.reserve(v.dimension());
    for (const auto& z : v.coords()) c.push_back(z.to_complex());
    return OneParticleVector<std::complex<double>>(std::move(c));
}

}  // namespace fockbench

#endif
