#ifndef FOCKBENCH_SCALAR_HPP
#define FOCKBENCH_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <concepts>
#include <ostream>
#include <string>

#include "fockbench/errors.hpp"

namespace fockbench {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// x^e for integer e (negative exponents invert; 0^0 = 1).
inline BigRational rational_pow(const BigRational& x, long e) {
    if (e < 0) {
        if (x == 0) throw Error("rational_pow: zero base with negative exponent");
        return 1 / rational_pow(x, -e);
    }
    BigRational acc = 1, base = x;
    for (long m = e; m > 0; m >>= 1) {
        if (m & 1) acc *= base;
        base *= base;
    }
    return acc;
}

inline double rational_to_double(const BigRational& r) { return r.convert_to<double>(); }

/// Complex number with exact rational real and imaginary parts.
///
/// Arithmetic is closed (no rounding) and equality is decidable, so every
/// identity check on the exact backend is a literal equality rather than a
/// tolerance test.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int n) : re_(n) {}  // NOLINT: implicit by design
    GaussianRational(long n) : re_(n) {}
    GaussianRational(BigRational re) : re_(std::move(re)) {}
    GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

    const BigRational& real() const { return re_; }
    const BigRational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    GaussianRational conj() const { return {re_, -im_}; }
    BigRational abs_sq() const { return re_ * re_ + im_ * im_; }

    std::complex<double> to_complex() const {
        return {rational_to_double(re_), rational_to_double(im_)};
    }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        BigRational re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = re;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        BigRational d = o.abs_sq();
        if (d == 0) throw Error("division by zero scalar");
        BigRational re = (re_ * o.re_ + im_ * o.im_) / d;
        im_ = (im_ * o.re_ - re_ * o.im_) / d;
        re_ = re;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        if (z.im_ == 0) return os << z.re_;
        return os << "(" << z.re_ << ", " << z.im_ << "i)";
    }

private:
    BigRational re_{0};
    BigRational im_{0};
};

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<GaussianRational> {
    using real_type = BigRational;
    static constexpr bool is_exact = true;
    static const char* backend_name() { return "exact"; }

    static GaussianRational conj(const GaussianRational& z) { return z.conj(); }
    static bool is_zero(const GaussianRational& z) { return z.is_zero(); }
    static real_type abs_sq(const GaussianRational& z) { return z.abs_sq(); }
    static real_type real_part(const GaussianRational& z) { return z.real(); }
    static GaussianRational from_int(long n) { return {BigRational(n)}; }
    static GaussianRational from_bigint(const BigInt& n) { return {BigRational(n)}; }
    static GaussianRational from_real(real_type r) { return {std::move(r)}; }
    static double real_to_double(const real_type& r) { return rational_to_double(r); }
};

template <>
struct scalar_traits<std::complex<double>> {
    using real_type = double;
    static constexpr bool is_exact = false;
    static const char* backend_name() { return "float"; }

    static std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }
    static bool is_zero(const std::complex<double>& z) { return z.real() == 0.0 && z.imag() == 0.0; }
    static real_type abs_sq(const std::complex<double>& z) { return std::norm(z); }
    static real_type real_part(const std::complex<double>& z) { return z.real(); }
    static std::complex<double> from_int(long n) { return {static_cast<double>(n), 0.0}; }
    static std::complex<double> from_bigint(const BigInt& n) { return {n.convert_to<double>(), 0.0}; }
    static std::complex<double> from_real(double r) { return {r, 0.0}; }
    static double real_to_double(double r) { return r; }
};

template <class S>
concept ScalarType = requires(const S& z) {
    { scalar_traits<S>::is_zero(z) } -> std::convertible_to<bool>;
    { scalar_traits<S>::conj(z) } -> std::convertible_to<S>;
};

/// Exact backend compares literally; float backend compares at relative
/// tolerance tau, scale-protected near zero.
inline bool scalar_equal(const GaussianRational& a, const GaussianRational& b, double /*tau*/) {
    return a == b;
}
inline bool scalar_equal(const std::complex<double>& a, const std::complex<double>& b, double tau) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tau * scale;
}

/// Residual carried by identity reports: zero iff the two sides agree.
/// Exact backend: |d_re| + |d_im| of the difference, an exact rational.
/// Float backend: |a - b| / max(1, |a|, |b|).
inline BigRational scalar_residual(const GaussianRational& a, const GaussianRational& b) {
    GaussianRational d = a - b;
    return abs(d.real()) + abs(d.imag());
}
inline double scalar_residual(const std::complex<double>& a, const std::complex<double>& b) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) / scale;
}

inline std::complex<double> to_float_scalar(const GaussianRational& z) { return z.to_complex(); }
inline std::complex<double> to_float_scalar(const std::complex<double>& z) { return z; }

}  // namespace fockbench

#endif
