#ifndef FOCKBENCH_PERMANENT_HPP
#define FOCKBENCH_PERMANENT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "fockbench/one_particle.hpp"
#include "fockbench/scalar.hpp"

namespace fockbench {

// Engineering guards against factorial / exponential blowup. Both are
// overridable per call (the CLI also honors FOCKBENCH_MAX_RYSER_N).
inline constexpr int kNaivePermanentLimit = 10;
inline constexpr int kRyserPermanentLimit = 30;

template <ScalarType S>
class SquareMatrix {
public:
    explicit SquareMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, S{}) {
        if (n < 0) throw Error("matrix size must be >= 0");
    }

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = scalar_traits<S>::from_int(1);
        return m;
    }

    int size() const { return n_; }
    S& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const S& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<S> entries_;
};

/// Literal sum over all n! permutations: sum_p prod_j M[j, p(j)].
/// The reference kernel; the empty matrix has permanent 1 (the single empty
/// permutation contributes an empty product).
template <ScalarType S>
S permanent_naive(const SquareMatrix<S>& m, int max_n = kNaivePermanentLimit) {
    const int n = m.size();
    if (n > max_n)
        throw SizeLimit("permanent_naive refused: n=" + std::to_string(n) + " exceeds limit " +
                        std::to_string(max_n) + " (factorial cost)");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    S total{};
    do {
        S prod = scalar_traits<S>::from_int(1);
        for (int i = 0; i < n; ++i) prod *= m.at(i, p[i]);
        total += prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

/// Ryser's inclusion-exclusion permanent with Gray-code column updates:
/// perm(M) = sum over nonempty column subsets T of (-1)^{n-|T|} prod_i
/// (row sums restricted to T). Each step toggles one column in the running
/// row sums, giving O(2^n * n) with exact arithmetic on the exact backend.
template <ScalarType S>
S permanent_ryser(const SquareMatrix<S>& m, int max_n = kRyserPermanentLimit) {
    const int n = m.size();
    if (n > max_n || n > 62)  // 62: the subset mask must fit a 64-bit word
        throw SizeLimit("permanent_ryser refused: n=" + std::to_string(n) + " exceeds limit " +
                        std::to_string(std::min(max_n, 62)) + " (2^n cost)");
    if (n == 0) return scalar_traits<S>::from_int(1);

    std::vector<S> row_sum(n, S{});
    S total{};
    std::uint64_t gray = 0;
    for (std::uint64_t iter = 1; iter < (std::uint64_t(1) << n); ++iter) {
        const std::uint64_t next = iter ^ (iter >> 1);
        const std::uint64_t diff = next ^ gray;
        const int j = std::countr_zero(diff);
        if (next & diff)
            for (int i = 0; i < n; ++i) row_sum[i] += m.at(i, j);
        else
            for (int i = 0; i < n; ++i) row_sum[i] -= m.at(i, j);
        gray = next;

        S prod = scalar_traits<S>::from_int(1);
        for (int i = 0; i < n; ++i) prod *= row_sum[i];
        if ((n - std::popcount(gray)) & 1)
            total -= prod;
        else
            total += prod;
    }
    return total;
}

/// <x_1...x_n | y_1...y_n> as the permanent of the Gram matrix
/// G_ij = <x_i|y_j>. The empty product pair gives <1|1> = 1.
template <ScalarType S>
S gram_inner(const std::vector<OneParticleVector<S>>& xs,
             const std::vector<OneParticleVector<S>>& ys,
             int max_n = kRyserPermanentLimit) {
    if (xs.size() != ys.size())
        throw DimensionMismatch("gram_inner: product lengths differ");
    const int n = static_cast<int>(xs.size());
    SquareMatrix<S> g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) g.at(i, j) = one_particle_inner(xs[i], ys[j]);
    }
    return permanent_ryser(g, max_n);
}

}  // namespace fockbench

#endif
