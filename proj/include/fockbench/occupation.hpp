#ifndef FOCKBENCH_OCCUPATION_HPP
#define FOCKBENCH_OCCUPATION_HPP

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "fockbench/errors.hpp"
#include "fockbench/scalar.hpp"

namespace fockbench {

/// Multi-index alpha in N^d addressing the monomial e_1^{a_1} ... e_d^{a_d}.
/// The grade |alpha| is the monomial degree. Indices are ordered by grade
/// first and lexicographically within a grade, so sparse maps iterate in a
/// stable, grade-sorted order.
class OccupationIndex {
public:
    explicit OccupationIndex(std::vector<int> counts) : counts_(std::move(counts)) {
        if (counts_.empty()) throw DimensionMismatch("occupation index needs dimension >= 1");
        for (int c : counts_)
            if (c < 0) throw Error("occupation counts must be nonnegative");
    }

    static OccupationIndex zero(int d) { return OccupationIndex(std::vector<int>(d, 0)); }

    /// Basis monomial e_i (unit count in slot i).
    static OccupationIndex unit(int d, int i) {
        std::vector<int> c(d, 0);
        c.at(i) = 1;
        return OccupationIndex(std::move(c));
    }

    int dimension() const { return static_cast<int>(counts_.size()); }
    int operator[](int i) const { return counts_[i]; }
    const std::vector<int>& counts() const { return counts_; }

    int grade() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

    OccupationIndex raised(int i) const {
        std::vector<int> c = counts_;
        ++c[i];
        return OccupationIndex(std::move(c));
    }

    OccupationIndex lowered(int i) const {
        if (counts_[i] == 0) throw Error("cannot lower an empty occupation slot");
        std::vector<int> c = counts_;
        --c[i];
        return OccupationIndex(std::move(c));
    }

    /// prod_i alpha_i!, the squared norm of the monomial e^alpha.
    BigInt factorial_product() const {
        BigInt p = 1;
        for (int c : counts_) p *= factorial(c);
        return p;
    }

    friend bool operator==(const OccupationIndex& a, const OccupationIndex& b) {
        return a.counts_ == b.counts_;
    }
    friend std::strong_ordering operator<=>(const OccupationIndex& a, const OccupationIndex& b) {
        if (auto c = a.grade() <=> b.grade(); c != 0) return c;
        return a.counts_ <=> b.counts_;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(counts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> counts_;
};

/// Fixed parameters of a truncated symmetric-algebra workspace: one-particle
/// dimension d and hard grade cutoff n_max. The scalar backend is carried by
/// the vector's scalar type, not stored here.
struct Workspace {
    int d = 1;
    int n_max = 0;

    void validate() const {
        if (d < 1) throw Error("workspace dimension d must be >= 1");
        if (n_max < 0) throw Error("workspace grade cutoff n_max must be >= 0");
    }

    friend bool operator==(const Workspace&, const Workspace&) = default;
};

/// <e^alpha | e^beta> = delta_{alpha,beta} * prod_i alpha_i!.
/// Integer-valued in both backends (exact as long as the value fits a double
/// on the float backend, which holds through grade 18).
template <ScalarType S>
S monomial_inner(const OccupationIndex& alpha, const OccupationIndex& beta) {
    if (alpha.dimension() != beta.dimension())
        throw DimensionMismatch("monomial_inner: occupation indices over different dimensions");
    if (!(alpha == beta)) return S{};
    return scalar_traits<S>::from_bigint(alpha.factorial_product());
}

}  // namespace fockbench

#endif
