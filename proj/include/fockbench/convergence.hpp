#ifndef FOCKBENCH_CONVERGENCE_HPP
#define FOCKBENCH_CONVERGENCE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fockbench/seq_spec.hpp"

namespace fockbench {

enum class ConvergenceRule { FactorialDominates, Geometric, PSeries, TermGrowth };

const char* convergence_rule_name(ConvergenceRule r);

/// Total verdict on sum t_n; the restricted grammar makes this decidable
/// with no "unknown" case.
struct ConvergenceVerdict {
    bool converges = false;
    ConvergenceRule rule = ConvergenceRule::PSeries;
    std::string note;
};

/// Four-case rule: k < 0 converges (factorial decay); k > 0 diverges (terms
/// blow up); k = 0 compares the geometric base with 1 and falls back to the
/// p-series test at b = 1.
ConvergenceVerdict classify(const SeqSpec& s);

struct PartialSumExact {
    BigRational value;
    std::optional<BigRational> tail_bound;
};

struct PartialSumFloat {
    double value = 0;
    std::optional<double> tail_bound;
};

/// sum_{n=start}^{N} t_n with exact rational accumulation. Requires an
/// integer n-exponent. A tail bound (integral test, C*N^(a+1)/(-a-1)) is
/// attached for the decreasing convergent case k=0, b=1, a < -1.
PartialSumExact partial_sum_exact(const SeqSpec& s, long N);

/// Same sum with compensated (Neumaier) float summation; any rational
/// n-exponent is allowed. Throws on float overflow, which only diverging
/// factorial/geometric terms can trigger.
PartialSumFloat partial_sum_float(const SeqSpec& s, long N);

/// Walks partial sums until they exceed `threshold`; divergence evidence
/// that never reports a numeric infinity. nullopt if not crossed by n_limit.
struct ThresholdCrossing {
    long n = 0;
    double sum = 0;
};
std::optional<ThresholdCrossing> find_threshold_crossing(const SeqSpec& s, double threshold,
                                                         long n_limit);

/// sup_n t_n over n >= start, decided exactly. The term ratio
/// t_{n+1}/t_n = b * (1+1/n)^a * (n+1)^k is compared with 1 through q-th
/// powers (q = denominator of a), so the scan and the switch-over location
/// are exact for every rational a. The supremum value itself is exact for
/// integer a; otherwise `value` is a certified rational upper bound within
/// 1e-15 relative of the (irrational) supremum and `is_upper_estimate` is
/// set.
struct TermSupremum {
    bool bounded = false;
    BigRational value{0};
    long attained_at = 0;
    bool is_upper_estimate = false;
};
TermSupremum term_supremum(const SeqSpec& s, long horizon = 1000000);

/// One numeric witness attached to a domain report: a partial sum of one of
/// the two series at a configured N (exact rational when the series
/// converges, N <= 10^4 and the exponent is an integer; float otherwise),
/// or a threshold crossing when the plain sum would overflow.
struct SeriesWitness {
    std::string series;  // "fock" or "sqrtN"
    long N = 0;
    std::variant<BigRational, double> sum;
    std::optional<std::variant<BigRational, double>> tail_bound;
    std::optional<double> crossed_threshold;
};

/// Verdict triple of the counterexample machinery: membership of
/// Phi = sum lambda_n u_n^n / n! in Fock space (sum |lambda_n|^2/n!), in the
/// square-root number domain (sum |lambda_n|^2/(n-1)!), and the uniform
/// annihilator bound K = sup_n |lambda_n|^2/(n-1)! when finite, which gives
/// ||a(v) Phi||^2 <= K ||v||^2 for every v.
struct DomainReport {
    SeqSpec lambda_sq;
    SeqSpec fock_terms;    // |lambda_n|^2 / n!
    SeqSpec sqrtN_terms;   // |lambda_n|^2 / (n-1)!
    ConvergenceVerdict in_fock;
    ConvergenceVerdict in_sqrtN_domain;
    std::optional<BigRational> annihilator_uniform_bound;
    long bound_attained_at = 0;
    bool bound_is_upper_estimate = false;
    std::vector<SeriesWitness> witnesses;
};

inline constexpr long kExactPartialSumLimit = 10000;
inline constexpr long kExactFactorialSumLimit = 2000;

DomainReport domain_report(const SeqSpec& lambda_sq_spec,
                           const std::vector<long>& N_values = {100, 10000, 100000},
                           double divergence_threshold = 12.0);

}  // namespace fockbench

#endif
