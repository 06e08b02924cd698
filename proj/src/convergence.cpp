#include "fockbench/convergence.hpp"

#include <cmath>
#include <sstream>

namespace fockbench {

namespace {

std::string rational_str(const BigRational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/// t_{n+1}/t_n >= 1, decided exactly. With a = p/q the q-th power of the
/// ratio is ((n+1)/n)^p * b^q * (n+1)^(k*q), a plain rational.
bool ratio_at_least_one(const SeqSpec& s, long n) {
    long p = numerator(s.n_exp).convert_to<long>();
    long q = denominator(s.n_exp).convert_to<long>();
    BigRational r = rational_pow(BigRational(n + 1, n), p);
    r *= rational_pow(s.base, q);
    r *= rational_pow(BigRational(n + 1), s.fact_exp * q);
    return r >= 1;
}

/// t_m >= t_j, decided exactly through q-th powers of both terms.
bool term_at_least(const SeqSpec& s, long m, long j) {
    long q = denominator(s.n_exp).convert_to<long>();
    // (t_m / t_j)^q = (m/j)^p * b^(q(m-j)) * (m!/j!)^(kq)
    long p = numerator(s.n_exp).convert_to<long>();
    BigRational r = rational_pow(BigRational(m, j), p);
    r *= rational_pow(s.base, q * (m - j));
    if (s.fact_exp != 0) {
        BigInt ratio = 1;  // m!/j! for m >= j (or inverted below)
        long lo = std::min(m, j), hi = std::max(m, j);
        for (long i = lo + 1; i <= hi; ++i) ratio *= i;
        BigRational f = m >= j ? BigRational(ratio) : BigRational(1, ratio);
        r *= rational_pow(f, s.fact_exp * q);
    }
    return r >= 1;
}

/// A rational u with u^q >= x (x > 0) within 2^-60 relative of x^(1/q):
/// bracket by powers of two, then bisect. Used to report a certified upper
/// bound when the supremum itself is irrational.
BigRational qth_root_upper_bound(const BigRational& x, long q) {
    if (q == 1) return x;
    BigRational u = 1;
    while (rational_pow(u, q) < x) u *= 2;
    while (u / 2 > 0 && rational_pow(u / 2, q) >= x) u /= 2;
    BigRational lo = u / 2, hi = u;  // lo^q < x <= hi^q
    for (int iter = 0; iter < 60; ++iter) {
        BigRational mid = (lo + hi) / 2;
        if (rational_pow(mid, q) >= x)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

BigRational floor_rational(const BigRational& r) {
    BigInt n = numerator(r), d = denominator(r);
    BigInt fq = n / d;
    if (n < 0 && fq * d != n) --fq;
    return BigRational(fq);
}

}  // namespace

const char* convergence_rule_name(ConvergenceRule r) {
    switch (r) {
        case ConvergenceRule::FactorialDominates: return "factorial-dominates";
        case ConvergenceRule::Geometric: return "geometric";
        case ConvergenceRule::PSeries: return "p-series";
        case ConvergenceRule::TermGrowth: return "term-growth";
    }
    return "?";
}

ConvergenceVerdict classify(const SeqSpec& s) {
    ConvergenceVerdict v;
    if (s.fact_exp < 0) {
        v.converges = true;
        v.rule = ConvergenceRule::FactorialDominates;
        v.note = "factorial decay (n!)^" + std::to_string(s.fact_exp) +
                 " dominates every polynomial and geometric factor";
        return v;
    }
    if (s.fact_exp > 0) {
        v.converges = false;
        v.rule = ConvergenceRule::TermGrowth;
        v.note = "factorial growth (n!)^" + std::to_string(s.fact_exp) +
                 " sends the terms to infinity";
        return v;
    }
    if (s.base != 1) {
        v.converges = s.base < 1;
        v.rule = ConvergenceRule::Geometric;
        v.note = "geometric base " + rational_str(s.base) +
                 (v.converges ? " < 1" : " > 1");
        return v;
    }
    if (s.n_exp < -1) {
        v.converges = true;
        v.rule = ConvergenceRule::PSeries;
        v.note = "p-series with exponent " + rational_str(s.n_exp) + " < -1";
    } else if (s.n_exp < 0) {
        v.converges = false;
        v.rule = ConvergenceRule::PSeries;
        v.note = "p-series with exponent " + rational_str(s.n_exp) + " in [-1, 0)";
    } else {
        v.converges = false;
        v.rule = ConvergenceRule::TermGrowth;
        v.note = "terms n^" + rational_str(s.n_exp) + " do not tend to zero";
    }
    return v;
}

namespace {

/// Pairwise range sum with incremental terms inside each leaf. Summing
/// left-to-right would pay one gcd normalization per term on an
/// ever-growing denominator; the tree pays the big gcds only O(log N)
/// times, which is what makes exact sums at N = 10^4 feasible.
BigRational exact_sum_tree(const SeqSpec& s, long a, long lo, long hi) {
    if (hi - lo < 32) {
        BigRational term = term_value_exact(s, lo);
        BigRational acc = term;
        for (long n = lo; n < hi; ++n) {
            // t_{n+1} = t_n * ((n+1)/n)^a * b * (n+1)^k
            term *= rational_pow(BigRational(n + 1, n), a);
            term *= s.base;
            term *= rational_pow(BigRational(n + 1), s.fact_exp);
            acc += term;
        }
        return acc;
    }
    long mid = lo + (hi - lo) / 2;
    return exact_sum_tree(s, a, lo, mid) + exact_sum_tree(s, a, mid + 1, hi);
}

}  // namespace

PartialSumExact partial_sum_exact(const SeqSpec& s, long N) {
    if (N < s.start) throw Error("partial sum endpoint below the sequence start");
    if (denominator(s.n_exp) != 1)
        throw Error("exact partial sums require an integer n-exponent; use the float backend");
    long a = numerator(s.n_exp).convert_to<long>();

    PartialSumExact out{exact_sum_tree(s, a, s.start, N), std::nullopt};
    if (s.fact_exp == 0 && s.base == 1 && s.n_exp < -1) {
        // integral test: sum_{n>N} C n^a <= C * N^(a+1) / (-a-1)
        out.tail_bound = s.coeff * rational_pow(BigRational(N), a + 1) / BigRational(-a - 1);
    }
    return out;
}

PartialSumFloat partial_sum_float(const SeqSpec& s, long N) {
    if (N < s.start) throw Error("partial sum endpoint below the sequence start");
    double sum = 0.0, comp = 0.0;  // Neumaier compensation
    for (long n = s.start; n <= N; ++n) {
        double t = term_value(s, n);
        if (!std::isfinite(t))
            throw Error("float overflow while summing diverging terms (term at n=" +
                        std::to_string(n) + ")");
        double next = sum + t;
        if (std::abs(sum) >= std::abs(t))
            comp += (sum - next) + t;
        else
            comp += (t - next) + sum;
        sum = next;
        if (!std::isfinite(sum))
            throw Error("float overflow while summing diverging terms (partial sum at n=" +
                        std::to_string(n) + ")");
    }
    PartialSumFloat out{sum + comp, std::nullopt};
    if (s.fact_exp == 0 && s.base == 1 && s.n_exp < -1) {
        double a = rational_to_double(s.n_exp);
        out.tail_bound = rational_to_double(s.coeff) *
                         std::pow(static_cast<double>(N), a + 1.0) / (-a - 1.0);
    }
    return out;
}

std::optional<ThresholdCrossing> find_threshold_crossing(const SeqSpec& s, double threshold,
                                                         long n_limit) {
    double sum = 0.0;
    for (long n = s.start; n <= n_limit; ++n) {
        double t = term_value(s, n);
        if (!std::isfinite(t)) throw Error("term overflow before crossing the threshold");
        sum += t;
        if (sum > threshold) return ThresholdCrossing{n, sum};
    }
    return std::nullopt;
}

TermSupremum term_supremum(const SeqSpec& s, long horizon) {
    const long k = s.fact_exp;
    const BigRational& a = s.n_exp;
    const BigRational& b = s.base;
    TermSupremum out;

    // Unbounded cases: terms tend to infinity.
    if (k > 0 || (k == 0 && b > 1) || (k == 0 && b == 1 && a > 0)) return out;

    auto finish = [&](long at) {
        out.bounded = true;
        out.attained_at = at;
        long q = denominator(s.n_exp).convert_to<long>();
        if (q == 1) {
            out.value = term_value_exact(s, at);
        } else {
            SeqSpec powered = s;  // t_n^q has integer exponents throughout
            powered.coeff = rational_pow(s.coeff, q);
            powered.n_exp = BigRational(numerator(s.n_exp));
            powered.base = rational_pow(s.base, q);
            powered.fact_exp = s.fact_exp * q;
            out.value = qth_root_upper_bound(term_value_exact(powered, at), q);
            out.is_upper_estimate = true;
        }
        return out;
    };

    if (k == 0 && b == 1) return finish(s.start);  // a <= 0: non-increasing
    if (k == 0 && a <= 0) return finish(s.start);  // b < 1: strictly decreasing

    // Remaining cases: k = 0, b < 1, a > 0 (ratio decreasing in n), or
    // k < 0 (ratio rho(n) = t_{n+1}/t_n unimodal with peak near a/k, then
    // decreasing to 0). The maximum term sits at the start or at the end of
    // the increasing run, i.e. the first n past the ratio peak with
    // rho(n) < 1.
    long peak = s.start;
    if (k < 0) {
        BigRational switch_over = a / BigRational(k);  // rho increases below a/k
        BigRational fl = floor_rational(switch_over);
        long fl_long = numerator(fl).convert_to<long>();
        peak = std::max(s.start, fl_long + 1);
        if (peak > horizon)
            throw Error("term supremum switch-over beyond scan horizon " +
                        std::to_string(horizon));
    }

    bool hump = ratio_at_least_one(s, peak) ||
                (peak > s.start && ratio_at_least_one(s, peak - 1));
    if (!hump) return finish(s.start);

    // The increasing run ends at the first n past the ratio peak with
    // rho(n) < 1; that index carries the local maximum. rho is decreasing
    // there, so doubling plus bisection with exact comparisons locates it.
    long crossing;
    if (!ratio_at_least_one(s, peak)) {
        crossing = peak;  // rho(peak-1) >= 1 put the run's end right here
    } else {
        long lo = peak, hi = peak + 1;
        while (ratio_at_least_one(s, hi)) {
            lo = hi;
            hi *= 2;
            if (hi > horizon)
                throw Error("term supremum switch-over beyond scan horizon " +
                            std::to_string(horizon));
        }
        while (lo + 1 < hi) {
            long mid = lo + (hi - lo) / 2;
            if (ratio_at_least_one(s, mid))
                lo = mid;
            else
                hi = mid;
        }
        crossing = hi;
    }
    long best = term_at_least(s, crossing, s.start) ? crossing : s.start;
    return finish(best);
}

DomainReport domain_report(const SeqSpec& lambda_sq_spec, const std::vector<long>& N_values,
                           double divergence_threshold) {
    DomainReport r;
    r.lambda_sq = lambda_sq_spec;
    r.fock_terms = seq_scale(lambda_sq_spec, 0, -1);       // |lambda_n|^2 / n!
    r.sqrtN_terms = seq_scale(r.fock_terms, 1, 0);         // |lambda_n|^2 / (n-1)!
    r.in_fock = classify(r.fock_terms);
    r.in_sqrtN_domain = classify(r.sqrtN_terms);

    TermSupremum sup = term_supremum(r.sqrtN_terms);
    if (sup.bounded) {
        r.annihilator_uniform_bound = sup.value;
        r.bound_attained_at = sup.attained_at;
        r.bound_is_upper_estimate = sup.is_upper_estimate;
    }

    auto witness = [&](const char* name, const SeqSpec& sp, const ConvergenceVerdict& verdict,
                       long N) {
        SeriesWitness w;
        w.series = name;
        w.N = N;
        // factorial-decay sums carry (n!)-sized denominators, so their exact
        // window is shorter than the polynomial/geometric one
        long exact_limit = sp.fact_exp == 0 ? kExactPartialSumLimit
                                            : kExactFactorialSumLimit;
        bool exact_ok = verdict.converges && N <= exact_limit &&
                        denominator(sp.n_exp) == 1;
        try {
            if (exact_ok) {
                PartialSumExact ps = partial_sum_exact(sp, N);
                w.sum = ps.value;
                if (ps.tail_bound) w.tail_bound = *ps.tail_bound;
            } else {
                PartialSumFloat ps = partial_sum_float(sp, N);
                w.sum = ps.value;
                if (ps.tail_bound) w.tail_bound = *ps.tail_bound;
            }
        } catch (const Error&) {
            // Diverging too fast for a plain sum: report the threshold
            // crossing instead of a numeric infinity.
            auto crossing = find_threshold_crossing(sp, divergence_threshold, N);
            if (!crossing) throw;
            w.N = crossing->n;
            w.sum = crossing->sum;
            w.crossed_threshold = divergence_threshold;
        }
        r.witnesses.push_back(std::move(w));
    };

    for (long N : N_values) {
        witness("fock", r.fock_terms, r.in_fock, N);
        witness("sqrtN", r.sqrtN_terms, r.in_sqrtN_domain, N);
    }
    return r;
}

}  // namespace fockbench
