#include <doctest.h>

#include "fockbench/convergence.hpp"
#include "fockbench/counterexample.hpp"

using namespace fockbench;

// Reference values computed independently at 30-digit precision:
// sum_{n<=1e5} 1/n^2, its limit, the harmonic sum at 1e5, and the exact
// rational sums at N = 12.
static const double kSumInvSq1e5 = 1.6449240668982263;
static const double kInvSqLimit = 1.6449340668482264;
static const double kHarmonic1e5 = 12.090146129863428;

TEST_CASE("classify: the four-case rule") {
    auto v = classify(parse_seq_spec("n^-2"));
    CHECK(v.converges);
    CHECK(v.rule == ConvergenceRule::PSeries);

    v = classify(parse_seq_spec("n^-1"));
    CHECK(!v.converges);
    CHECK(v.rule == ConvergenceRule::PSeries);

    v = classify(parse_seq_spec("fact(n)^-1"));
    CHECK(v.converges);
    CHECK(v.rule == ConvergenceRule::FactorialDominates);

    v = classify(parse_seq_spec("fact(n)^1"));
    CHECK(!v.converges);
    CHECK(v.rule == ConvergenceRule::TermGrowth);

    v = classify(parse_seq_spec("1/2^n"));
    CHECK(v.converges);
    CHECK(v.rule == ConvergenceRule::Geometric);

    v = classify(parse_seq_spec("2^n * n^-100"));
    CHECK(!v.converges);
    CHECK(v.rule == ConvergenceRule::Geometric);

    v = classify(parse_seq_spec("n^-3/2"));
    CHECK(v.converges);

    v = classify(parse_seq_spec("n^-1/2"));
    CHECK(!v.converges);

    v = classify(parse_seq_spec("3"));
    CHECK(!v.converges);
    CHECK(v.rule == ConvergenceRule::TermGrowth);

    // factorial decay beats any geometric growth
    v = classify(parse_seq_spec("1000^n * fact(n)^-1"));
    CHECK(v.converges);
    CHECK(v.rule == ConvergenceRule::FactorialDominates);
}

TEST_CASE("partial_sum_exact: frozen rational sums at N = 12") {
    auto inv_sq = partial_sum_exact(parse_seq_spec("n^-2"), 12);
    CHECK(inv_sq.value == BigRational(240505109, 153679680));
    REQUIRE(inv_sq.tail_bound.has_value());
    CHECK(*inv_sq.tail_bound == BigRational(1, 12));

    auto harmonic = partial_sum_exact(parse_seq_spec("n^-1"), 12);
    CHECK(harmonic.value == BigRational(86021, 27720));
    CHECK(!harmonic.tail_bound.has_value());

    // N = start returns the first term alone
    auto s = parse_seq_spec("5 * n^-2 * 1/2^n");
    CHECK(partial_sum_exact(s, 1).value == term_value_exact(s, 1));

    CHECK_THROWS_AS(partial_sum_exact(parse_seq_spec("n^-3/2"), 10), Error);
    CHECK_THROWS_AS(partial_sum_exact(parse_seq_spec("n^-2"), 0), Error);
}

TEST_CASE("partial_sum_exact agrees with direct term-by-term accumulation") {
    auto specs = {"n^-2", "fact(n)^-1", "2 * 1/2^n", "n^2 * fact(n)^-1", "n^-1"};
    for (const char* text : specs) {
        SeqSpec s = parse_seq_spec(text);
        BigRational direct;
        for (long n = 1; n <= 30; ++n) direct += term_value_exact(s, n);
        CHECK(partial_sum_exact(s, 30).value == direct);
    }
}

TEST_CASE("partial_sum_float: high-N witnesses") {
    auto inv_sq = partial_sum_float(parse_seq_spec("n^-2"), 100000);
    CHECK(inv_sq.value == doctest::Approx(kSumInvSq1e5).epsilon(1e-10));
    REQUIRE(inv_sq.tail_bound.has_value());
    CHECK(*inv_sq.tail_bound == doctest::Approx(1e-5).epsilon(1e-9));
    CHECK(std::abs(inv_sq.value - kInvSqLimit) < 1e-4);

    auto harmonic = partial_sum_float(parse_seq_spec("n^-1"), 100000);
    CHECK(harmonic.value == doctest::Approx(kHarmonic1e5).epsilon(1e-10));
    CHECK(harmonic.value > 12.0);

    CHECK_THROWS_AS(partial_sum_float(parse_seq_spec("fact(n)^1"), 100000), Error);
}

TEST_CASE("float and exact partial sums agree where both apply") {
    for (const char* text : {"n^-2", "fact(n)^-1", "3 * 1/2^n"}) {
        SeqSpec s = parse_seq_spec(text);
        long N = parse_seq_spec(text).fact_exp == 0 ? 2000 : 400;
        double exact = rational_to_double(partial_sum_exact(s, N).value);
        double approx = partial_sum_float(s, N).value;
        CHECK(approx == doctest::Approx(exact).epsilon(1e-12));
    }
}

TEST_CASE("classifier is consistent with partial-sum behavior") {
    const long Ns[] = {10, 100, 1000, 10000, 100000};
    for (const char* text : {"n^-2", "n^-3/2", "fact(n)^-1", "1/2^n", "n^2 * 1/2^n"}) {
        SeqSpec s = parse_seq_spec(text);
        REQUIRE(classify(s).converges);
        double prev = 0;
        double cap = -1;
        for (long N : Ns) {
            auto ps = partial_sum_float(s, N);
            CHECK(ps.value >= prev);  // positive terms: monotone
            prev = ps.value;
            if (ps.tail_bound && cap < 0) cap = ps.value + *ps.tail_bound;
        }
        if (cap > 0) CHECK(prev <= cap);  // bounded by value + tail bound
    }
    // the harmonic case crosses the configured threshold by N = 1e5
    auto crossing = find_threshold_crossing(parse_seq_spec("n^-1"), 12.0, 100000);
    REQUIRE(crossing.has_value());
    CHECK(crossing->sum > 12.0);
    CHECK(crossing->n < 100000);
    CHECK(!find_threshold_crossing(parse_seq_spec("n^-2"), 12.0, 100000).has_value());
}

TEST_CASE("term_supremum: hand-computed cases") {
    // shifted terms of the canonical counterexample: 1/n, sup = 1 at n = 1
    auto sup = term_supremum(parse_seq_spec("n^-1"));
    CHECK(sup.bounded);
    CHECK(sup.value == 1);
    CHECK(sup.attained_at == 1);
    CHECK(!sup.is_upper_estimate);

    // n^2 / 2^n rises to 9/8 at n = 3 before the geometric factor wins
    sup = term_supremum(parse_seq_spec("n^2 * 1/2^n"));
    CHECK(sup.bounded);
    CHECK(sup.value == BigRational(9, 8));
    CHECK(sup.attained_at == 3);

    // 100^n / n! peaks at n = 100 (ratio hits exactly 1 at n = 99)
    sup = term_supremum(parse_seq_spec("100^n * fact(n)^-1"));
    CHECK(sup.bounded);
    CHECK(sup.attained_at == 100);
    CHECK(sup.value == BigRational(rational_pow(BigRational(100), 100)) /
                           BigRational(factorial(100)));

    // constant sequences are their own supremum
    sup = term_supremum(parse_seq_spec("7/2"));
    CHECK(sup.bounded);
    CHECK(sup.value == BigRational(7, 2));

    CHECK(!term_supremum(parse_seq_spec("n^1")).bounded);
    CHECK(!term_supremum(parse_seq_spec("2^n")).bounded);
    CHECK(!term_supremum(parse_seq_spec("fact(n)^1")).bounded);
}

TEST_CASE("term_supremum: brute-force oracle over a float scan") {
    for (const char* text :
         {"n^-1", "n^2 * 1/2^n", "n^5 * 1/2^n", "n^3 * fact(n)^-1", "n^-3/2",
          "9/10^n * n^4", "fact(n)^-2 * n^6"}) {
        SeqSpec s = parse_seq_spec(text);
        auto sup = term_supremum(s);
        REQUIRE(sup.bounded);
        double best = 0;
        long best_at = 0;
        for (long n = 1; n <= 2000; ++n) {
            double t = term_value(s, n);
            if (t > best) {
                best = t;
                best_at = n;
            }
        }
        CHECK(rational_to_double(sup.value) == doctest::Approx(best).epsilon(1e-9));
        CHECK(sup.attained_at == best_at);
        // certified upper bound: every scanned term stays below the value
        for (long n = 1; n <= 2000; ++n)
            CHECK(term_value(s, n) <= rational_to_double(sup.value) * (1 + 1e-12));
    }
}

TEST_CASE("domain_report: the canonical counterexample family") {
    auto report = domain_report(counterexample_lambda_sq_spec(), {100, 10000, 100000}, 12.0);

    CHECK(report.fock_terms == parse_seq_spec("n^-2"));
    CHECK(report.sqrtN_terms == parse_seq_spec("n^-1"));
    CHECK(report.in_fock.converges);
    CHECK(!report.in_sqrtN_domain.converges);
    REQUIRE(report.annihilator_uniform_bound.has_value());
    CHECK(*report.annihilator_uniform_bound == 1);
    CHECK(report.bound_attained_at == 1);
    CHECK(!report.bound_is_upper_estimate);

    REQUIRE(report.witnesses.size() == 6);
    // fock witnesses at N <= 1e4 are exact rationals; the 1e5 one is float
    CHECK(std::holds_alternative<BigRational>(report.witnesses[0].sum));
    CHECK(std::holds_alternative<BigRational>(report.witnesses[2].sum));
    CHECK(std::holds_alternative<double>(report.witnesses[4].sum));
    double fock_1e5 = std::get<double>(report.witnesses[4].sum);
    CHECK(std::abs(fock_1e5 - kInvSqLimit) < 1e-4);
    REQUIRE(report.witnesses[4].tail_bound.has_value());
    CHECK(std::get<double>(*report.witnesses[4].tail_bound) <= 1.0 / 100000 + 1e-18);

    // sqrtN witnesses are float (divergence evidence); the 1e5 one tops 12
    const auto& w = report.witnesses[5];
    CHECK(w.series == "sqrtN");
    CHECK(std::get<double>(w.sum) == doctest::Approx(kHarmonic1e5).epsilon(1e-10));
    CHECK(std::get<double>(w.sum) > 12.0);
}

TEST_CASE("domain_report: fast decay puts the family in every domain") {
    auto report = domain_report(parse_seq_spec("fact(n)^-1"), {100}, 12.0);
    CHECK(report.in_fock.converges);
    CHECK(report.in_sqrtN_domain.converges);
    REQUIRE(report.annihilator_uniform_bound.has_value());
    // shifted terms n/(n!)^2: 1, 1/2, ... so K = 1 at n = 1
    CHECK(*report.annihilator_uniform_bound == 1);
}

TEST_CASE("domain_report: |lambda_n|^2 = n! stays outside Fock space") {
    auto report = domain_report(parse_seq_spec("fact(n)^1"), {100}, 12.0);
    CHECK(!report.in_fock.converges);  // constant grade norms
    CHECK(!report.in_sqrtN_domain.converges);
    CHECK(!report.annihilator_uniform_bound.has_value());
}

TEST_CASE("term_supremum: scan horizon is a hard error, not a wrong answer") {
    // 10000^n / n! keeps rising until n ~ 10^4
    auto s = parse_seq_spec("10000^n * fact(n)^-1");
    CHECK_THROWS_AS(term_supremum(s, 1000), Error);
    auto sup = term_supremum(s, 20000);
    CHECK(sup.bounded);
    CHECK(sup.attained_at == 10000);
}

TEST_CASE("domain_report: fractional exponents still give exact sup locations") {
    // shifted terms sqrt(n)/n! decrease from the start: sup = 1 at n = 1,
    // certified through 2nd powers
    auto report = domain_report(parse_seq_spec("n^-1/2"), {100}, 12.0);
    CHECK(report.in_fock.converges);
    CHECK(report.in_sqrtN_domain.converges);
    REQUIRE(report.annihilator_uniform_bound.has_value());
    CHECK(*report.annihilator_uniform_bound == 1);
    CHECK(report.bound_attained_at == 1);
}

TEST_CASE("domain_report: irrational supremum is reported as a certified upper bound") {
    // |lambda_n|^2 = n^(5/2) (1/2)^n n!: the shifted terms n^(7/2)/2^n peak
    // at n = 5 with the irrational value 125 sqrt(5)/32, so K is flagged as
    // an upper estimate and must still dominate every term
    auto report = domain_report(parse_seq_spec("n^5/2 * 1/2^n * fact(n)^1"), {100}, 12.0);
    CHECK(report.in_fock.converges);
    CHECK(report.in_sqrtN_domain.converges);
    REQUIRE(report.annihilator_uniform_bound.has_value());
    CHECK(report.bound_is_upper_estimate);
    CHECK(report.bound_attained_at == 5);
    double k = rational_to_double(*report.annihilator_uniform_bound);
    CHECK(k == doctest::Approx(125.0 * std::sqrt(5.0) / 32.0).epsilon(1e-12));
    CHECK(k >= 125.0 * std::sqrt(5.0) / 32.0 * (1 - 1e-15));
    for (long n = 1; n <= 500; ++n)
        CHECK(term_value(report.sqrtN_terms, n) <= k * (1 + 1e-12));
}

TEST_CASE("domain_report: overflowing divergent series fall back to crossing witnesses") {
    auto report = domain_report(parse_seq_spec("fact(n)^2"), {100000}, 12.0);
    CHECK(!report.in_fock.converges);
    const auto& w = report.witnesses[0];
    REQUIRE(w.crossed_threshold.has_value());
    CHECK(*w.crossed_threshold == 12.0);
    CHECK(std::get<double>(w.sum) > 12.0);
    CHECK(w.N < 100000);
}
