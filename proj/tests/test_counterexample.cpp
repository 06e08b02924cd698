#include <doctest.h>

#include "fockbench/counterexample.hpp"
#include "fockbench/operators.hpp"

using namespace fockbench;
using C = std::complex<double>;

TEST_CASE("d = 1 truncation is the single basis vector") {
    auto phi = counterexample_truncate(1);
    REQUIRE(phi.term_count() == 1);
    const auto& [alpha, c] = *phi.terms().begin();
    CHECK(alpha == OccupationIndex({1}));
    CHECK(c.real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(norm_sq(phi) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(number_sqrt_norm_sq(phi) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("grade norms follow 1/n^2") {
    auto phi = counterexample_truncate(3);
    for (int n = 1; n <= 3; ++n)
        CHECK(norm_sq(grade_project(phi, n)) ==
              doctest::Approx(1.0 / (n * n)).epsilon(1e-13));
    CHECK(norm_sq(grade_project(phi, 0)) == 0.0);
}

TEST_CASE("annihilator norm matches the weighted coordinate sum and its bound") {
    auto phi = counterexample_truncate(3);
    OneParticleVector<C> v({1.0, 1.0, 1.0});
    double got = norm_sq(annihilate(v, phi));
    CHECK(got == doctest::Approx(1.0 + 0.5 + 1.0 / 3.0).epsilon(1e-13));  // 11/6
    CHECK(got <= v.norm_sq());
    CHECK(v.norm_sq() == 3.0);
}

TEST_CASE("d = 12 truncation: bounded norm, growing square-root energy") {
    auto phi = counterexample_truncate(12);
    for (int n = 1; n <= 12; ++n)
        CHECK(std::abs(norm_sq(grade_project(phi, n)) - 1.0 / (n * n)) <= 1e-12);

    // frozen references: H_12 = 86021/27720 and sum_{n<=12} 1/n^2
    CHECK(std::abs(number_sqrt_norm_sq(phi) - 3.103210678210678) <= 1e-12);
    CHECK(std::abs(norm_sq(phi) - 1.5649766384209025) <= 1e-12);

    // the square-root energy equals the annihilator-norm sum here too
    auto rep = theorem2_identity_report(phi);
    CHECK(rep.equal);
}

TEST_CASE("every truncation depth up to 12 stays consistent with the closed forms") {
    // bounded Fock norm, square-root energy growing like the harmonic sum
    BigRational harmonic, norm_limit_part;
    for (int d = 1; d <= 12; ++d) {
        harmonic += BigRational(1, d);
        norm_limit_part += BigRational(1, BigInt(d) * d);
        auto phi = counterexample_truncate(d);
        for (int n = 1; n <= d; ++n)
            CHECK(std::abs(norm_sq(grade_project(phi, n)) - 1.0 / (n * n)) <= 1e-12);
        CHECK(std::abs(norm_sq(phi) - rational_to_double(norm_limit_part)) <= 1e-12);
        double energy = number_sqrt_norm_sq(phi);
        CHECK(std::abs(energy - rational_to_double(harmonic)) <= 1e-12);
        // the annihilator-norm route gives the same energy
        double via_annihilators = 0;
        for (int j = 0; j < d; ++j)
            via_annihilators +=
                norm_sq(annihilate(OneParticleVector<C>::basis(d, j), phi));
        CHECK(std::abs(via_annihilators - energy) <= 1e-12);
    }
}

TEST_CASE("deeper truncations only add terms") {
    auto phi5 = counterexample_truncate(5);
    auto phi8 = counterexample_truncate(8, 8);
    CHECK(phi5.term_count() == 5);
    CHECK(phi8.term_count() == 8);
    CHECK(norm_sq(phi5) < norm_sq(phi8));
    CHECK(number_sqrt_norm_sq(phi8) - number_sqrt_norm_sq(phi5) ==
          doctest::Approx(1.0 / 6 + 1.0 / 7 + 1.0 / 8).epsilon(1e-12));
}

TEST_CASE("workspace must fit the truncation") {
    CHECK_THROWS_AS(counterexample_truncate(3, 2), Error);
    CHECK_THROWS_AS(counterexample_truncate(0), Error);
    CHECK(counterexample_truncate(3, 5).workspace().n_max == 5);
}

TEST_CASE("lambda matches its defining relation") {
    // |lambda_n|^2 / (n-1)! = 1/n
    for (int n = 1; n <= 12; ++n) {
        double lambda = counterexample_lambda(n);
        double fact = std::exp(std::lgamma(n));  // (n-1)!
        CHECK(lambda * lambda / fact == doctest::Approx(1.0 / n).epsilon(1e-12));
    }
    CHECK(term_value_exact(counterexample_lambda_sq_spec(), 4) == BigRational(24, 16));
}
