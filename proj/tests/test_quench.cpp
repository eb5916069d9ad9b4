#include <cmath>

#include "doctest.h"
#include "gen.hpp"
#include "gsf/error.hpp"
#include "gsf/fidelity.hpp"
#include "gsf/quench.hpp"
#include "gsf/scaling.hpp"

using namespace gsf;

TEST_CASE("no quench, no excitations") {
    const auto r = excitation_density(1.0, 0.0, 0.5, 1000);
    CHECK(r.n_ex == 0.0);
    CHECK(r.survival == 1.0);
    const ModelParams p = XYParams{1.3, 0.6};
    CHECK(instantaneous_survival(p, p, 100) == 1.0);
}

TEST_CASE("probabilities stay in [0, 1] (random)") {
    testgen::Gen gen(51);
    for (int i = 0; i < 100; ++i) {
        const double gamma = gen.uniform(0.2, 1.5);
        const double delta = gen.sign() * gen.log_uniform(1e-4, 0.3);
        const double c = gen.uniform(-5.0, 5.0);
        const auto N = gen.even(2, 3000);
        const auto r = excitation_density(gamma, delta, c, N, true);
        CHECK(r.n_ex >= 0.0);
        CHECK(r.n_ex <= 1.0);
        CHECK(r.survival >= 0.0);
        CHECK(r.survival <= 1.0);
        REQUIRE(r.per_mode_pex);
        for (const auto& [k, p] : *r.per_mode_pex) {
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
        }
    }
}

TEST_CASE("survival is the squared fidelity") {
    testgen::Gen gen(52);
    for (int i = 0; i < 30; ++i) {
        const double c = gen.uniform(-3.0, 3.0);
        const double delta = gen.log_uniform(1e-4, 1e-2);
        const auto N = gen.even(10, 5000);
        const auto pr = resolve_path(PathSpec::path_a(1.0, delta, c));
        const double F = fidelity_product(pr.first, pr.second, N).F;
        CHECK(instantaneous_survival(pr.first, pr.second, N) == doctest::Approx(F * F).epsilon(1e-14));
        CHECK(excitation_density(1.0, delta, c, N).survival == doctest::Approx(F * F).epsilon(1e-14));
    }
}

TEST_CASE("survival at large N carries a factor 2 for |c| < 1") {
    // against the exact rate: the O(delta^2) part of the exponent grows with N
    const double delta = 1e-3, c = 0.5;
    const auto pr = resolve_path(PathSpec::path_a(1.0, delta, c));
    const double rate = fidelity_integral(pr.first, pr.second);
    for (std::int64_t N : {400000, 1600000}) {
        const double expect = 2.0 * std::exp(2.0 * N * rate);
        CHECK(instantaneous_survival(pr.first, pr.second, N) / expect == doctest::Approx(1.0).epsilon(0.01));
    }
}

TEST_CASE("density against B(c)") {
    for (double c : {-2.0, -0.5, 0.0, 0.7, 1.5, 3.0}) {
        const auto r = excitation_density(1.0, 1e-3, c, 100000);
        CHECK(r.n_ex / 1e-3 == doctest::Approx(scaling_B(c)).epsilon(0.02));
        CHECK(r.n_ex_limit / 1e-3 == doctest::Approx(scaling_B(c)).epsilon(0.01));
    }
}

TEST_CASE("far from the critical point") {
    const double delta = 1e-3, c = 50.0;
    const auto r = excitation_density(1.0, delta, c, 100000);
    CHECK(r.n_ex == doctest::Approx(delta * delta / (4.0 * c * delta)).epsilon(0.05));
}

TEST_CASE("finite sum converges to the integral") {
    for (double c : {-2.0, 0.0, 0.5, 2.0}) {
        const auto r = excitation_density(1.0, 1e-3, c, 1000000);
        CHECK(std::abs(r.n_ex - r.n_ex_limit) < 1e-6);
    }
}

TEST_CASE("density slope away from |c| = 1") {
    for (double c : {-2.0, 0.0, 0.5, 2.0}) {
        const double h = 0.05;
        const double fd = (scaling_B(c + h) - scaling_B(c - h)) / (2.0 * h);
        const double num = excitation_density_slope(1.0, 1e-3, c, 200000, h);
        CHECK(num == doctest::Approx(fd).scale(1.0).epsilon(0.01));
    }
}

TEST_CASE("survival estimate after a ramp") {
    CHECK(kz_survival_estimate(1000, 1e30, 1, 1, 1) == doctest::Approx(1.0).epsilon(1e-12));
    // exponent d nu / (1 + z nu) = 1/2
    const double a = std::log(kz_survival_estimate(1000, 100.0, 1, 1, 1));
    const double b = std::log(kz_survival_estimate(1000, 400.0, 1, 1, 1));
    CHECK(b / a == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(a == doctest::Approx(-1000 * kKzDefaultPrefactor / 10.0).epsilon(1e-12));
    CHECK(kKzDefaultPrefactor == doctest::Approx(2.0 * scaling_A(0.0)).epsilon(1e-10));
    testgen::Gen gen(53);
    for (int i = 0; i < 200; ++i) {
        const double N = gen.log_uniform(10, 1e6), tau = gen.log_uniform(1e-2, 1e6);
        const double nu = gen.uniform(0.3, 2), z = gen.uniform(0.5, 3), d = gen.uniform(1, 3);
        const double p = kz_survival_estimate(N, tau, nu, z, d);
        CHECK(p > 0.0 - 1e-300);
        CHECK(p <= 1.0);
        CHECK(kz_survival_estimate(N, 2 * tau, nu, z, d) >= p);
        CHECK(kz_survival_estimate(2 * N, tau, nu, z, d) <= p);
    }
    CHECK_THROWS_AS(kz_survival_estimate(0, 1, 1, 1, 1), DomainError);
    CHECK_THROWS_AS(kz_survival_estimate(10, -1, 1, 1, 1), DomainError);
    CHECK_THROWS_AS(kz_survival_estimate(10, 1, 1, 1, 1, 0.0), DomainError);
}
