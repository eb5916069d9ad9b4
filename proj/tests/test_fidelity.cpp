#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gen.hpp"
#include "gsf/error.hpp"
#include "gsf/fidelity.hpp"
#include "gsf/models.hpp"
#include "gsf/oracle.hpp"
#include "gsf/scaling.hpp"
#include "gsf/summation.hpp"

using namespace gsf;

namespace {

constexpr double kPi = std::numbers::pi;

double xi_of(const ModelParams& p) {
    if (const auto* xy = std::get_if<XYParams>(&p)) return correlation_length_xy(*xy);
    return 1.0 / std::abs(std::get<ExtIsingParams>(p).g);
}

double min_abs_fk(const ResolvedPair& pr, std::int64_t N) {
    auto r = fidelity_product(pr.first, pr.second, N, true);
    double m = 1.0;
    for (const auto& [k, f] : *r.per_mode) m = std::min(m, std::abs(f));
    return m;
}

}  // namespace

TEST_CASE("identical states") {
    testgen::Gen gen(21);
    for (int i = 0; i < 20; ++i) {
        const auto p = gen.gapped_xy();
        const auto N = gen.even(2, 5000);
        const auto r = fidelity_product(p, p, N);
        CHECK(r.F == 1.0);
        CHECK(r.lnF == 0.0);
        CHECK(fidelity_integral(p, p) == 0.0);
        const auto e = gen.ext();
        CHECK(fidelity_product(e, e, N).F == 1.0);
        CHECK(fidelity_mps_closed(e.g, e.g, N).F == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("single mode at N = 2") {
    const auto r = fidelity_product(XYParams{1.0, 1.0}, XYParams{0.0, 1.0}, 2);
    CHECK(r.F == doctest::Approx(std::sqrt(0.5 + 1.0 / (2.0 * std::sqrt(2.0)))).epsilon(1e-14));
    CHECK(r.F == doctest::Approx(std::exp(r.lnF)).epsilon(1e-15));
    CHECK(r.N == 2);
}

TEST_CASE("per-mode output") {
    const auto r = fidelity_product(XYParams{1.2, 0.8}, XYParams{0.7, 0.5}, 12, true);
    REQUIRE(r.per_mode);
    REQUIRE(r.per_mode->size() == 6);
    CompensatedSum s;
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK((*r.per_mode)[i].first == doctest::Approx(kPi * (2.0 * i + 1) / 12.0));
        s.add(std::log(std::abs((*r.per_mode)[i].second)));
    }
    CHECK(s.value() == doctest::Approx(r.lnF).epsilon(1e-13));
    CHECK_FALSE(fidelity_product(XYParams{1.2, 0.8}, XYParams{0.7, 0.5}, 12).per_mode);
}

TEST_CASE("symmetry is bitwise and bounds hold (random)") {
    testgen::Gen gen(22);
    for (int i = 0; i < 300; ++i) {
        const auto p1 = gen.gapped_xy();
        const auto p2 = gen.gapped_xy();
        const auto N = gen.even(2, 4000);
        const auto a = fidelity_product(p1, p2, N);
        const auto b = fidelity_product(p2, p1, N);
        CHECK(a.lnF == b.lnF);
        CHECK(a.F == b.F);
        CHECK(a.F >= 0.0);
        CHECK(a.F <= 1.0);
        CHECK(a.lnF <= 0.0);
        const auto e1 = gen.ext(), e2 = gen.ext();
        const auto c = fidelity_product(e1, e2, N);
        CHECK(c.lnF == fidelity_product(e2, e1, N).lnF);
        CHECK(c.F >= 0.0);
        CHECK(c.F <= 1.0);
    }
}

TEST_CASE("fidelity is even in delta on every path") {
    testgen::Gen gen(23);
    for (int i = 0; i < 100; ++i) {
        PathSpec s = i % 3 == 0 ? gen.path_a() : (i % 3 == 1 ? gen.path_b() : gen.ext_path());
        const auto N = gen.even(10, 3000);
        PathSpec m = s;
        m.delta = -s.delta;
        const auto pp = resolve_path(s);
        const auto pm = resolve_path(m);
        CHECK(fidelity_product(pp.first, pp.second, N).lnF == fidelity_product(pm.first, pm.second, N).lnF);
    }
}

TEST_CASE("product matches the dense oracle") {
    testgen::Gen gen(24);
    for (int N : {4, 6, 8, 10}) {
        int done = 0;
        while (done < 5) {
            const ModelParams p1 = gen.gapped_xy();
            const ModelParams p2 = gen.gapped_xy();
            const auto s1 = ed_ground_state(p1, N);
            const auto s2 = ed_ground_state(p2, N);
            if (s1.even_gap < 1e-8 || s2.even_gap < 1e-8) continue;
            CHECK(std::abs(fidelity_product(p1, p2, N).F - ed_fidelity(s1, s2)) <= 1e-10);
            ++done;
        }
        for (int i = 0; i < 5; ++i) {
            const ModelParams e1 = gen.ext(), e2 = gen.ext();
            CHECK(std::abs(fidelity_product(e1, e2, N).F - ed_fidelity(e1, e2, N)) <= 1e-10);
        }
    }
}

TEST_CASE("product and integral agree (random)") {
    testgen::Gen gen(25);
    int tested = 0;
    while (tested < 100) {
        PathSpec s;
        const int kind = tested % 3;
        const double cmag = gen.uniform(0.0, 3.0);
        if (kind == 0) {
            // path A, both sides of |c| = 1
            if (std::abs(cmag - 1.0) < 0.2) continue;
            s = PathSpec::path_a(gen.uniform(0.5, 1.0), gen.sign() * gen.log_uniform(1e-4, 1e-2), gen.sign() * cmag);
        } else {
            // the oscillating |c| < 1 regimes have near-zero modes; keep |c| > 1 here
            if (cmag < 1.2) continue;
            s = kind == 1 ? PathSpec::path_b(gen.uniform(-0.9, 0.9), gen.sign() * gen.log_uniform(1e-4, 1e-2), gen.sign() * cmag)
                          : PathSpec::ext_ising(gen.sign() * gen.log_uniform(1e-4, 1e-2), gen.sign() * cmag);
        }
        const auto pr = resolve_path(s);
        const double xi = std::max(xi_of(pr.first), xi_of(pr.second));
        const auto N = std::max<std::int64_t>(2, 2 * std::llround(25.0 * xi));
        if (N > 400000) continue;
        if (min_abs_fk(pr, N) < 1e-3) continue;
        const double lnF = fidelity_product(pr.first, pr.second, N).lnF;
        const double integral = fidelity_integral(pr.first, pr.second);
        const double shift = std::abs(s.c) < 1.0 ? std::log(2.0) / (2.0 * N) : 0.0;
        CHECK(std::abs(lnF / N - integral) <= shift + 10.0 * s.delta * s.delta);
        ++tested;
    }
}

TEST_CASE("grid sum of ln k exceeds the integral by ln 2 / 2") {
    for (std::int64_t N : {100000, 400000}) {
        const double alpha = 0.37;
        const MomentumGrid grid(N);
        CompensatedSum s;
        for (std::int64_t n = 0; n < grid.size(); ++n) s.add(std::log(alpha * grid[n]));
        const double integral = 0.5 * static_cast<double>(N) * (std::log(alpha * kPi) - 1.0);
        CHECK(std::abs(s.value() - integral - std::log(2.0) / 2.0) < 1e-4);
    }
}

TEST_CASE("integral on the Ising line") {
    const auto pr = resolve_path(PathSpec::path_a(1.0, 1e-5, 0.0));
    const double v = fidelity_integral(pr.first, pr.second);
    CHECK(v == doctest::Approx(-2.5e-6).epsilon(1e-4));
    testgen::Gen gen(26);
    for (int i = 0; i < 20; ++i) {
        const double c = gen.uniform(0.0, 3.0);
        const auto p = resolve_path(PathSpec::path_a(1.0, 1e-3, c));
        CHECK(std::abs(fidelity_integral(p.first, p.second) + 1e-3 * scaling_A(c)) < 0.4e-6);
    }
}

TEST_CASE("extended Ising closed form") {
    testgen::Gen gen(27);
    for (int i = 0; i < 60; ++i) {
        const double sgn = gen.sign();
        const double g1 = sgn * gen.log_uniform(1e-4, 0.9);
        const double g2 = sgn * gen.log_uniform(1e-4, 0.9);
        const auto N = gen.even(2, 2000);
        const auto closed = fidelity_mps_closed(g1, g2, N);
        const auto prod = fidelity_product(ExtIsingParams{g1}, ExtIsingParams{g2}, N);
        CHECK(std::abs(closed.F - prod.F) <= 1e-10);
        CHECK(std::abs(closed.lnF - prod.lnF) <= 1e-10 * std::max(1.0, std::abs(prod.lnF)));
    }
    CHECK_THROWS_AS(fidelity_mps_closed(0.1, -0.1, 10), DomainError);
}

TEST_CASE("hyperbolic approximation tracks the closed form") {
    for (double c : {0.0, 0.5, 2.0, 5.0}) {
        for (double delta : {1e-4, 1e-5}) {
            const double eps = c * delta;
            for (std::int64_t N : {1000, 10000, 50000}) {
                if (std::abs(eps) <= delta) continue;  // closed form needs equal signs
                const double exact = fidelity_mps_closed(eps + delta, eps - delta, N).F;
                const double approx = std::exp(fidelity_mps_hyperbolic_log(delta, eps, N));
                CHECK(std::abs(approx / exact - 1.0) < 10.0 * delta * N * delta + 10.0 * delta);
            }
        }
    }
    CHECK(fidelity_mps_hyperbolic_log(0.0, 0.3, 100) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("phi offset and oscillation factor") {
    CHECK(phi_offset(kPi * 1002.0 / 4000.0, 2000) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(phi_offset(kPi / 4.0, 2000) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(phi_offset(kPi * 1001.0 / 4000.0, 2000) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(oscillation_factor(kPi / 4.0, 2000) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(oscillation_factor(kPi * 1001.0 / 4000.0, 2000) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(oscillation_factor(kPi * 1002.0 / 4000.0, 2000) < 1e-10);
    testgen::Gen gen(28);
    for (int i = 0; i < 500; ++i) {
        const double phi = phi_offset(gen.uniform(0.0, kPi), gen.even(2, 100000));
        CHECK(phi > -1.0);
        CHECK(phi <= 1.0);
    }
}

TEST_CASE("exact zero mode") {
    // at N = 6 the first mode sits where p_k vanishes for g2 = -tan^2(k/2)
    const double k = kPi / 6.0;
    const double g2 = -std::pow(std::sin(k / 2), 2) / std::pow(std::cos(k / 2), 2);
    const auto r = fidelity_product(ExtIsingParams{1.0}, ExtIsingParams{g2}, 6);
    CHECK(r.exact_zero);
    CHECK(r.F == 0.0);
    CHECK(std::isinf(r.lnF));
    CHECK(r.lnF < 0.0);
}

TEST_CASE("special momenta lie inside (0, pi)") {
    testgen::Gen gen(29);
    for (int i = 0; i < 200; ++i) {
        for (double k : special_momenta(gen.xy(), gen.xy())) {
            CHECK(k > 0.0);
            CHECK(k < kPi);
        }
    }
    const auto bps = momentum_breakpoints({1.0});
    CHECK(std::is_sorted(bps.begin(), bps.end()));
}
