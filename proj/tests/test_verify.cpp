#include <cmath>

#include "doctest.h"
#include "gen.hpp"
#include "gsf/fidelity.hpp"
#include "gsf/verify.hpp"

using namespace gsf;

namespace {
std::vector<double> c_grid(double lo, double hi, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
    return out;
}
}  // namespace

TEST_CASE("Ising-line residual bound") {
    for (const auto& s : residual_grid_pathA(1.0, 1e-3, c_grid(0.0, 3.0, 31), 0)) {
        CHECK(std::abs(s.normalized) < 0.25);
        CHECK(std::isfinite(s.E));
    }
}

TEST_CASE("Ising-line residual collapse") {
    const auto cs = c_grid(0.0, 3.0, 13);
    const auto a = residual_grid_pathA(0.5, 1e-4, cs, 0);
    const auto b = residual_grid_pathA(0.5, 1e-6, cs, 0);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        CHECK(b[i].normalized == doctest::Approx(a[i].normalized).epsilon(0.1));
    }
}

TEST_CASE("proven bound at c = 1 (random)") {
    testgen::Gen gen(71);
    for (int i = 0; i < 40; ++i) {
        const double gamma = gen.uniform(0.2, 1.0);
        const double delta = gen.uniform(1e-3, 0.2) * gamma * gamma;
        const auto s = residual_pathA(gamma, delta, 1.0);
        CHECK(std::abs(s.E) < 0.4 * delta * delta / (gamma * gamma * gamma));
    }
}

TEST_CASE("anisotropic-line residual") {
    for (double delta : {1e-3, 1e-4, 1e-5}) {
        std::vector<double> vals;
        for (double g : {0.0, 0.9, 0.999}) {
            const auto s = residual_pathB(g, delta, 0.5);
            CHECK(s.normalized == doctest::Approx(0.25).epsilon(0.2));
            vals.push_back(s.normalized);
        }
        for (double v : vals) CHECK(v == doctest::Approx(vals.front()).epsilon(1e-3));
    }
}

TEST_CASE("residuals are even in delta") {
    testgen::Gen gen(72);
    for (int i = 0; i < 20; ++i) {
        const double d = gen.log_uniform(1e-5, 1e-2);
        const double c = gen.uniform(-3.0, 3.0);
        CHECK(residual_pathA(1.0, d, c).E == residual_pathA(1.0, -d, c).E);
        const double g = gen.uniform(-0.9, 0.9);
        CHECK(residual_pathB(g, d, c).E == residual_pathB(g, -d, c).E);
    }
}

TEST_CASE("grid evaluation is independent of parallelism") {
    const auto cs = c_grid(-2.0, 2.0, 17);
    const auto one = residual_grid_pathB(0.4, 1e-3, cs, 1);
    const auto many = residual_grid_pathB(0.4, 1e-3, cs, 8);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        CHECK(one[i].E == many[i].E);
        CHECK(one[i].E == residual_pathB(0.4, 1e-3, cs[i]).E);
    }
}

TEST_CASE("the sqrt 2 prefactor against the exact rate") {
    const auto pr = resolve_path(PathSpec::path_a(1.0, 1e-3, 0.9));
    const double rate = fidelity_integral(pr.first, pr.second, residual_quadrature(1e-6));
    for (std::int64_t N : {500000, 2000000}) {
        const double lnF = fidelity_product(pr.first, pr.second, N).lnF;
        const double ratio = std::exp(lnF - N * rate);
        CHECK(ratio >= 1.40);
        CHECK(ratio <= 1.43);
    }
}
