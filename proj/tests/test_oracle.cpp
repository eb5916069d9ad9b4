#include <cmath>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "gen.hpp"
#include "gsf/error.hpp"
#include "gsf/fidelity.hpp"
#include "gsf/oracle.hpp"

using namespace gsf;

TEST_CASE("Hamiltonian is exactly symmetric") {
    testgen::Gen gen(61);
    for (int i = 0; i < 10; ++i) {
        for (const ModelParams& p : {ModelParams{gen.xy()}, ModelParams{gen.ext()}}) {
            const auto h = assemble_hamiltonian(p, 8);
            CHECK(h == h.transpose());
        }
    }
}

TEST_CASE("spectrum is invariant under a one-site relabelling") {
    testgen::Gen gen(62);
    for (int i = 0; i < 6; ++i) {
        const ModelParams p = i % 2 ? ModelParams{gen.xy()} : ModelParams{gen.ext()};
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> a(assemble_hamiltonian(p, 8, 0), Eigen::EigenvaluesOnly);
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> b(assemble_hamiltonian(p, 8, 1), Eigen::EigenvaluesOnly);
        CHECK(std::abs(a.eigenvalues()(0) - b.eigenvalues()(0)) < 1e-12);
    }
}

TEST_CASE("ground energy equals the free-fermion energy") {
    testgen::Gen gen(63);
    for (int i = 0; i < 10; ++i) {
        const ModelParams p = gen.gapped_xy();
        CHECK(std::abs(ed_ground_state(p, 8).energy - free_fermion_energy(p, 8)) < 1e-9);
        const ModelParams e = gen.ext();
        CHECK(std::abs(ed_ground_state(e, 8).energy - free_fermion_energy(e, 8)) < 1e-9);
    }
}

TEST_CASE("ground state is parity even and below the odd sector") {
    testgen::Gen gen(64);
    for (int i = 0; i < 10; ++i) {
        for (const ModelParams& p : {ModelParams{gen.gapped_xy()}, ModelParams{gen.ext()}}) {
            const auto s = ed_ground_state(p, 10);
            CHECK(std::abs(parity_expectation(s) - 1.0) < 1e-10);
            double norm = 0.0;
            for (double a : s.amplitudes) norm += a * a;
            CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    // paramagnetic side: the even state is the unique ground state
    CHECK_FALSE(ed_ground_state(ModelParams{XYParams{1.5, 1.0}}, 10).odd_sector_lower);
}

TEST_CASE("strong field polarises the chain") {
    const auto s = ed_ground_state(ModelParams{XYParams{100.0, 1.0}}, 8);
    CHECK(std::abs(s.amplitudes[0]) > 0.999);
    CHECK(s.amplitudes[0] > 0.0);
}

TEST_CASE("low excitation matches the pair gap") {
    for (double g : {0.0, 0.3, -0.4}) {
        const ModelParams p = ExtIsingParams{g};
        const auto s = ed_ground_state(p, 10);
        CHECK(s.even_gap == doctest::Approx(free_fermion_pair_gap(p, 10)).epsilon(1e-9));
    }
}

TEST_CASE("overlaps") {
    const ModelParams p = XYParams{0.7, 0.4};
    CHECK(ed_fidelity(p, p, 8) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(ed_fidelity(ed_ground_state(p, 6), ed_ground_state(p, 8)), DomainError);
    CHECK_THROWS_AS(ed_fidelity(p, ModelParams{ExtIsingParams{0.1}}, 8), DomainError);
    CHECK_THROWS_AS(ed_ground_state(p, 7), DomainError);
    CHECK_THROWS_AS(ed_ground_state(p, kOracleMaxSites + 2), DomainError);

    testgen::Gen gen(65);
    for (int i = 0; i < 10; ++i) {
        const double sgn = gen.sign();
        const double g1 = sgn * gen.uniform(0.01, 0.9), g2 = sgn * gen.uniform(0.01, 0.9);
        const double ed = ed_fidelity(ModelParams{ExtIsingParams{g1}}, ModelParams{ExtIsingParams{g2}}, 8);
        CHECK(std::abs(ed - fidelity_mps_closed(g1, g2, 8).F) < 1e-10);
    }
}
