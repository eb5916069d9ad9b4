#pragma once

#include <cstdint>
#include <random>

#include "gsf/models.hpp"

namespace testgen {

// Fixed seeds keep every failure reproducible.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    double sign() { return uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0; }
    std::int64_t even(std::int64_t lo, std::int64_t hi) {
        return 2 * std::uniform_int_distribution<std::int64_t>(lo / 2, hi / 2)(rng_);
    }
    double momentum() { return uniform(1e-6, 3.14159265358979 - 1e-6); }

    gsf::XYParams xy() { return {uniform(-2.0, 2.0), uniform(-1.5, 1.5)}; }

    // Gapped XY parameters: away from |g| = 1 and from gamma = 0 inside |g| < 1.
    gsf::XYParams gapped_xy() {
        for (;;) {
            gsf::XYParams p = xy();
            if (std::abs(std::abs(p.g) - 1.0) > 0.1 && std::abs(p.gamma) > 0.1) return p;
        }
    }

    gsf::ExtIsingParams ext() { return {uniform(-0.9, 0.9)}; }

    gsf::PathSpec path_a() { return gsf::PathSpec::path_a(uniform(0.3, 1.5), sign() * log_uniform(1e-5, 1e-3), uniform(-3, 3)); }
    gsf::PathSpec path_b() { return gsf::PathSpec::path_b(uniform(-0.95, 0.95), sign() * log_uniform(1e-5, 1e-3), uniform(-3, 3)); }
    gsf::PathSpec ext_path() { return gsf::PathSpec::ext_ising(sign() * log_uniform(1e-5, 1e-3), uniform(-3, 3)); }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testgen
