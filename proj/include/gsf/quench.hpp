#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gsf/models.hpp"

namespace gsf {

struct QuenchResult {
    double n_ex = 0.0;         // (2/N) sum_k (1 - f_k^2) on the finite grid
    double n_ex_limit = 0.0;   // (1/pi) int_0^pi (1 - f_k^2) dk
    double survival = 1.0;     // F^2 at the same N
    std::optional<std::vector<std::pair<double, double>>> per_mode_pex;  // (k, 1 - f_k^2)
};

/// Probability of staying in the new ground state after a sudden switch
/// p1 -> p2: the squared fidelity.
double instantaneous_survival(const ModelParams& p1, const ModelParams& p2, std::int64_t N);

/// Quasiparticle density after the sudden quench g1 -> g2 on the Ising line,
/// g_{1,2} = 1 + c|delta| +- delta at anisotropy gamma.
QuenchResult excitation_density(double gamma, double delta, double c, std::int64_t N,
                                bool keep_modes = false);

/// Finite-N estimate of d(n_ex/|delta|)/dc by a centred difference of step h.
double excitation_density_slope(double gamma, double delta, double c, std::int64_t N, double h);

/// Default O(1) constant of the survival estimate, 2 A(0).
inline constexpr double kKzDefaultPrefactor = 0.5;

/// exp(-N prefactor / tauQ^(d nu / (1 + z nu))), the adiabatic-impulse
/// estimate of the ground-state survival after a linear ramp.
double kz_survival_estimate(double N, double tauQ, double nu, double z, double d,
                            double prefactor = kKzDefaultPrefactor);

}  // namespace gsf
