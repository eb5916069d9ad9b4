#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gsf/models.hpp"
#include "gsf/quadrature.hpp"

namespace gsf {

/// Modes with |f_k| below this are treated as exact zeros.
inline constexpr double kExactZeroFloor = 1e-300;

struct FidelityResult {
    double lnF = 0.0;  // -inf when exact_zero
    double F = 1.0;
    std::int64_t N = 0;
    bool exact_zero = false;
    std::optional<std::vector<std::pair<double, double>>> per_mode;  // (k, f_k)
};

/// prod_{k>0} f_k over the antiperiodic grid, summed as logs in ascending k.
/// Bit-for-bit symmetric under exchange of the two states.
FidelityResult fidelity_product(const XYParams& p1, const XYParams& p2, std::int64_t N,
                                bool keep_modes = false);
FidelityResult fidelity_product(const ExtIsingParams& p1, const ExtIsingParams& p2,
                                std::int64_t N, bool keep_modes = false);
FidelityResult fidelity_product(const ModelParams& p1, const ModelParams& p2, std::int64_t N,
                                bool keep_modes = false);

/// Thermodynamic limit of ln F / N: (1/2pi) int_0^pi ln|f_k| dk.
double fidelity_integral(const XYParams& p1, const XYParams& p2,
                         const QuadratureOptions& opts = {});
double fidelity_integral(const ExtIsingParams& p1, const ExtIsingParams& p2,
                         const QuadratureOptions& opts = {});
double fidelity_integral(const ModelParams& p1, const ModelParams& p2,
                         const QuadratureOptions& opts = {});

/// Momenta in (0, pi) where ln|f_k| or its derivatives change rapidly:
/// zeros of f_k, gap-closing momenta and gap minima of either state.
std::vector<double> special_momenta(const XYParams& p1, const XYParams& p2);
std::vector<double> special_momenta(const ExtIsingParams& p1, const ExtIsingParams& p2);

/// Breakpoints on (0, pi) refining geometrically towards 0, pi and every
/// given special momentum.
std::vector<double> momentum_breakpoints(const std::vector<double>& special);

/// Exact extended-Ising overlap
///   |(1+s)^N + (1-s)^N| / sqrt(((1+g1)^N + (1-g1)^N)((1+g2)^N + (1-g2)^N)),
/// s = sqrt(g1 g2), in log form. Needs g1 g2 >= 0 (DomainError otherwise).
FidelityResult fidelity_mps_closed(double g1, double g2, std::int64_t N);

/// ln of the small-|delta|, |eps| hyperbolic approximation
///   |cosh(N sqrt(eps^2 - delta^2))| / sqrt(cosh(N(eps+delta)) cosh(N(eps-delta))).
double fidelity_mps_hyperbolic_log(double delta, double eps, std::int64_t N);

/// (N kc / pi) mod 2 in (-1, 1].
double phi_offset(double kc, std::int64_t N);

/// 2|cos(pi phi / 2)| with phi = phi_offset(kc, N).
double oscillation_factor(double kc, std::int64_t N);

}  // namespace gsf
