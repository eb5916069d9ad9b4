#pragma once

#include <vector>

#include "gsf/quadrature.hpp"

namespace gsf {

/// Difference between the thermodynamic-limit integral and the leading
/// scaling prediction, and the same difference in its natural units.
struct ErrorSample {
    double gamma = 0.0;  // anisotropy (Ising-line residuals)
    double g = 0.0;      // field (anisotropic-line residuals)
    double delta = 0.0;
    double c = 0.0;
    double E = 0.0;
    double normalized = 0.0;  // E gamma^3 / delta^2, or E / delta^2
};

/// Absolute tolerance used for residual integrals: 1e-13, tightened further
/// to 1e-3 of the expected residual size when that is smaller.
QuadratureOptions residual_quadrature(double expected_scale);

/// E = lim ln F/N + |delta| A(c)/gamma on the Ising line.
ErrorSample residual_pathA(double gamma, double delta, double c);

/// E = lim ln F/N + 2|delta| A(c) on the anisotropic line, |g| < 1.
ErrorSample residual_pathB(double g, double delta, double c);

std::vector<ErrorSample> residual_grid_pathA(double gamma, double delta,
                                             const std::vector<double>& cs, unsigned parallelism = 1);
std::vector<ErrorSample> residual_grid_pathB(double g, double delta, const std::vector<double>& cs,
                                             unsigned parallelism = 1);

}  // namespace gsf
