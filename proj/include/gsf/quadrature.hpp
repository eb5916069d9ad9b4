#pragma once

#include <functional>
#include <vector>

namespace gsf {

struct QuadratureOptions {
    double abs_tol = 1e-11;
    int max_intervals = 200000;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
    int evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Global adaptive 21-point Gauss-Kronrod integration of f over [a, b].
/// The interval is first cut at every breakpoint strictly inside (a, b);
/// integrable endpoint singularities are fine since nodes are interior.
/// Throws ConvergenceError if the summed error estimate stays above
/// abs_tol once the interval budget is spent or intervals cannot be split.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const std::vector<double>& breakpoints = {},
                           const QuadratureOptions& opts = {});

/// Same over [a, inf), through x = a + t/(1-t).
QuadratureResult integrate_to_infinity(const Integrand& f, double a,
                                       const std::vector<double>& breakpoints = {},
                                       const QuadratureOptions& opts = {});

/// Breakpoints s +- scale*2^-j, j = 0..levels, clipped to (lo, hi). Used to
/// pre-resolve features near s on every length scale.
void add_geometric_breakpoints(std::vector<double>& out, double s, double scale,
                               int levels, double lo, double hi);

}  // namespace gsf
