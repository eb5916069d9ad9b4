#include "gsf/verify.hpp"

#include <algorithm>
#include <cmath>

#include "gsf/error.hpp"
#include "gsf/fidelity.hpp"
#include "gsf/models.hpp"
#include "gsf/parallel.hpp"
#include "gsf/scaling.hpp"

namespace gsf {

QuadratureOptions residual_quadrature(double expected_scale) {
    QuadratureOptions o;
    o.abs_tol = std::min(1e-13, 1e-3 * expected_scale);
    o.max_intervals = 400000;
    return o;
}

ErrorSample residual_pathA(double gamma, double delta, double c) {
    if (gamma == 0.0 || delta == 0.0) throw DomainError("residual needs gamma, delta != 0");
    const double gm = std::abs(gamma);
    const double d2 = delta * delta;
    const ResolvedPair pr = resolve_path(PathSpec::path_a(gm, delta, c));
    const double integral = fidelity_integral(pr.first, pr.second, residual_quadrature(d2 / (gm * gm * gm)));
    ErrorSample s;
    s.gamma = gamma;
    s.delta = delta;
    s.c = c;
    s.E = integral + std::abs(delta) * scaling_A(c) / gm;
    s.normalized = s.E * gm * gm * gm / d2;
    return s;
}

ErrorSample residual_pathB(double g, double delta, double c) {
    if (delta == 0.0) throw DomainError("residual needs delta != 0");
    const double d2 = delta * delta;
    const ResolvedPair pr = resolve_path(PathSpec::path_b(g, delta, c));
    const double integral = fidelity_integral(pr.first, pr.second, residual_quadrature(d2));
    ErrorSample s;
    s.g = g;
    s.delta = delta;
    s.c = c;
    s.E = integral + 2.0 * std::abs(delta) * scaling_A(c);
    s.normalized = s.E / d2;
    return s;
}

std::vector<ErrorSample> residual_grid_pathA(double gamma, double delta,
                                             const std::vector<double>& cs, unsigned parallelism) {
    return parallel_map<ErrorSample>(cs.size(), parallelism,
                                     [&](std::size_t i) { return residual_pathA(gamma, delta, cs[i]); });
}

std::vector<ErrorSample> residual_grid_pathB(double g, double delta, const std::vector<double>& cs,
                                             unsigned parallelism) {
    return parallel_map<ErrorSample>(cs.size(), parallelism,
                                     [&](std::size_t i) { return residual_pathB(g, delta, cs[i]); });
}

}  // namespace gsf
