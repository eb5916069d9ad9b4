#include "gsf/quench.hpp"

#include <cmath>
#include <numbers>

#include "gsf/error.hpp"
#include "gsf/fidelity.hpp"
#include "gsf/quadrature.hpp"
#include "gsf/summation.hpp"

namespace gsf {

namespace {

double discrete_density(const XYParams& p1, const XYParams& p2, std::int64_t N) {
    const MomentumGrid grid(N);
    CompensatedSum sum;
    for (std::int64_t n = 0; n < grid.size(); ++n) sum.add(excitation_probability_xy(grid[n], p1, p2));
    return 2.0 * sum.value() / static_cast<double>(N);
}

}  // namespace

double instantaneous_survival(const ModelParams& p1, const ModelParams& p2, std::int64_t N) {
    const double f = fidelity_product(p1, p2, N).F;
    return f * f;
}

QuenchResult excitation_density(double gamma, double delta, double c, std::int64_t N,
                                bool keep_modes) {
    const ResolvedPair pr = resolve_path(PathSpec::path_a(gamma, delta, c));
    const XYParams& p1 = std::get<XYParams>(pr.first);
    const XYParams& p2 = std::get<XYParams>(pr.second);
    check_sites(N);
    QuenchResult out;
    if (delta == 0.0) {
        if (keep_modes) {
            const MomentumGrid grid(N);
            out.per_mode_pex.emplace();
            for (std::int64_t n = 0; n < grid.size(); ++n) out.per_mode_pex->emplace_back(grid[n], 0.0);
        }
        return out;
    }
    out.n_ex = discrete_density(p1, p2, N);
    const auto bp = momentum_breakpoints(special_momenta(p1, p2));
    out.n_ex_limit =
        integrate([&](double k) { return excitation_probability_xy(k, p1, p2); }, 0.0,
                  std::numbers::pi, bp, QuadratureOptions{1e-13, 200000})
            .value /
        std::numbers::pi;
    const double f = fidelity_product(p1, p2, N).F;
    out.survival = f * f;
    if (keep_modes) {
        const MomentumGrid grid(N);
        out.per_mode_pex.emplace();
        out.per_mode_pex->reserve(static_cast<std::size_t>(grid.size()));
        for (std::int64_t n = 0; n < grid.size(); ++n) {
            out.per_mode_pex->emplace_back(grid[n], excitation_probability_xy(grid[n], p1, p2));
        }
    }
    return out;
}

double excitation_density_slope(double gamma, double delta, double c, std::int64_t N, double h) {
    if (!(h > 0.0)) throw DomainError("step must be positive");
    if (delta == 0.0) throw DomainError("delta must be nonzero");
    auto at = [&](double cc) {
        const ResolvedPair pr = resolve_path(PathSpec::path_a(gamma, delta, cc));
        return discrete_density(std::get<XYParams>(pr.first), std::get<XYParams>(pr.second), N);
    };
    return (at(c + h) - at(c - h)) / (2.0 * h * std::abs(delta));
}

double kz_survival_estimate(double N, double tauQ, double nu, double z, double d,
                            double prefactor) {
    for (double v : {N, tauQ, nu, z, d, prefactor}) {
        if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("survival estimate needs positive inputs");
    }
    const double exponent = d * nu / (1.0 + z * nu);
    return std::exp(-N * prefactor / std::pow(tauQ, exponent));
}

}  // namespace gsf
