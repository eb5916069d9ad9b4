#include "gsf/scaling.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gsf/error.hpp"
#include "gsf/fidelity.hpp"
#include "gsf/quadrature.hpp"
#include "gsf/specfun.hpp"

namespace gsf {

namespace {

constexpr double kPi = std::numbers::pi;

struct EllipticPair {
    double K;    // K(c1)
    double ImE;  // Im E(c2)
};

EllipticPair elliptic_pair(double a) {
    const double d = a - 1.0;
    const double c1 = -4.0 * a / (d * d);
    const double c2 = (a + 1.0) * (a + 1.0) / (d * d);
    return {elliptic_K(c1).real(), elliptic_E(c2).imag()};
}

std::vector<double> l_breakpoints(double c) {
    std::vector<double> bp;
    const double a = std::abs(c);
    add_geometric_breakpoints(bp, 0.0, 1.0, 50, 0.0, 1e300);
    if (a < 1.0) {
        add_geometric_breakpoints(bp, std::sqrt(1.0 - a * a), 0.5, 50, 0.0, 1e300);
    }
    for (double x : {2.0, 4.0, 8.0, 16.0, 64.0, 256.0}) bp.push_back(x);
    return bp;
}

const QuadratureOptions kScalingQuad{1e-13, 400000};

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

}  // namespace

double scaling_A_integral(double c) {
    require_finite(c, "c");
    const double m = c * c - 1.0;
    auto f = [m](double l) { return 2.0 * log_overlap_from_pq(l * l + m, 2.0 * l); };
    return -integrate_to_infinity(f, 0.0, l_breakpoints(c), kScalingQuad).value / (4.0 * kPi);
}

double scaling_B_integral(double c) {
    require_finite(c, "c");
    const double m = c * c - 1.0;
    auto f = [m](double l) { return excitation_from_pq(l * l + m, 2.0 * l); };
    return integrate_to_infinity(f, 0.0, l_breakpoints(c), kScalingQuad).value / kPi;
}

double scaling_A(double c) {
    require_finite(c, "c");
    const double a = std::abs(c);
    if (a == 1.0) return scaling_A_integral(1.0);
    if (a == 0.0) return 0.25;
    const EllipticPair e = elliptic_pair(a);
    if (a < 1.0) return 0.25 + a * e.K / (2.0 * kPi) + (a - 1.0) * e.ImE / (4.0 * kPi);
    return a / 4.0 - a * e.K / (2.0 * kPi) - (a - 1.0) * e.ImE / (4.0 * kPi);
}

double scaling_A_derivative(double c) {
    const double h = 1e-6 * std::max(1.0, std::abs(c));
    return (scaling_A(c + h) - scaling_A(c - h)) / (2.0 * h);
}

double scaling_B(double c) {
    require_finite(c, "c");
    const double a = std::abs(c);
    if (a == 1.0) return scaling_B_integral(1.0);
    if (a == 0.0) return 0.5;
    const EllipticPair e = elliptic_pair(a);
    if (a < 1.0) return ((1.0 - a) * e.ImE + 2.0 * e.K) / (2.0 * kPi);
    return ((a - 1.0) * e.ImE - 2.0 * e.K) / (2.0 * kPi);
}

double scaling_dB_dc_near1(double c) {
    const double d = std::abs(1.0 - c);
    if (!(d > 0.0 && d < 0.1)) throw DomainError("expansion of dB/dc needs 0 < |1 - c| < 0.1");
    return (2.0 - 3.0 * std::numbers::ln2) / (2.0 * kPi) + std::log(d) / (2.0 * kPi);
}

double scaling_A_mcp(double c) {
    require_finite(c, "c");
    if (c < 1.0) throw DomainError("A_mcp is defined for c >= 1");
    const double up = std::pow(c + 1.0, 1.5) * (3.0 - 2.0 * c);
    const double down = std::pow(c - 1.0, 1.5) * (3.0 + 2.0 * c);
    return (up + down) / (16.0 * std::numbers::sqrt2);
}

double scaling_A_mps(double c) {
    require_finite(c, "c");
    const double a = std::abs(c);
    if (a <= 1.0) return 1.0;
    // |c| - sqrt(c^2 - 1) = 1/(|c| + sqrt(c^2 - 1))
    return 1.0 / (a + std::sqrt((a - 1.0) * (a + 1.0)));
}

double scaling_param_derivative(double g1, double g2, double gamma) {
    require_finite(g1, "g1");
    require_finite(g2, "g2");
    require_finite(gamma, "gamma");
    if (gamma == 0.0) throw DomainError("gamma must be nonzero");
    if (g2 == 1.0 || g1 == 1.0) throw PoleError("derivative diverges when a state sits on g = 1");
    const double delta = 0.5 * (g1 - g2);
    if (!(delta > 0.0)) throw DomainError("scaling_param_derivative needs g1 > g2");
    const double eps = 0.5 * (g1 + g2) - 1.0;
    const double c = eps / delta;
    const double gm = std::abs(gamma);
    return scaling_A_derivative(c) * (eps + delta) / (2.0 * delta * gm) - scaling_A(c) / (2.0 * gm);
}

double ScalingPrediction::lnF() const {
    return static_cast<double>(N) * lnF_per_site + std::log(prefactor);
}

double ScalingPrediction::F() const { return std::exp(lnF()); }

double ScalingPrediction::ratio(const std::string& name) const {
    for (const auto& v : validity) {
        if (v.name == name) return v.value;
    }
    throw NotFoundError("no validity ratio named '" + name + "'");
}

ScalingPrediction predict_lnF(const PathSpec& spec, std::int64_t N) {
    spec.validate();
    check_sites(N);
    const double n = static_cast<double>(N);
    const double d = std::abs(spec.delta);
    const double c = spec.c;
    const double eps = spec.epsilon();
    const bool inside = std::abs(c) < 1.0;
    ScalingPrediction out;
    out.N = N;
    switch (spec.kind) {
        case PathKind::A: {
            const double gm = std::abs(spec.gamma);
            if (gm == 0.0) throw DomainError("path A needs gamma != 0");
            out.formula_id = "ising_line";
            out.lnF_per_site = -d * scaling_A(c) / gm;
            out.prefactor = inside ? std::numbers::sqrt2 : 1.0;
            out.validity = {{"delta_over_gamma2", d / (gm * gm)},
                            {"eps_over_gamma2", std::abs(eps) / (gm * gm)},
                            {"thermodynamic", gm / (n * d)}};
            if (inside) out.validity.push_back({"prefactor_onset", gm / (n * d * (1.0 - std::abs(c)))});
            break;
        }
        case PathKind::B: {
            out.formula_id = "anisotropic_line";
            out.lnF_per_site = -2.0 * d * scaling_A(c);
            out.prefactor = inside ? oscillation_factor(kc_anisotropic(spec.g), N) : 1.0;
            out.oscillatory = inside;
            out.validity = {{"delta", d}, {"eps", std::abs(eps)}, {"thermodynamic", 1.0 / (n * d)}};
            if (inside) out.validity.push_back({"prefactor_onset", 1.0 / (n * d * (1.0 - std::abs(c)))});
            break;
        }
        case PathKind::C: {
            if (std::abs(eps) < kPathCNearMcp) {
                out.formula_id = "critical_line_mcp";
                out.lnF_per_site = -2.0 * d * scaling_A(c);
                out.prefactor = inside ? std::numbers::sqrt2 : 1.0;
                out.exponents = {1.0, 2.0, 1.0};
                out.validity = {{"delta", d}, {"eps", std::abs(eps)}, {"thermodynamic", 1.0 / (n * d)}};
            } else {
                if (d == 0.0) {
                    out.lnF_per_site = 0.0;
                } else {
                    const double e = std::abs(eps);
                    out.lnF_per_site = -d * d / (8.0 * e * (1.0 + e) * (1.0 + e));
                }
                out.formula_id = "critical_line_away";
                out.prefactor = 1.0;
                out.validity = {{"delta_over_eps", d / std::abs(eps)}};
            }
            break;
        }
        case PathKind::D: {
            const double a2 = spec.alpha * spec.alpha;
            out.formula_id = "multicritical";
            out.lnF_per_site = -std::pow(d, 1.5) * a2 * scaling_A_mcp(c) + d * d * a2 / 4.0;
            out.prefactor = 1.0;
            out.exponents = {0.5, 2.0, 1.0};
            out.validity = {{"delta", d},
                            {"remainder", n * std::pow(d, 2.5)},
                            {"alpha_delta", spec.alpha * d / 2.0}};
            break;
        }
        case PathKind::ExtIsing: {
            out.formula_id = "extended_ising";
            out.lnF_per_site = -d * scaling_A_mps(c);
            const double a = std::abs(c);
            if (a < 1.0) {
                out.prefactor = 2.0 * std::abs(std::cos(d * n * std::sqrt((1.0 - a) * (1.0 + a))));
                out.oscillatory = true;
            } else if (a == 1.0) {
                out.prefactor = std::numbers::sqrt2;
            } else {
                out.prefactor = 1.0;
            }
            out.exponents = {1.0, 2.0, 1.0};
            const double big = std::max(std::abs(eps + d), std::abs(eps - d)) * n;
            out.validity = {{"delta", d}, {"eps", std::abs(eps)}, {"thermodynamic", 1.0 / big}};
            break;
        }
    }
    return out;
}

double susceptibility_smallsystem(const PathSpec& spec, std::int64_t N) {
    spec.validate();
    check_sites(N);
    const double n = static_cast<double>(N);
    const double d = std::abs(spec.delta);
    const double eps = std::abs(spec.epsilon());
    if (d == 0.0) return 1.0;
    switch (spec.kind) {
        case PathKind::A: {
            const double gm = std::abs(spec.gamma);
            if (gm == 0.0) throw DomainError("path A needs gamma != 0");
            if (n * eps / gm <= 1.0) return 1.0 - d * d * n * n / (16.0 * gm * gm);
            return 1.0 - d * d * n / (16.0 * gm * eps);
        }
        case PathKind::ExtIsing: {
            const double x = eps * n;
            const double ch = std::cosh(x);
            const double t = x == 0.0 ? 1.0 : std::tanh(x) / x;
            return 1.0 - 0.5 * d * d * n * n * (1.0 / (ch * ch) + t);
        }
        case PathKind::D: {
            if (eps == 0.0) throw DomainError("path D small-system form needs eps > 0");
            return 1.0 - d * d * n * 5.0 * spec.alpha * spec.alpha / (32.0 * std::sqrt(2.0 * eps));
        }
        case PathKind::B:
        case PathKind::C:
            break;
    }
    throw DomainError("no small-system form for path " + path_name(spec.kind));
}

}  // namespace gsf
