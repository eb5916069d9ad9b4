#include "gsf/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gsf/error.hpp"
#include "gsf/summation.hpp"

namespace gsf {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLogFloor = std::log(kExactZeroFloor);
constexpr int kBreakpointLevels = 44;

template <class LogKernel, class Kernel>
FidelityResult product_impl(std::int64_t N, bool keep_modes, LogKernel log_f, Kernel f) {
    const MomentumGrid grid(N);
    FidelityResult res;
    res.N = N;
    if (keep_modes) {
        res.per_mode.emplace();
        res.per_mode->reserve(static_cast<std::size_t>(grid.size()));
    }
    CompensatedSum sum;
    for (std::int64_t n = 0; n < grid.size(); ++n) {
        const double k = grid[n];
        const double lf = log_f(k);
        if (keep_modes) res.per_mode->emplace_back(k, f(k));
        if (lf < kLogFloor) {
            res.exact_zero = true;
            if (!keep_modes) break;
            continue;
        }
        if (!res.exact_zero) sum.add(lf);
    }
    if (res.exact_zero) {
        res.lnF = -std::numeric_limits<double>::infinity();
        res.F = 0.0;
    } else {
        res.lnF = sum.value();
        res.F = std::exp(res.lnF);
    }
    return res;
}

void push_momentum_from_cos(std::vector<double>& out, double x) {
    if (std::isfinite(x) && x > -1.0 && x < 1.0) out.push_back(std::acos(x));
}

double log_cosh(double x) {
    const double a = std::abs(x);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

}  // namespace

std::vector<double> momentum_breakpoints(const std::vector<double>& special) {
    std::vector<double> bp;
    for (double s : {0.0, kPi}) add_geometric_breakpoints(bp, s, 0.5 * kPi, kBreakpointLevels, 0.0, kPi);
    for (double s : special) add_geometric_breakpoints(bp, s, 0.5 * kPi, kBreakpointLevels, 0.0, kPi);
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    return bp;
}

FidelityResult fidelity_product(const XYParams& p1, const XYParams& p2, std::int64_t N,
                                bool keep_modes) {
    return product_impl(
        N, keep_modes, [&](double k) { return log_fk_xy(k, p1, p2); },
        [&](double k) { return fk_xy(k, p1, p2); });
}

FidelityResult fidelity_product(const ExtIsingParams& p1, const ExtIsingParams& p2,
                                std::int64_t N, bool keep_modes) {
    return product_impl(
        N, keep_modes, [&](double k) { return log_abs_fk_extising(k, p1.g, p2.g); },
        [&](double k) { return fk_extising(k, p1.g, p2.g); });
}

FidelityResult fidelity_product(const ModelParams& p1, const ModelParams& p2, std::int64_t N,
                                bool keep_modes) {
    if (p1.index() != p2.index()) throw DomainError("fidelity between different models");
    if (const auto* a = std::get_if<XYParams>(&p1)) {
        return fidelity_product(*a, std::get<XYParams>(p2), N, keep_modes);
    }
    return fidelity_product(std::get<ExtIsingParams>(p1), std::get<ExtIsingParams>(p2), N,
                            keep_modes);
}

std::vector<double> special_momenta(const XYParams& p1, const XYParams& p2) {
    std::vector<double> out;
    // q_k = 0 inside the zone
    if (p1.gamma != p2.gamma) {
        push_momentum_from_cos(out, (p2.gamma * p1.g - p1.gamma * p2.g) / (p2.gamma - p1.gamma));
    }
    // p_k = 0, a quadratic in x = cos k
    {
        const double a = 1.0 - p1.gamma * p2.gamma;
        const double b = -(p1.g + p2.g);
        const double c = p1.g * p2.g + p1.gamma * p2.gamma;
        if (a != 0.0) {
            const double disc = b * b - 4.0 * a * c;
            if (disc >= 0.0) {
                const double sq = std::sqrt(disc);
                const double qq = -0.5 * (b + std::copysign(sq, b));
                if (qq != 0.0) {
                    push_momentum_from_cos(out, qq / a);
                    push_momentum_from_cos(out, c / qq);
                }
            }
        } else if (b != 0.0) {
            push_momentum_from_cos(out, -c / b);
        }
    }
    for (const XYParams* p : {&p1, &p2}) {
        if (p->gamma == 0.0) push_momentum_from_cos(out, p->g);
        const double one_minus = 1.0 - p->gamma * p->gamma;
        if (p->gamma != 0.0 && one_minus > 0.0) push_momentum_from_cos(out, p->g / one_minus);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<double> special_momenta(const ExtIsingParams& p1, const ExtIsingParams& p2) {
    std::vector<double> out;
    const double prod = p1.g * p2.g;
    if (prod < 0.0) out.push_back(2.0 * std::atan(std::sqrt(-prod)));
    return out;
}

namespace {

// An isolated zero of f_k is integrable; a node that lands on it exactly is
// given the floor value instead of -inf.
double floored(double log_f) { return std::max(log_f, kLogFloor); }

}  // namespace

double fidelity_integral(const XYParams& p1, const XYParams& p2, const QuadratureOptions& opts) {
    if (p1.g == p2.g && p1.gamma == p2.gamma) return 0.0;
    if (p1.gamma == 0.0 && p2.gamma == 0.0) {
        // q vanishes identically: f is 1 where p > 0 and 0 where p < 0
        const double lo = std::max(std::min(p1.g, p2.g), -1.0);
        const double hi = std::min(std::max(p1.g, p2.g), 1.0);
        return lo < hi ? -std::numeric_limits<double>::infinity() : 0.0;
    }
    const auto bp = momentum_breakpoints(special_momenta(p1, p2));
    const auto res = integrate([&](double k) { return floored(log_fk_xy(k, p1, p2)); }, 0.0, kPi, bp,
                               QuadratureOptions{opts.abs_tol * 2.0 * kPi, opts.max_intervals});
    return res.value / (2.0 * kPi);
}

double fidelity_integral(const ExtIsingParams& p1, const ExtIsingParams& p2,
                         const QuadratureOptions& opts) {
    if (p1.g == p2.g) return 0.0;
    const auto bp = momentum_breakpoints(special_momenta(p1, p2));
    const auto res =
        integrate([&](double k) { return floored(log_abs_fk_extising(k, p1.g, p2.g)); }, 0.0, kPi, bp,
                  QuadratureOptions{opts.abs_tol * 2.0 * kPi, opts.max_intervals});
    return res.value / (2.0 * kPi);
}

double fidelity_integral(const ModelParams& p1, const ModelParams& p2,
                         const QuadratureOptions& opts) {
    if (p1.index() != p2.index()) throw DomainError("fidelity between different models");
    if (const auto* a = std::get_if<XYParams>(&p1)) {
        return fidelity_integral(*a, std::get<XYParams>(p2), opts);
    }
    return fidelity_integral(std::get<ExtIsingParams>(p1), std::get<ExtIsingParams>(p2), opts);
}

FidelityResult fidelity_mps_closed(double g1, double g2, std::int64_t N) {
    check_sites(N);
    if (!std::isfinite(g1) || !std::isfinite(g2)) throw DomainError("g must be finite");
    if (g1 * g2 < 0.0) {
        throw DomainError("closed form needs g1 g2 >= 0; use the product for opposite signs");
    }
    const double n = static_cast<double>(N);
    // ln(a^N + b^N) with a >= b >= 0, given ln a and ln(b/a)
    auto log_pair = [n](double log_a, double log_ratio) {
        return n * log_a + std::log1p(std::exp(n * log_ratio));
    };
    const double s = std::sqrt(g1 * g2);
    const double log_big = std::log1p(s);
    const double log_small = s < 1.0 ? std::log1p(-s) : std::log(s - 1.0);
    const double log_num = log_pair(log_big, log_small - log_big);

    auto log_norm = [&](double g) {
        const double a = std::abs(g);
        // same roundings as the numerator, so g1 = g2 cancels exactly
        const double log_hi = std::log1p(a);
        const double log_lo = a < 1.0 ? std::log1p(-a) : std::log(a - 1.0);
        return log_pair(log_hi, log_lo - log_hi);
    };
    FidelityResult res;
    res.N = N;
    res.lnF = log_num - 0.5 * log_norm(g1) - 0.5 * log_norm(g2);
    res.lnF = std::min(res.lnF, 0.0);
    res.F = std::exp(res.lnF);
    return res;
}

double fidelity_mps_hyperbolic_log(double delta, double eps, std::int64_t N) {
    check_sites(N);
    const double n = static_cast<double>(N);
    const double d2 = eps * eps - delta * delta;
    double num;
    if (d2 >= 0.0) {
        num = log_cosh(n * std::sqrt(d2));
    } else {
        num = std::log(std::abs(std::cos(n * std::sqrt(-d2))));
    }
    return num - 0.5 * (log_cosh(n * (eps + delta)) + log_cosh(n * (eps - delta)));
}

double phi_offset(double kc, std::int64_t N) {
    const double x = static_cast<double>(N) * kc / kPi;
    double phi = std::fmod(x, 2.0);
    if (phi < 0.0) phi += 2.0;
    if (phi > 1.0) phi -= 2.0;
    return phi;
}

double oscillation_factor(double kc, std::int64_t N) {
    return 2.0 * std::abs(std::cos(0.5 * kPi * phi_offset(kc, N)));
}

}  // namespace gsf
