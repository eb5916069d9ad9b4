#include "gsf/crossover.hpp"

#include <algorithm>
#include <cmath>

#include <gsl/gsl_fit.h>

#include "gsf/error.hpp"
#include "gsf/fidelity.hpp"
#include "gsf/models.hpp"
#include "gsf/parallel.hpp"

namespace gsf {

SlopeCurve local_slopes(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    if (n < 3 || ys.size() != n) throw DomainError("local_slopes needs >= 3 matching points");
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) throw DomainError("local_slopes needs positive data");
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
    }
    const bool increasing = lx[1] > lx[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (increasing ? !(lx[i] > lx[i - 1]) : !(lx[i] < lx[i - 1])) {
            throw DomainError("local_slopes needs strictly monotone abscissas");
        }
    }
    if (!increasing) {
        std::reverse(lx.begin(), lx.end());
        std::reverse(ly.begin(), ly.end());
    }
    SlopeCurve out;
    out.x = lx;
    out.s.resize(n);
    out.s[0] = (ly[1] - ly[0]) / (lx[1] - lx[0]);
    out.s[n - 1] = (ly[n - 1] - ly[n - 2]) / (lx[n - 1] - lx[n - 2]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        out.s[i] = (ly[i + 1] - ly[i - 1]) / (lx[i + 1] - lx[i - 1]);
    }
    return out;
}

SlopeCrossing find_slope_crossing(const SlopeCurve& curve, double target) {
    SlopeCrossing out;
    bool found = false;
    for (std::size_t i = 0; i + 1 < curve.s.size(); ++i) {
        const double a = curve.s[i] - target;
        const double b = curve.s[i + 1] - target;
        if (a == 0.0 && i > 0) continue;  // counted with the previous pair
        if (a * b > 0.0 || (a == 0.0 && b == 0.0)) continue;
        ++out.crossings;
        if (!found) {
            const double t = a == b ? 0.0 : a / (a - b);
            out.x = curve.x[i] + t * (curve.x[i + 1] - curve.x[i]);
            found = true;
        }
    }
    if (!found) throw NotFoundError("slope never reaches the target value");
    return out;
}

PowerLawFit powerlaw_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    if (n < 3 || ys.size() != n) throw DomainError("powerlaw_fit needs >= 3 matching points");
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) throw DomainError("powerlaw_fit needs positive data");
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
    }
    const auto [lo, hi] = std::minmax_element(lx.begin(), lx.end());
    if (*lo == *hi) throw DomainError("powerlaw_fit: all abscissas coincide");
    double c0, c1, cov00, cov01, cov11, sumsq;
    gsl_fit_linear(lx.data(), 1, ly.data(), 1, n, &c0, &c1, &cov00, &cov01, &cov11, &sumsq);
    PowerLawFit f;
    f.intercept = c0;
    f.slope = c1;
    f.intercept_se = std::sqrt(std::max(0.0, cov00));
    f.slope_se = std::sqrt(std::max(0.0, cov11));
    f.n_points = n;
    return f;
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
    if (!(lo > 0.0) || !(hi >= lo) || per_decade < 1) throw DomainError("bad log grid");
    const double step = std::log(10.0) / per_decade;
    const double span = std::log(hi / lo);
    const auto count = static_cast<std::size_t>(std::floor(span / step * (1.0 + 1e-12))) + 1;
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = lo * std::exp(step * static_cast<double>(i));
    return out;
}

std::vector<std::int64_t> even_log_grid(double lo, double hi, int per_decade) {
    std::vector<std::int64_t> out;
    for (double v : log_grid(lo, hi, per_decade)) {
        const auto n = std::max<std::int64_t>(2, 2 * std::llround(0.5 * v));
        if (out.empty() || out.back() != n) out.push_back(n);
    }
    return out;
}

std::vector<double> sweep_pathA_gamma(double delta, double c, std::int64_t N,
                                      const std::vector<double>& gammas, unsigned parallelism) {
    return parallel_map<double>(gammas.size(), parallelism, [&](std::size_t i) {
        const ResolvedPair pr = resolve_path(PathSpec::path_a(gammas[i], delta, c));
        return -fidelity_product(pr.first, pr.second, N).lnF;
    });
}

double gamma_three_halves(double delta, std::int64_t N, const SweepOptions& opts) {
    // bracket around the expected crossover N|delta|/gamma ~ 1
    const double g0 = static_cast<double>(N) * std::abs(delta) * 0.67;
    const double lo = g0 * std::exp(-2.5);
    const double hi = std::min(1.0, g0 * std::exp(2.5));
    const auto gammas = log_grid(lo, hi, opts.per_decade);
    const auto ys = sweep_pathA_gamma(delta, -1.0, N, gammas, opts.parallelism);
    std::vector<double> inv(gammas.size());
    for (std::size_t i = 0; i < gammas.size(); ++i) inv[i] = 1.0 / gammas[i];
    return 1.0 / std::exp(find_slope_crossing(local_slopes(inv, ys), 1.5).x);
}

double size_three_halves(double alpha, double delta, double c, const SweepOptions& opts) {
    const double n0 = 1.0 / std::sqrt(std::abs(delta));
    const auto sizes = even_log_grid(n0 * std::exp(-3.0), n0 * std::exp(3.0), opts.per_decade);
    const ResolvedPair pr = resolve_path(PathSpec::path_d(alpha, delta, c));
    const auto ys = parallel_map<double>(sizes.size(), opts.parallelism, [&](std::size_t i) {
        return -fidelity_product(pr.first, pr.second, sizes[i]).lnF;
    });
    std::vector<double> xs(sizes.begin(), sizes.end());
    return std::exp(find_slope_crossing(local_slopes(xs, ys), 1.5).x);
}

double delta_seven_quarters(double alpha, std::int64_t N, double c, const SweepOptions& opts) {
    const double n = static_cast<double>(N);
    const double d0 = 1.0 / (n * n);
    const auto deltas = log_grid(d0 * std::exp(-4.0), d0 * std::exp(5.0), opts.per_decade);
    const auto ys = parallel_map<double>(deltas.size(), opts.parallelism, [&](std::size_t i) {
        const ResolvedPair pr = resolve_path(PathSpec::path_d(alpha, deltas[i], c));
        return -fidelity_product(pr.first, pr.second, N).lnF;
    });
    return std::exp(find_slope_crossing(local_slopes(deltas, ys), 1.75).x);
}

}  // namespace gsf
