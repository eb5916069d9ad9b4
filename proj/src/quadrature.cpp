#include "gsf/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gsf/error.hpp"
#include "gsf/summation.hpp"

namespace gsf {

namespace {

struct Rule {
    std::array<double, 11> x{};
    std::array<double, 11> wk{};
    std::array<double, 11> wg{};  // zero on Kronrod-only nodes
};

const Rule& rule() {
    static const Rule r = [] {
        using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
        using G = boost::math::quadrature::gauss<double, 10>;
        Rule out;
        const auto& kx = GK::abscissa();
        const auto& kw = GK::weights();
        const auto& gx = G::abscissa();
        const auto& gw = G::weights();
        for (std::size_t i = 0; i < out.x.size(); ++i) {
            out.x[i] = kx[i];
            out.wk[i] = kw[i];
            for (std::size_t j = 0; j < gx.size(); ++j) {
                if (std::abs(gx[j] - kx[i]) < 1e-14) out.wg[i] = gw[j];
            }
        }
        return out;
    }();
    return r;
}

struct Piece {
    double a, b, value, error;
    bool operator<(const Piece& o) const { return error < o.error; }
};

Piece apply_rule(const Integrand& f, double a, double b, int& evals) {
    const Rule& r = rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double k = 0.0;
    double g = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        double fv;
        if (r.x[i] == 0.0) {
            fv = f(mid);
            ++evals;
        } else {
            const double d = half * r.x[i];
            fv = f(mid - d) + f(mid + d);
            evals += 2;
        }
        k += r.wk[i] * fv;
        g += r.wg[i] * fv;
    }
    if (!std::isfinite(k)) {
        std::ostringstream msg;
        msg << "quadrature: non-finite integrand on [" << a << ", " << b << "]";
        throw ConvergenceError(msg.str());
    }
    return {a, b, k * half, std::abs((k - g) * half)};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const std::vector<double>& breakpoints,
                           const QuadratureOptions& opts) {
    QuadratureResult res;
    if (a == b) return res;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    std::vector<double> cuts{a, b};
    for (double p : breakpoints) {
        if (p > a && p < b) cuts.push_back(p);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::priority_queue<Piece> active;
    std::vector<Piece> frozen;  // too narrow to split further
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Piece p = apply_rule(f, cuts[i], cuts[i + 1], res.evaluations);
        total_error += p.error;
        active.push(p);
    }
    int count = static_cast<int>(active.size());
    double frozen_error = 0.0;

    // once frozen pieces alone exceed the tolerance no amount of splitting helps
    while (total_error > opts.abs_tol && frozen_error <= opts.abs_tol && !active.empty() &&
           count < opts.max_intervals) {
        Piece worst = active.top();
        active.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) ||
            (worst.b - worst.a) < 64.0 * std::numeric_limits<double>::epsilon() *
                                      std::max(std::abs(worst.a), std::abs(worst.b))) {
            frozen.push_back(worst);
            frozen_error += worst.error;
            continue;
        }
        Piece left = apply_rule(f, worst.a, mid, res.evaluations);
        Piece right = apply_rule(f, mid, worst.b, res.evaluations);
        total_error += left.error + right.error - worst.error;
        active.push(left);
        active.push(right);
        ++count;
    }

    // Re-sum from scratch; the running total drifts.
    std::vector<Piece> all = std::move(frozen);
    while (!active.empty()) {
        all.push_back(active.top());
        active.pop();
    }
    std::sort(all.begin(), all.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
    CompensatedSum value;
    CompensatedSum error;
    for (const Piece& p : all) {
        value.add(p.value);
        error.add(p.error);
    }
    res.value = sign * value.value();
    res.error = error.value();
    res.intervals = static_cast<int>(all.size());
    if (!(res.error <= opts.abs_tol)) {
        std::ostringstream msg;
        msg << "quadrature: error estimate " << res.error << " above tolerance " << opts.abs_tol
            << " on [" << a << ", " << b << "] after " << res.intervals << " intervals and "
            << res.evaluations << " evaluations";
        throw ConvergenceError(msg.str());
    }
    return res;
}

QuadratureResult integrate_to_infinity(const Integrand& f, double a,
                                       const std::vector<double>& breakpoints,
                                       const QuadratureOptions& opts) {
    auto g = [&](double t) {
        const double s = 1.0 - t;
        return f(a + t / s) / (s * s);
    };
    std::vector<double> tb;
    tb.reserve(breakpoints.size());
    for (double x : breakpoints) {
        if (x > a && std::isfinite(x)) tb.push_back((x - a) / (1.0 + (x - a)));
    }
    return integrate(g, 0.0, 1.0, tb, opts);
}

void add_geometric_breakpoints(std::vector<double>& out, double s, double scale, int levels,
                               double lo, double hi) {
    double h = scale;
    for (int j = 0; j <= levels; ++j) {
        if (s - h > lo && s - h < hi) out.push_back(s - h);
        if (s + h > lo && s + h < hi) out.push_back(s + h);
        h *= 0.5;
    }
    if (s > lo && s < hi) out.push_back(s);
}

}  // namespace gsf
