#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gsf {

/// Local slopes d ln y / d ln x. x holds ln of the abscissa, increasing.
struct SlopeCurve {
    std::vector<double> x;
    std::vector<double> s;
};

struct PowerLawFit {
    double intercept = 0.0;
    double slope = 0.0;
    double intercept_se = 0.0;
    double slope_se = 0.0;
    std::size_t n_points = 0;
};

struct SlopeCrossing {
    double x = 0.0;  // in the units of SlopeCurve::x
    std::size_t crossings = 0;
    bool multiple() const { return crossings > 1; }
};

/// Centred differences of ln ys against ln xs, one-sided at the ends.
/// xs may be increasing or decreasing; the curve is returned in increasing x.
SlopeCurve local_slopes(const std::vector<double>& xs, const std::vector<double>& ys);

/// First point (in increasing x) where the slope passes through target,
/// by linear interpolation. NotFoundError if it never does.
SlopeCrossing find_slope_crossing(const SlopeCurve& curve, double target);

/// OLS fit of ln y = intercept + slope ln x.
PowerLawFit powerlaw_fit(const std::vector<double>& xs, const std::vector<double>& ys);

/// Values lo .. hi (inclusive of lo) spaced uniformly in ln, per_decade per
/// factor of ten.
std::vector<double> log_grid(double lo, double hi, int per_decade);

/// Even integers nearest to a log grid, duplicates removed.
std::vector<std::int64_t> even_log_grid(double lo, double hi, int per_decade);

struct SweepOptions {
    int per_decade = 20;
    unsigned parallelism = 1;
};

/// -ln F for the path-A pair (g_c - 2 delta, gamma), (g_c, gamma) over a
/// gamma list (c = -1 puts one state on the critical point).
std::vector<double> sweep_pathA_gamma(double delta, double c, std::int64_t N,
                                      const std::vector<double>& gammas, unsigned parallelism = 1);

/// gamma at which d ln(-ln F) / d(-ln gamma) = 3/2.
double gamma_three_halves(double delta, std::int64_t N, const SweepOptions& opts = {});

/// N at which d ln(-ln F) / d ln N = 3/2 on path D.
double size_three_halves(double alpha, double delta, double c, const SweepOptions& opts = {});

/// delta at which d ln(-ln F) / d ln delta = 7/4 on path D.
double delta_seven_quarters(double alpha, std::int64_t N, double c, const SweepOptions& opts = {});

}  // namespace gsf
