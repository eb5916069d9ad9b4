#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsf/models.hpp"

namespace gsf {

/// Universal scaling function of -ln F / (N |delta| / gamma) near the Ising
/// line, in terms of complete elliptic integrals. Even in c; |c| = 1 is
/// evaluated from the integral representation.
double scaling_A(double c);

/// -(1/4pi) int_0^inf ln f^2(l) dl with p = l^2 + c^2 - 1, q = 2l.
double scaling_A_integral(double c);

/// dA/dc by centred difference, step 1e-6 max(1, |c|).
double scaling_A_derivative(double c);

/// Quench excitation scaling function, n_ex ~ |delta| B(c).
double scaling_B(double c);

/// (1/pi) int_0^inf (1 - f^2(l)) dl with the same p, q as scaling_A_integral.
double scaling_B_integral(double c);

/// Leading expansion of dB/dc around c = 1, (2 - 3 ln 2)/2pi + ln|1 - c|/2pi.
/// DomainError unless 0 < |1 - c| < 0.1.
double scaling_dB_dc_near1(double c);

/// Scaling function next to the multicritical point, c >= 1.
double scaling_A_mcp(double c);

/// Extended-Ising scaling function: 1 for |c| <= 1, |c| - sqrt(c^2 - 1) beyond.
double scaling_A_mps(double c);

/// d/dg2 of -lim ln F / N on the Ising line, for g1 > g2 at fixed gamma.
/// PoleError when either state sits on g = 1.
double scaling_param_derivative(double g1, double g2, double gamma);

struct CriticalExponents {
    double nu = 1.0;
    double z = 1.0;
    double d = 1.0;
};

/// A regime inequality written as a ratio that should be << 1.
struct ValidityRatio {
    std::string name;
    double value = 0.0;
};

struct ScalingPrediction {
    double lnF_per_site = 0.0;  // smooth part, without the prefactor
    double prefactor = 1.0;
    bool oscillatory = false;
    std::int64_t N = 0;
    std::string formula_id;
    CriticalExponents exponents;
    std::vector<ValidityRatio> validity;

    double lnF() const;
    double F() const;
    double ratio(const std::string& name) const;  // NotFoundError if absent
};

/// Distance |eps| below which path C uses the multicritical form.
inline constexpr double kPathCNearMcp = 0.05;

ScalingPrediction predict_lnF(const PathSpec& spec, std::int64_t N);

/// Small-system (susceptibility) estimate of F. DomainError for paths B, C.
double susceptibility_smallsystem(const PathSpec& spec, std::int64_t N);

}  // namespace gsf
