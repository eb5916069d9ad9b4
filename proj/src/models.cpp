#include "gsf/models.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "gsf/error.hpp"

namespace gsf {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

// 1 - cos k without cancellation near k = 0.
double one_minus_cos(double k) {
    const double s = std::sin(0.5 * k);
    return 2.0 * s * s;
}

}  // namespace

double log_overlap_from_pq(double p, double q) {
    if (p == 0.0 && q == 0.0) throw DegenerateModeError("f_k undefined: p_k = q_k = 0");
    const double r = std::hypot(p, q);
    if (p >= 0.0) return 0.5 * std::log1p(-(q * q) / (2.0 * r * (r + p)));
    if (q == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(std::abs(q)) - 0.5 * std::log(2.0 * r * (r - p));
}

double excitation_from_pq(double p, double q) {
    if (p == 0.0 && q == 0.0) throw DegenerateModeError("f_k undefined: p_k = q_k = 0");
    const double r = std::hypot(p, q);
    if (p > 0.0) return (q * q) / (2.0 * r * (r + p));
    return (r - p) / (2.0 * r);
}

std::string path_name(PathKind kind) {
    switch (kind) {
        case PathKind::A: return "A";
        case PathKind::B: return "B";
        case PathKind::C: return "C";
        case PathKind::D: return "D";
        case PathKind::ExtIsing: return "ExtIsing";
    }
    return "?";
}

PathKind parse_path(const std::string& name) {
    if (name == "A" || name == "a") return PathKind::A;
    if (name == "B" || name == "b") return PathKind::B;
    if (name == "C" || name == "c") return PathKind::C;
    if (name == "D" || name == "d") return PathKind::D;
    if (name == "E" || name == "e" || name == "ExtIsing" || name == "extising")
        return PathKind::ExtIsing;
    throw DomainError("unknown path '" + name + "'");
}

PathSpec PathSpec::path_a(double gamma, double delta, double c) {
    PathSpec s;
    s.kind = PathKind::A;
    s.gamma = gamma;
    s.delta = delta;
    s.c = c;
    return s;
}

PathSpec PathSpec::path_b(double g, double delta, double c) {
    PathSpec s;
    s.kind = PathKind::B;
    s.g = g;
    s.delta = delta;
    s.c = c;
    return s;
}

PathSpec PathSpec::path_c(double delta, double c) {
    PathSpec s;
    s.kind = PathKind::C;
    s.delta = delta;
    s.c = c;
    return s;
}

PathSpec PathSpec::path_d(double alpha, double delta, double c) {
    PathSpec s;
    s.kind = PathKind::D;
    s.alpha = alpha;
    s.delta = delta;
    s.c = c;
    return s;
}

PathSpec PathSpec::ext_ising(double delta, double c) {
    PathSpec s;
    s.kind = PathKind::ExtIsing;
    s.delta = delta;
    s.c = c;
    return s;
}

double PathSpec::epsilon() const { return c * std::abs(delta); }

void PathSpec::validate() const {
    require_finite(delta, "delta");
    require_finite(c, "c");
    switch (kind) {
        case PathKind::A:
            require_finite(gamma, "gamma");
            break;
        case PathKind::B:
            require_finite(g, "g");
            if (!(g > -1.0 && g < 1.0)) throw DomainError("path B needs g in (-1, 1)");
            break;
        case PathKind::C:
            break;
        case PathKind::D:
            require_finite(alpha, "alpha");
            if (!(alpha > 0.0)) throw DomainError("path D needs alpha > 0");
            if (!(c >= 1.0)) throw DomainError("path D needs c >= 1");
            break;
        case PathKind::ExtIsing:
            break;
    }
}

ResolvedPair resolve_path(const PathSpec& spec) {
    spec.validate();
    const double eps = spec.epsilon();
    const double d = spec.delta;
    switch (spec.kind) {
        case PathKind::A:
            return {XYParams{1.0 + (eps + d), spec.gamma}, XYParams{1.0 + (eps - d), spec.gamma}};
        case PathKind::B:
            return {XYParams{spec.g, eps + d}, XYParams{spec.g, eps - d}};
        case PathKind::C:
            return {XYParams{1.0, eps + d}, XYParams{1.0, eps - d}};
        case PathKind::D:
            return {XYParams{1.0 + (eps + d), spec.alpha * (eps + d)},
                    XYParams{1.0 + (eps - d), spec.alpha * (eps - d)}};
        case PathKind::ExtIsing:
            return {ExtIsingParams{eps + d}, ExtIsingParams{eps - d}};
    }
    throw DomainError("unknown path kind");
}

void check_sites(std::int64_t n_sites) {
    if (n_sites < 2 || n_sites % 2 != 0) {
        throw DomainError("N must be even and >= 2, got " + std::to_string(n_sites));
    }
}

MomentumGrid::MomentumGrid(std::int64_t n_sites) : n_(n_sites) { check_sites(n_sites); }

double MomentumGrid::operator[](std::int64_t n) const {
    return std::numbers::pi * static_cast<double>(2 * n + 1) / static_cast<double>(n_);
}

double gap_xy(double k, const XYParams& p) {
    const double a = p.g - std::cos(k);
    const double b = p.gamma * std::sin(k);
    return 2.0 * std::hypot(a, b);
}

double gap_extising(double k, const ExtIsingParams& p) {
    const double g2 = p.g * p.g;
    // 4(1 + g^2 - (1 - g^2) cos k), written without the cancellation at small k, g
    return 4.0 * (one_minus_cos(k) + g2 * (1.0 + std::cos(k)));
}

ModeCoefficients mode_coefficients_xy(double k, const XYParams& p1, const XYParams& p2) {
    const double h = one_minus_cos(k);
    const double s = std::sin(k);
    const double a1 = (p1.g - 1.0) + h;
    const double a2 = (p2.g - 1.0) + h;
    const double gbar = 0.5 * (p1.gamma + p2.gamma);
    const double half_dg = 0.5 * (p2.gamma - p1.gamma);
    ModeCoefficients m;
    m.p = a1 * a2 + (p1.gamma * p2.gamma) * (s * s);
    m.q = s * (gbar * (p1.g - p2.g) + half_dg * (a1 + a2));
    return m;
}

ModeCoefficients mode_coefficients_extising(double k, double g1, double g2) {
    const double sh = std::sin(0.5 * k);
    const double ch = std::cos(0.5 * k);
    ModeCoefficients m;
    m.p = 2.0 * sh * sh + 2.0 * (g1 * g2) * ch * ch;
    m.q = (g1 - g2) * std::sin(k);
    return m;
}

double log_fk_xy(double k, const XYParams& p1, const XYParams& p2) {
    const ModeCoefficients m = mode_coefficients_xy(k, p1, p2);
    return log_overlap_from_pq(m.p, m.q);
}

double fk_xy(double k, const XYParams& p1, const XYParams& p2) {
    return std::exp(log_fk_xy(k, p1, p2));
}

double log_abs_fk_extising(double k, double g1, double g2) {
    const ModeCoefficients m = mode_coefficients_extising(k, g1, g2);
    if (m.p == 0.0 && m.q == 0.0) throw DegenerateModeError("f_k undefined: p_k = q_k = 0");
    if (m.p == 0.0) return -std::numeric_limits<double>::infinity();
    if (std::abs(m.q) < std::abs(m.p)) {
        const double t = m.q / m.p;
        return -0.5 * std::log1p(t * t);
    }
    return std::log(std::abs(m.p)) - std::log(std::hypot(m.p, m.q));
}

double fk_extising(double k, double g1, double g2) {
    const ModeCoefficients m = mode_coefficients_extising(k, g1, g2);
    if (m.p == 0.0 && m.q == 0.0) throw DegenerateModeError("f_k undefined: p_k = q_k = 0");
    return m.p / std::hypot(m.p, m.q);
}

double excitation_probability_xy(double k, const XYParams& p1, const XYParams& p2) {
    const ModeCoefficients m = mode_coefficients_xy(k, p1, p2);
    return excitation_from_pq(m.p, m.q);
}

double kc_anisotropic(double g) {
    if (!(g >= -1.0 && g <= 1.0)) throw DomainError("k_c needs |g| <= 1");
    return std::acos(g);
}

double correlation_length_xy(const XYParams& p) {
    require_finite(p.g, "g");
    require_finite(p.gamma, "gamma");
    const double g = std::abs(p.g);
    const double gm = std::abs(p.gamma);
    const std::complex<double> root = std::sqrt(std::complex<double>(g * g - 1.0 + gm * gm, 0.0));
    const double ratio = std::abs((1.0 + gm) / (g + root));
    const double l = std::log(ratio);
    if (!(std::abs(l) > 1e-14) || !std::isfinite(l)) {
        std::ostringstream msg;
        msg << "correlation length diverges at g=" << p.g << ", gamma=" << p.gamma;
        throw DomainError(msg.str());
    }
    return 1.0 / std::abs(l);
}

}  // namespace gsf
