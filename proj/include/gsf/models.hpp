#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>

namespace gsf {

struct XYParams {
    double g = 0.0;
    double gamma = 1.0;
};

struct ExtIsingParams {
    double g = 0.0;
};

using ModelParams = std::variant<XYParams, ExtIsingParams>;

enum class PathKind { A, B, C, D, ExtIsing };

std::string path_name(PathKind kind);
PathKind parse_path(const std::string& name);  // "A".."D", "E"/"ExtIsing"

/// One of the parameterised families of state pairs. All paths use
/// eps = c|delta| and shift the two states by +-delta around it.
///   A: g = 1 + eps +- delta, gamma fixed
///   B: gamma = eps +- delta, g fixed in (-1, 1)
///   C: gamma = eps +- delta, g = 1
///   D: g = 1 + eps +- delta, gamma = alpha (eps +- delta), c >= 1
///   ExtIsing: g = eps +- delta
struct PathSpec {
    PathKind kind = PathKind::A;
    double delta = 0.0;
    double c = 0.0;
    double gamma = 1.0;  // A
    double g = 0.0;      // B
    double alpha = 1.0;  // D

    static PathSpec path_a(double gamma, double delta, double c);
    static PathSpec path_b(double g, double delta, double c);
    static PathSpec path_c(double delta, double c);
    static PathSpec path_d(double alpha, double delta, double c);
    static PathSpec ext_ising(double delta, double c);

    double epsilon() const;
    /// Throws DomainError when the path constraints are violated.
    void validate() const;
};

struct ResolvedPair {
    ModelParams first;
    ModelParams second;
};

ResolvedPair resolve_path(const PathSpec& spec);

/// Antiperiodic grid k_n = (2n+1) pi / N, n = 0 .. N/2-1.
class MomentumGrid {
public:
    explicit MomentumGrid(std::int64_t n_sites);
    std::int64_t sites() const { return n_; }
    std::int64_t size() const { return n_ / 2; }
    double operator[](std::int64_t n) const;

private:
    std::int64_t n_;
};

/// Throws DomainError unless N is even and >= 2.
void check_sites(std::int64_t n_sites);

double gap_xy(double k, const XYParams& p);
double gap_extising(double k, const ExtIsingParams& p);

/// Bogoliubov overlap coefficients for one mode; f_k^2 = (1 + p/r)/2 (XY),
/// f_k = p/r (extended Ising) with r = hypot(p, q). The expressions are
/// arranged so that swapping the states leaves p bit-identical and flips
/// the sign of q exactly.
struct ModeCoefficients {
    double p = 0.0;
    double q = 0.0;
};

ModeCoefficients mode_coefficients_xy(double k, const XYParams& p1, const XYParams& p2);
ModeCoefficients mode_coefficients_extising(double k, double g1, double g2);

/// ln f for f^2 = (1 + p/hypot(p, q))/2 and 1 - f^2, both free of
/// cancellation. Exposed for the scaling-variable integrals, which use the
/// same algebra with (p, q) = (l^2 + c^2 - 1, 2l).
double log_overlap_from_pq(double p, double q);
double excitation_from_pq(double p, double q);

double fk_xy(double k, const XYParams& p1, const XYParams& p2);
double fk_extising(double k, double g1, double g2);

/// ln f_k and ln|f_k|, accurate when f_k is close to 1 or close to 0.
/// Return -inf for an exact zero. Throw DegenerateModeError when p = q = 0.
double log_fk_xy(double k, const XYParams& p1, const XYParams& p2);
double log_abs_fk_extising(double k, double g1, double g2);

/// 1 - f_k^2 for the XY kernel, without cancellation.
double excitation_probability_xy(double k, const XYParams& p1, const XYParams& p2);

/// Momentum at which the anisotropic (gamma = 0) gap closes.
double kc_anisotropic(double g);

/// 1/|ln|(g - sqrt(g^2 - 1 + gamma^2))/(1 - gamma)||, evaluated in the
/// equivalent form (1 + gamma)/(g + sqrt(g^2 - 1 + gamma^2)) so gamma = 1
/// is not 0/0. Throws DomainError on the critical set (infinite length).
double correlation_length_xy(const XYParams& p);

}  // namespace gsf
