#include "gsf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include <lapacke.h>

#include "gsf/error.hpp"
#include "gsf/summation.hpp"

namespace gsf {

namespace {

void check_oracle_sites(int N) {
    if (N < 2 || N > kOracleMaxSites || N % 2 != 0) {
        throw DomainError("oracle needs even N in [2, " + std::to_string(kOracleMaxSites) + "], got " +
                          std::to_string(N));
    }
}

using State = std::uint32_t;

inline State flip(State s, int a, int b) { return s ^ (State(1) << a) ^ (State(1) << b); }
inline double spin_z(State s, int a) { return ((s >> a) & 1u) ? -1.0 : 1.0; }

// Calls emit(target, value) for every nonzero <target|H|s>.
template <class Emit>
void apply_terms(const ModelParams& params, int N, int shift, State s, Emit emit) {
    auto site = [N, shift](int n) { return (n + shift) % N; };
    if (const auto* xy = std::get_if<XYParams>(&params)) {
        double diag = 0.0;
        for (int n = 0; n < N; ++n) {
            const int a = site(n);
            const int b = site(n + 1);
            diag -= xy->g * spin_z(s, a);
            // (1+gamma)/2 XX + (1-gamma)/2 YY: gamma on aligned pairs, 1 on anti-aligned
            const bool aligned = spin_z(s, a) == spin_z(s, b);
            emit(flip(s, a, b), aligned ? -xy->gamma : -1.0);
        }
        emit(s, diag);
        return;
    }
    const double g = std::get<ExtIsingParams>(params).g;
    const double xx = -2.0 * (1.0 - g * g);
    const double xzx = (1.0 - g) * (1.0 - g);
    const double zz = -(1.0 + g) * (1.0 + g);
    double diag = 0.0;
    for (int n = 0; n < N; ++n) {
        const int a = site(n);
        const int b = site(n + 1);
        const int c = site(n + 2);
        diag += zz * spin_z(s, a);
        emit(flip(s, a, b), xx);
        emit(flip(s, a, c), xzx * spin_z(s, b));
    }
    emit(s, diag);
}

// Dense block of H on basis states with the given number-of-down-spins parity.
Eigen::MatrixXd assemble_block(const ModelParams& params, int N, int parity,
                               std::vector<State>& states) {
    const State dim = State(1) << N;
    std::vector<std::int32_t> index(dim, -1);
    states.clear();
    for (State s = 0; s < dim; ++s) {
        if ((std::popcount(s) & 1) == parity) {
            index[s] = static_cast<std::int32_t>(states.size());
            states.push_back(s);
        }
    }
    const auto m = static_cast<Eigen::Index>(states.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        apply_terms(params, N, 0, states[static_cast<std::size_t>(j)], [&](State t, double v) {
            h(index[t], j) += v;
        });
    }
    return h;
}

// Number of eigenvalues of the symmetric matrix a below zero (Sylvester inertia).
int negative_count(Eigen::MatrixXd a) {
    const auto n = static_cast<lapack_int>(a.rows());
    std::vector<lapack_int> ipiv(static_cast<std::size_t>(n));
    const lapack_int info = LAPACKE_dsytrf(LAPACK_COL_MAJOR, 'L', n, a.data(), n, ipiv.data());
    if (info < 0) throw ConvergenceError("dsytrf failed with info " + std::to_string(info));
    int neg = 0;
    for (lapack_int i = 0; i < n; ++i) {
        if (ipiv[static_cast<std::size_t>(i)] > 0) {
            if (a(i, i) < 0.0) ++neg;
        } else {
            const double p = a(i, i);
            const double q = a(i + 1, i);
            const double r = a(i + 1, i + 1);
            const double det = p * r - q * q;
            if (det < 0.0) {
                neg += 1;
            } else if (p + r < 0.0) {
                neg += 2;
            }
            ++i;
        }
    }
    return neg;
}

}  // namespace

Eigen::MatrixXd assemble_hamiltonian(const ModelParams& params, int N, int site_shift) {
    check_oracle_sites(N);
    const State dim = State(1) << N;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    const int shift = ((site_shift % N) + N) % N;
    for (State s = 0; s < dim; ++s) {
        apply_terms(params, N, shift, s, [&](State t, double v) { h(t, s) += v; });
    }
    return h;
}

SpinState ed_ground_state(const ModelParams& params, int N, const OracleOptions& opts) {
    check_oracle_sites(N);
    std::vector<State> states;
    Eigen::MatrixXd h = assemble_block(params, N, 0, states);
    const auto m = static_cast<lapack_int>(h.rows());
    const lapack_int want = std::min<lapack_int>(2, m);
    std::vector<double> w(static_cast<std::size_t>(m));
    Eigen::MatrixXd z(m, want);
    std::vector<lapack_int> support(2 * static_cast<std::size_t>(want));
    lapack_int found = 0;
    const lapack_int info =
        LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', m, h.data(), m, 0.0, 0.0, 1, want, 0.0,
                       &found, w.data(), z.data(), m, support.data());
    if (info != 0 || found < 1) throw ConvergenceError("dsyevr failed with info " + std::to_string(info));

    SpinState out;
    out.N = N;
    out.energy = w[0];
    out.even_gap = found > 1 ? w[1] - w[0] : std::numeric_limits<double>::infinity();
    out.degenerate = out.even_gap < 1e-10;

    Eigen::VectorXd v = z.col(0);
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (v(imax) < 0.0) v = -v;
    v.normalize();
    out.amplitudes.assign(std::size_t(1) << N, 0.0);
    for (Eigen::Index i = 0; i < v.size(); ++i) out.amplitudes[states[static_cast<std::size_t>(i)]] = v(i);

    if (opts.check_odd_sector) {
        Eigen::MatrixXd odd = assemble_block(params, N, 1, states);
        odd.diagonal().array() -= out.energy + 1e-8;
        out.odd_sector_lower = negative_count(std::move(odd)) > 0;
    }
    return out;
}

double ed_fidelity(const SpinState& a, const SpinState& b) {
    if (a.N != b.N || a.amplitudes.size() != b.amplitudes.size()) {
        throw DomainError("overlap between states of different size");
    }
    CompensatedSum dot;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i) dot.add(a.amplitudes[i] * b.amplitudes[i]);
    return std::min(1.0, std::abs(dot.value()));
}

double ed_fidelity(const ModelParams& a, const ModelParams& b, int N) {
    if (a.index() != b.index()) throw DomainError("overlap between different models");
    const OracleOptions opts{false};
    return ed_fidelity(ed_ground_state(a, N, opts), ed_ground_state(b, N, opts));
}

double parity_expectation(const SpinState& s) {
    CompensatedSum sum;
    for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
        const double sign = (std::popcount(i) & 1) ? -1.0 : 1.0;
        sum.add(sign * s.amplitudes[i] * s.amplitudes[i]);
    }
    return sum.value();
}

namespace {

double mode_energy(const ModelParams& params, double k) {
    if (const auto* xy = std::get_if<XYParams>(&params)) return gap_xy(k, *xy);
    return gap_extising(k, std::get<ExtIsingParams>(params));
}

}  // namespace

double free_fermion_energy(const ModelParams& params, int N) {
    const MomentumGrid grid(N);
    CompensatedSum sum;
    for (std::int64_t n = 0; n < grid.size(); ++n) sum.add(mode_energy(params, grid[n]));
    return -sum.value();
}

double free_fermion_pair_gap(const ModelParams& params, int N) {
    const MomentumGrid grid(N);
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t n = 0; n < grid.size(); ++n) best = std::min(best, mode_energy(params, grid[n]));
    return 2.0 * best;
}

}  // namespace gsf
