#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "gsf/models.hpp"

namespace gsf {

/// Ground state from dense diagonalisation, in the sigma^z product basis.
/// Bit n of a basis index is 0 for spin up on site n.
struct SpinState {
    int N = 0;
    std::vector<double> amplitudes;  // 2^N entries, unit norm
    double energy = 0.0;
    double even_gap = 0.0;           // second-lowest minus lowest level, even sector
    bool degenerate = false;         // even_gap below 1e-10
    bool odd_sector_lower = false;   // an odd-parity level lies below energy + 1e-8
};

struct OracleOptions {
    bool check_odd_sector = true;
};

inline constexpr int kOracleMaxSites = 14;

/// Full 2^N x 2^N Hamiltonian with periodic boundaries. Sites are relabelled
/// n -> (n + site_shift) mod N, which leaves the spectrum unchanged.
Eigen::MatrixXd assemble_hamiltonian(const ModelParams& params, int N, int site_shift = 0);

/// Lowest state of the sector with prod sigma^z = +1, embedded in the full
/// space, with the largest amplitude made positive. The block is exact: both
/// Hamiltonians conserve prod sigma^z.
SpinState ed_ground_state(const ModelParams& params, int N, const OracleOptions& opts = {});

/// |<a|b>|. DomainError when the sizes differ.
double ed_fidelity(const SpinState& a, const SpinState& b);
double ed_fidelity(const ModelParams& a, const ModelParams& b, int N);

/// <prod sigma^z>.
double parity_expectation(const SpinState& s);

/// Even-sector ground energy of the free-fermion solution, -sum_{k>0} eps_k.
double free_fermion_energy(const ModelParams& params, int N);

/// Smallest two-quasiparticle excitation 2 min_k eps_k on the even grid.
double free_fermion_pair_gap(const ModelParams& params, int N);

}  // namespace gsf
