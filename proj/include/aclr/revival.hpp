#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "aclr/evolution.hpp"

namespace aclr {

// Raised when the constraint system is singular or numerically degenerate
// (can happen for free or integrable dynamics).
struct DegenerateSystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The block of U(t*) coupling the top block (site-1 level g-1, columns)
// to the down block (site-1 level 0, rows).  rhs_row is the 0-based row
// of the designated basis state within the block.
struct RevivalSystem {
  Matrix matrix;
  Eigen::Index rhs_row;
};
RevivalSystem revival_system(const EigenSystem& eig, double t_star,
                             Eigen::Index designated_row = 0);

struct ReservoirSolution {
  Vector amplitudes;          // A, pre-normalization scaling (solved with the given d)
  double residual;            // relative residual of M A = d e_row
  double condition_estimate;  // sigma_max / sigma_min
};

// Solve M A = d e_{rhs_row} by partial-pivot LU with one refinement step.
// Throws std::invalid_argument for d = 0 and DegenerateSystemError when
// the condition estimate exceeds 1e12.
ReservoirSolution solve_reservoir(const Matrix& m, Eigen::Index rhs_row,
                                  std::complex<double> d = {1.0, 0.0});

struct RevivalConstruction {
  ChainSpec spec;
  double t_star = 0.0;
  QuantumState state;            // normalized Psi_in
  Vector reservoir_amplitudes;   // A, |d| = 1 scaling
  std::size_t designated_rank;   // 1-based basis rank of the designated state
  double xi = 0.0;               // sum |C_i|^2 over the top block at t*
  double residual = 0.0;
  double condition_estimate = 0.0;
  double overlap_at_tstar = 0.0;  // |<Psi_in|Psi_in(t*)>| dephasing diagnostic
  double leak_norm = 0.0;         // weight outside the separable form at t*
  double predicted_value = 0.0;   // (xi-1)/(xi+1) for S=1/2, else 1/(2S)
};

// Build the reviving state at the spec's revival site (solved at site 1,
// relabeled cyclically for other sites).
RevivalConstruction build_revival(const EigenSystem& eig, double t_star,
                                  Eigen::Index designated_row = 0,
                                  std::complex<double> d = {1.0, 0.0});

// (L, xi) table for the scaling regression; every entry uses the same
// couplings/spin/t* and a fresh diagonalization.
std::vector<std::pair<int, double>> xi_scaling(const ChainSpec& base,
                                               const std::vector<int>& lengths,
                                               double t_star);

// Weighted sum of reviving states, renormalized.  If overlaps != nullptr
// the pairwise overlap matrix is written there as a diagnostic.
QuantumState superpose_revivals(const std::vector<RevivalConstruction>& constructions,
                                const std::vector<std::complex<double>>& weights,
                                Matrix* overlaps = nullptr);

// Asymptotic revival value 1/(2S) for spin S = two_s/2.
double predicted_high_spin_value(int two_s);

}  // namespace aclr
