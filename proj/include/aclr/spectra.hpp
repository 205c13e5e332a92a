#pragma once

#include <vector>

#include "aclr/operators.hpp"

namespace aclr {

struct SectorSpectrum {
  int momentum = 0;  // k in [0, L-1]
  std::vector<double> levels;  // ascending
};

// Simultaneous block diagonalization of H over translation momentum
// sectors.  `shift` is the offset permutation from translation_permutation.
// Throws std::invalid_argument if H does not commute with the shift.
std::vector<SectorSpectrum> momentum_sectors(const Matrix& hamiltonian,
                                             const std::vector<std::size_t>& shift,
                                             int length);

// Spectral unfolding: trim 5% of levels at each edge, fit the integrated
// density of states with a polynomial of the given degree, map the levels
// through the fit and return consecutive differences (mean ~ 1).
std::vector<double> unfold(const std::vector<double>& levels, int degree = 10);

struct SpacingStats {
  double mean_r = 0.0;
  std::vector<double> r_values;
};

// Consecutive-gap ratios r_n = min(s_n, s_{n+1}) / max(s_n, s_{n+1}).
// Gaps below `tol` relative to the mean gap count as exact degeneracies
// (zero spacings, r = 0); pairs where both gaps vanish are skipped.
SpacingStats spacing_ratios(const std::vector<double>& levels, double tol = 1e-10);

}  // namespace aclr
