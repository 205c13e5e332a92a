#pragma once

#include <cstdint>
#include <vector>

#include "aclr/revival.hpp"

namespace aclr {

// |1_1> (x) (|Psi_d> + lambda/sqrt(g^{L-1}) sum c_n |b_n>) with unit-circle
// phases c_n; Psi_d is the normalized reservoir vector; result renormalized.
QuantumState perturb_target(const RevivalConstruction& construction, double lambda,
                            Rng& rng);

// Preparation error E = |<target|experimental>|.
double preparation_error(const QuantumState& target, const QuantumState& experimental);

struct SweepPoint {
  double lambda = 0.0;
  double mean_sz = 0.0;      // mean revival value <Sbar^z_1(t*)>
  double stderr_sz = 0.0;    // standard error over realizations
  double mean_error = 0.0;   // mean preparation error E
  int n_realizations = 0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::uint64_t seed = 0;
};

// Perturbation sweep: for each lambda and realization, perturb the ideal
// state, evolve to t*, record the revival value and E.  Realization i of
// lambda index j uses substream(seed, j, i), so the result is identical
// for any worker count.
SweepResult lambda_sweep(const EigenSystem& eig, const RevivalConstruction& construction,
                         const std::vector<double>& lambdas, int n_realizations,
                         std::uint64_t seed, int n_threads = 1);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int region_begin = 0;  // half-open index range into the sweep grid
  int region_end = 0;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Least-squares fit of E against delta = 1 - revival value over the
// contiguous window (>= 4 points) maximizing r^2.
LinearFit fit_error_relation(const SweepResult& sweep);

}  // namespace aclr
