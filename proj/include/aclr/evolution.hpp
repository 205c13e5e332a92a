#pragma once

#include <complex>
#include <vector>

#include "aclr/operators.hpp"
#include "aclr/rng.hpp"

namespace aclr {

using QuantumState = Vector;

// Eigendecomposition of the chain Hamiltonian; the engine for all time
// evolution.  energies ascending, vectors' columns are the eigenstates.
struct EigenSystem {
  ChainSpec spec;
  Eigen::VectorXd energies;
  Matrix vectors;

  std::size_t dimension() const { return static_cast<std::size_t>(energies.size()); }
};

// Throws std::invalid_argument if H is not Hermitian.
EigenSystem eigendecompose(const Matrix& hamiltonian, const ChainSpec& spec);

// Convenience: build H for the spec and diagonalize it.
EigenSystem diagonalize_chain(const ChainSpec& spec);

// U(t) = V diag(exp(-i E_n t)) V^dag, materialized densely.
Matrix propagator(const EigenSystem& eig, double t);

// Evolution through the eigenbasis (three matvecs, never forms U).
QuantumState evolve(const EigenSystem& eig, const QuantumState& state, double t);

double state_norm(const QuantumState& state);
QuantumState normalized(const QuantumState& state);
std::complex<double> overlap(const QuantumState& a, const QuantumState& b);

// <state|op|state>; throws if the imaginary residue exceeds tolerance.
double expectation(const QuantumState& state, const Matrix& op);

// Normalized one-site observables <S^a_site>/S via the reduced density
// matrix (no operator embedding).
struct LocalExpectations {
  double sx, sy, sz;
};
LocalExpectations local_expectations(const QuantumState& state, int site,
                                     const ChainSpec& spec);

// Infinite-temperature state: independent complex-Gaussian coefficients
// over the eigenbasis, normalized.
QuantumState sample_infinite_temperature(const EigenSystem& eig, Rng& rng);

// Haar-typical random direction in an n-dimensional space.
Vector random_direction(std::size_t n, Rng& rng);

// Product state |level at site> (x) random reservoir, in chain basis order.
QuantumState thermal_product_state(const ChainSpec& spec, int site, Rng& rng);

// (|psi0(0)> + |psi0(-t*)>)/sqrt(2), renormalized exactly.
QuantumState half_revival_state(const EigenSystem& eig, const QuantumState& psi0,
                            double t_star);

struct ObservableSeries {
  std::vector<double> times;
  std::vector<double> sx, sy, sz;
};
ObservableSeries observable_series(const EigenSystem& eig, const QuantumState& state,
                                   int site, const std::vector<double>& times);

}  // namespace aclr
