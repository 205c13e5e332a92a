#include "aclr/evolution.hpp"

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include <stdexcept>

#include "aclr/basis.hpp"

namespace aclr {

EigenSystem eigendecompose(const Matrix& hamiltonian, const ChainSpec& spec) {
  if (hamiltonian.rows() != hamiltonian.cols())
    throw std::invalid_argument("eigendecompose: matrix not square");
  if (!is_hermitian(hamiltonian))
    throw std::invalid_argument("eigendecompose: matrix not Hermitian");

  EigenSystem eig;
  eig.spec = spec;
  const auto n = static_cast<lapack_int>(hamiltonian.rows());
  eig.vectors = hamiltonian;  // zheevd overwrites with the eigenvectors
  eig.energies.resize(n);
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, 'V', 'L', n,
      reinterpret_cast<lapack_complex_double*>(eig.vectors.data()), n,
      eig.energies.data());
  if (info != 0) throw std::runtime_error("eigendecompose: zheevd failed");
  return eig;
}

EigenSystem diagonalize_chain(const ChainSpec& spec) {
  return eigendecompose(build_hamiltonian(spec), spec);
}

Matrix propagator(const EigenSystem& eig, double t) {
  const auto n = static_cast<Eigen::Index>(eig.dimension());
  Vector phases(n);
  for (Eigen::Index i = 0; i < n; ++i)
    phases(i) = std::exp(std::complex<double>(0.0, -eig.energies(i) * t));
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

QuantumState evolve(const EigenSystem& eig, const QuantumState& state, double t) {
  if (state.size() != static_cast<Eigen::Index>(eig.dimension()))
    throw std::invalid_argument("evolve: state dimension mismatch");
  Vector coeffs = eig.vectors.adjoint() * state;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i)
    coeffs(i) *= std::exp(std::complex<double>(0.0, -eig.energies(i) * t));
  return eig.vectors * coeffs;
}

double state_norm(const QuantumState& state) { return state.norm(); }

QuantumState normalized(const QuantumState& state) {
  const double n = state.norm();
  if (n == 0.0) throw std::invalid_argument("normalized: zero state");
  return state / n;
}

std::complex<double> overlap(const QuantumState& a, const QuantumState& b) {
  if (a.size() != b.size()) throw std::invalid_argument("overlap: dimension mismatch");
  return a.dot(b);  // conjugate-linear in the first argument
}

double expectation(const QuantumState& state, const Matrix& op) {
  if (state.size() != op.rows())
    throw std::invalid_argument("expectation: dimension mismatch");
  const std::complex<double> value = state.dot(op * state);
  if (std::abs(value.imag()) > 1e-10 * std::max(1.0, std::abs(value.real())))
    throw std::runtime_error("expectation: non-negligible imaginary part");
  return value.real();
}

LocalExpectations local_expectations(const QuantumState& state, int site,
                                     const ChainSpec& spec) {
  const int g = spec.local_dim();
  if (site < 1 || site > spec.length)
    throw std::out_of_range("local_expectations: site out of [1, L]");
  const std::size_t dim = spec.dimension();
  if (state.size() != static_cast<Eigen::Index>(dim))
    throw std::invalid_argument("local_expectations: state dimension mismatch");
  const auto stride = static_cast<std::ptrdiff_t>(
      ipow(static_cast<std::size_t>(g), spec.length - site));

  // Reduced density matrix of the site, indexed by local level.
  Matrix rho = Matrix::Zero(g, g);
  for (std::size_t i = 0; i < dim; ++i) {
    const int v = digit_at(i, site, g, spec.length);
    const int lv = (g - 1) - v;
    for (int w = 0; w < g; ++w) {
      const auto j = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) +
                                              (v - w) * stride);
      rho((g - 1) - w, lv) += state(static_cast<Eigen::Index>(j)) *
                              std::conj(state(static_cast<Eigen::Index>(i)));
    }
  }
  const auto [sx, sy, sz] = spin_matrices(spec.two_s);
  const double s = spec.spin();
  LocalExpectations out;
  out.sx = (rho * sx).trace().real() / s;
  out.sy = (rho * sy).trace().real() / s;
  out.sz = (rho * sz).trace().real() / s;
  return out;
}

Vector random_direction(std::size_t n, Rng& rng) {
  Vector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.complex_gaussian();
  return normalized(v);
}

QuantumState sample_infinite_temperature(const EigenSystem& eig, Rng& rng) {
  const Vector coeffs = random_direction(eig.dimension(), rng);
  return eig.vectors * coeffs;
}

QuantumState thermal_product_state(const ChainSpec& spec, int site, Rng& rng) {
  spec.validate();
  if (site < 1 || site > spec.length)
    throw std::out_of_range("thermal_product_state: site out of [1, L]");
  const std::size_t dim = spec.dimension();
  const std::size_t block = dim / static_cast<std::size_t>(spec.local_dim());
  const Vector reservoir = random_direction(block, rng);
  QuantumState state = QuantumState::Zero(static_cast<Eigen::Index>(dim));
  // Site-(g-1) level at `site`: with site 1 this is the leading block; for
  // other sites, scatter through the digit layout.
  if (site == 1) {
    state.head(static_cast<Eigen::Index>(block)) = reservoir;
    return state;
  }
  const int g = spec.local_dim();
  Eigen::Index k = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (digit_at(i, site, g, spec.length) == g - 1)
      state(static_cast<Eigen::Index>(i)) = reservoir(k++);
  }
  return state;
}

QuantumState half_revival_state(const EigenSystem& eig, const QuantumState& psi0,
                            double t_star) {
  const QuantumState back = evolve(eig, psi0, -t_star);
  return normalized(psi0 + back);
}

ObservableSeries observable_series(const EigenSystem& eig, const QuantumState& state,
                                   int site, const std::vector<double>& times) {
  ObservableSeries series;
  series.times = times;
  series.sx.reserve(times.size());
  series.sy.reserve(times.size());
  series.sz.reserve(times.size());
  const Vector coeffs = eig.vectors.adjoint() * state;
  for (double t : times) {
    Vector phased = coeffs;
    for (Eigen::Index i = 0; i < phased.size(); ++i)
      phased(i) *= std::exp(std::complex<double>(0.0, -eig.energies(i) * t));
    const QuantumState evolved = eig.vectors * phased;
    const auto vals = local_expectations(evolved, site, eig.spec);
    series.sx.push_back(vals.sx);
    series.sy.push_back(vals.sy);
    series.sz.push_back(vals.sz);
  }
  return series;
}

}  // namespace aclr
