#include "aclr/spectra.hpp"

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace aclr {

std::vector<SectorSpectrum> momentum_sectors(const Matrix& hamiltonian,
                                             const std::vector<std::size_t>& shift,
                                             int length) {
  const auto dim = static_cast<std::size_t>(hamiltonian.rows());
  if (shift.size() != dim)
    throw std::invalid_argument("momentum_sectors: permutation size mismatch");

  // [H, T] = 0 check through the permutation: H(p(i), p(j)) == H(i, j).
  double max_violation = 0.0;
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i)
      max_violation = std::max(
          max_violation,
          std::abs(hamiltonian(static_cast<Eigen::Index>(shift[i]),
                               static_cast<Eigen::Index>(shift[j])) -
                   hamiltonian(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
  const double scale = hamiltonian.cwiseAbs().maxCoeff();
  if (max_violation > 1e-10 * std::max(1.0, scale))
    throw std::invalid_argument("momentum_sectors: H does not commute with the shift");

  // Translation orbits of the basis states.
  std::vector<char> visited(dim, 0);
  struct Orbit {
    std::vector<std::size_t> states;  // b, Tb, T^2 b, ...
  };
  std::vector<Orbit> orbits;
  for (std::size_t b = 0; b < dim; ++b) {
    if (visited[b]) continue;
    Orbit orbit;
    std::size_t cur = b;
    do {
      visited[cur] = 1;
      orbit.states.push_back(cur);
      cur = shift[cur];
    } while (cur != b);
    orbits.push_back(std::move(orbit));
  }

  // Sparse copy of H for cheap projections into the sector bases.
  Eigen::SparseMatrix<std::complex<double>> hs(static_cast<Eigen::Index>(dim),
                                               static_cast<Eigen::Index>(dim));
  {
    std::vector<Eigen::Triplet<std::complex<double>>> trips;
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i = 0; i < dim; ++i) {
        const auto v = hamiltonian(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (std::abs(v) > 1e-14) trips.emplace_back(static_cast<int>(i), static_cast<int>(j), v);
      }
    hs.setFromTriplets(trips.begin(), trips.end());
  }

  std::vector<SectorSpectrum> sectors;
  sectors.reserve(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) {
    // Momentum-k states: (1/sqrt(p)) sum_j w^{-kj} |T^j b>, allowed when
    // the orbit period p satisfies k p = 0 mod L.
    std::vector<const Orbit*> allowed;
    for (const auto& orbit : orbits)
      if ((static_cast<std::size_t>(k) * orbit.states.size()) % static_cast<std::size_t>(length) == 0)
        allowed.push_back(&orbit);
    SectorSpectrum sector;
    sector.momentum = k;
    if (allowed.empty()) {
      sectors.push_back(std::move(sector));
      continue;
    }
    Matrix basis = Matrix::Zero(static_cast<Eigen::Index>(dim),
                                static_cast<Eigen::Index>(allowed.size()));
    for (std::size_t c = 0; c < allowed.size(); ++c) {
      const auto& states = allowed[c]->states;
      const double norm = 1.0 / std::sqrt(static_cast<double>(states.size()));
      for (std::size_t j = 0; j < states.size(); ++j) {
        const double phi = -2.0 * M_PI * k * static_cast<double>(j) / length;
        basis(static_cast<Eigen::Index>(states[j]), static_cast<Eigen::Index>(c)) =
            norm * std::complex<double>(std::cos(phi), std::sin(phi));
      }
    }
    Matrix hk = basis.adjoint() * (hs * basis);
    hk = (hk + hk.adjoint().eval()) / 2.0;  // symmetrize roundoff
    const auto nk = static_cast<lapack_int>(hk.rows());
    Eigen::VectorXd levels(nk);
    const lapack_int info = LAPACKE_zheevd(
        LAPACK_COL_MAJOR, 'N', 'L', nk,
        reinterpret_cast<lapack_complex_double*>(hk.data()), nk, levels.data());
    if (info != 0) throw std::runtime_error("momentum_sectors: zheevd failed");
    sector.levels.assign(levels.data(), levels.data() + nk);
    sectors.push_back(std::move(sector));
  }
  return sectors;
}

std::vector<double> unfold(const std::vector<double>& levels, int degree) {
  if (levels.size() < 50) throw std::invalid_argument("unfold: need at least 50 levels");
  if (degree < 3) throw std::invalid_argument("unfold: degree must be >= 3");
  std::vector<double> sorted = levels;
  std::sort(sorted.begin(), sorted.end());

  const auto n = sorted.size();
  const auto trim = static_cast<std::size_t>(0.05 * static_cast<double>(n));
  const std::vector<double> kept(sorted.begin() + static_cast<std::ptrdiff_t>(trim),
                                 sorted.end() - static_cast<std::ptrdiff_t>(trim));
  const auto m = kept.size();
  const int deg = std::min<int>(degree, static_cast<int>(m) - 1);

  // Least-squares polynomial fit of the staircase N(E), energies rescaled
  // to [-1, 1] for conditioning.
  const double lo = kept.front(), hi = kept.back();
  const double mid = 0.5 * (lo + hi), half = std::max(0.5 * (hi - lo), 1e-300);
  Eigen::MatrixXd vand(static_cast<Eigen::Index>(m), deg + 1);
  Eigen::VectorXd counts(static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) {
    const double x = (kept[i] - mid) / half;
    double p = 1.0;
    for (int d = 0; d <= deg; ++d) {
      vand(static_cast<Eigen::Index>(i), d) = p;
      p *= x;
    }
    counts(static_cast<Eigen::Index>(i)) = static_cast<double>(i) + 0.5;
  }
  const Eigen::VectorXd coef = vand.colPivHouseholderQr().solve(counts);

  std::vector<double> mapped;
  mapped.reserve(m);
  for (double level : kept) {
    const double x = (level - mid) / half;
    double value = 0.0, p = 1.0;
    for (int d = 0; d <= deg; ++d) {
      value += coef(d) * p;
      p *= x;
    }
    mapped.push_back(value);
  }
  std::vector<double> spacings;
  spacings.reserve(m - 1);
  for (std::size_t i = 1; i < m; ++i) spacings.push_back(mapped[i] - mapped[i - 1]);
  return spacings;
}

SpacingStats spacing_ratios(const std::vector<double>& levels, double tol) {
  if (levels.size() < 50) throw std::invalid_argument("spacing_ratios: need at least 50 levels");
  std::vector<double> sorted = levels;
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> gaps;
  gaps.reserve(sorted.size() - 1);
  for (std::size_t i = 1; i < sorted.size(); ++i) gaps.push_back(sorted[i] - sorted[i - 1]);
  const double mean_gap =
      std::accumulate(gaps.begin(), gaps.end(), 0.0) / static_cast<double>(gaps.size());

  // Gaps below the tolerance are degeneracies up to solver noise; they count
  // as zero spacings (r = 0 against a finite neighbor) so that integrable
  // spectra keep their clustering signature.  Runs of three or more
  // degenerate levels would give 0/0 and are skipped.
  SpacingStats stats;
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
    const double a = gaps[i] > tol * mean_gap ? gaps[i] : 0.0;
    const double b = gaps[i + 1] > tol * mean_gap ? gaps[i + 1] : 0.0;
    const double widest = std::max(a, b);
    if (widest == 0.0) continue;
    stats.r_values.push_back(std::min(a, b) / widest);
  }
  if (stats.r_values.empty()) throw std::invalid_argument("spacing_ratios: spectrum fully degenerate");
  stats.mean_r = std::accumulate(stats.r_values.begin(), stats.r_values.end(), 0.0) /
                 static_cast<double>(stats.r_values.size());
  return stats;
}

}  // namespace aclr
