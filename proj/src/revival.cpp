#include "aclr/revival.hpp"

#include <Eigen/SVD>

#include <iostream>

#include "aclr/basis.hpp"

namespace aclr {

RevivalSystem revival_system(const EigenSystem& eig, double t_star,
                             Eigen::Index designated_row) {
  const auto& spec = eig.spec;
  const auto dim = static_cast<Eigen::Index>(eig.dimension());
  const auto block = dim / spec.local_dim();  // g^{L-1}
  if (designated_row < 0 || designated_row >= block)
    throw std::out_of_range("revival_system: designated row out of the down block");

  // M = U(t*)[down-block rows, top-block columns] through the eigenbasis;
  // the full propagator is never formed.
  Vector phases(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    phases(i) = std::exp(std::complex<double>(0.0, -eig.energies(i) * t_star));
  RevivalSystem sys;
  sys.matrix = eig.vectors.bottomRows(block) * phases.asDiagonal() *
               eig.vectors.topRows(block).adjoint();
  sys.rhs_row = designated_row;
  return sys;
}

ReservoirSolution solve_reservoir(const Matrix& m, Eigen::Index rhs_row,
                                  std::complex<double> d) {
  if (m.rows() != m.cols()) throw std::invalid_argument("solve_reservoir: non-square system");
  if (rhs_row < 0 || rhs_row >= m.rows())
    throw std::out_of_range("solve_reservoir: rhs row out of range");
  if (d == std::complex<double>{})
    throw std::invalid_argument("solve_reservoir: d = 0 admits only the trivial solution");

  Eigen::BDCSVD<Matrix> svd(m);
  const double sigma_max = svd.singularValues()(0);
  const double sigma_min = svd.singularValues()(svd.singularValues().size() - 1);
  const double condition = sigma_min > 0.0 ? sigma_max / sigma_min
                                           : std::numeric_limits<double>::infinity();
  // An all-but-zero block (e.g. U(0) has no up/down coupling) yields tiny
  // singular values whose ratio can still look benign; floor sigma_max.
  if (!(condition < 1e12) || sigma_max < 1e-8)
    throw DegenerateSystemError(
        "solve_reservoir: constraint system is numerically degenerate "
        "(possible for free or integrable dynamics)");

  Vector rhs = Vector::Zero(m.rows());
  rhs(rhs_row) = d;
  Eigen::PartialPivLU<Matrix> lu(m);
  Vector a = lu.solve(rhs);
  a += lu.solve(rhs - m * a);  // one step of iterative refinement

  ReservoirSolution out;
  out.amplitudes = std::move(a);
  out.residual = (m * out.amplitudes - rhs).norm() / rhs.norm();
  out.condition_estimate = condition;
  return out;
}

namespace {

// Relabel a site-1 construction to `site` via the cyclic shift permutation.
QuantumState relabel_to_site(const QuantumState& state, const ChainSpec& spec, int site) {
  if (site == 1) return state;
  const auto perm = translation_permutation(spec);
  QuantumState out = state;
  for (int step = 1; step < site; ++step) {
    QuantumState next(out.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
      next(static_cast<Eigen::Index>(perm[i])) = out(static_cast<Eigen::Index>(i));
    out = std::move(next);
  }
  return out;
}

}  // namespace

RevivalConstruction build_revival(const EigenSystem& eig, double t_star,
                                  Eigen::Index designated_row, std::complex<double> d) {
  const auto& spec = eig.spec;
  const auto dim = static_cast<Eigen::Index>(eig.dimension());
  const auto block = dim / spec.local_dim();

  auto sys = revival_system(eig, t_star, designated_row);
  auto sol = solve_reservoir(sys.matrix, sys.rhs_row, d);

  // Unnormalized Psi_in: reservoir amplitudes on the top block.
  QuantumState raw = QuantumState::Zero(dim);
  raw.head(block) = sol.amplitudes;
  const QuantumState evolved = evolve(eig, raw, t_star);

  RevivalConstruction c;
  c.spec = spec;
  c.t_star = t_star;
  c.reservoir_amplitudes = sol.amplitudes;
  c.residual = sol.residual;
  c.condition_estimate = sol.condition_estimate;
  c.designated_rank =
      static_cast<std::size_t>((dim - block) + designated_row) + 1;
  c.xi = evolved.head(block).squaredNorm();
  const double total = evolved.squaredNorm();
  c.leak_norm = std::sqrt(std::max(0.0, total - c.xi) / total);
  c.predicted_value =
      spec.two_s == 1 ? (c.xi - 1.0) / (c.xi + 1.0) : predicted_high_spin_value(spec.two_s);
  c.overlap_at_tstar = std::abs(overlap(raw, evolved)) / raw.squaredNorm();
  if (c.overlap_at_tstar > 0.1)
    std::cerr << "warning: |<Psi_in|Psi_in(t*)>| = " << c.overlap_at_tstar
              << "; t* may be too short for dephasing\n";
  c.state = relabel_to_site(normalized(raw), spec, spec.revival_site);
  return c;
}

std::vector<std::pair<int, double>> xi_scaling(const ChainSpec& base,
                                               const std::vector<int>& lengths,
                                               double t_star) {
  std::vector<std::pair<int, double>> table;
  table.reserve(lengths.size());
  for (int length : lengths) {
    ChainSpec spec = base;
    spec.length = length;
    spec.revival_site = 1;
    const auto eig = diagonalize_chain(spec);
    table.emplace_back(length, build_revival(eig, t_star).xi);
  }
  return table;
}

QuantumState superpose_revivals(const std::vector<RevivalConstruction>& constructions,
                                const std::vector<std::complex<double>>& weights,
                                Matrix* overlaps) {
  if (constructions.empty() || constructions.size() != weights.size())
    throw std::invalid_argument("superpose_revivals: constructions/weights mismatch");
  const auto n = static_cast<Eigen::Index>(constructions.size());
  const auto dim = constructions.front().state.size();
  for (const auto& c : constructions) {
    if (c.state.size() != dim)
      throw std::invalid_argument("superpose_revivals: dimension mismatch");
    if (!(c.spec == constructions.front().spec))
      throw std::invalid_argument("superpose_revivals: specs differ");
  }
  if (overlaps != nullptr) {
    overlaps->resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        (*overlaps)(i, j) = overlap(constructions[static_cast<std::size_t>(i)].state,
                                    constructions[static_cast<std::size_t>(j)].state);
  }
  QuantumState sum = QuantumState::Zero(dim);
  for (std::size_t i = 0; i < constructions.size(); ++i)
    sum += weights[i] * constructions[i].state;
  return normalized(sum);
}

double predicted_high_spin_value(int two_s) {
  if (two_s < 1) throw std::invalid_argument("predicted_high_spin_value: two_s must be >= 1");
  return 1.0 / two_s;  // 1/(2S)
}

}  // namespace aclr
