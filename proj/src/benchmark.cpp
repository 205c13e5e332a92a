#include "aclr/benchmark.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

namespace aclr {

QuantumState perturb_target(const RevivalConstruction& construction, double lambda,
                            Rng& rng) {
  if (lambda < 0.0) throw std::invalid_argument("perturb_target: lambda must be >= 0");
  const auto dim = construction.state.size();
  const auto block = construction.reservoir_amplitudes.size();
  Vector reservoir = construction.reservoir_amplitudes.normalized();
  const double scale = lambda / std::sqrt(static_cast<double>(block));
  for (Eigen::Index i = 0; i < block; ++i) reservoir(i) += scale * rng.unit_phase();
  QuantumState state = QuantumState::Zero(dim);
  state.head(block) = reservoir;
  return normalized(state);
}

double preparation_error(const QuantumState& target, const QuantumState& experimental) {
  return std::abs(overlap(target, experimental));
}

namespace {

// Deterministic indexed parallel map: results land by index, so the output
// does not depend on the worker count or scheduling.
void parallel_for(int n, int n_threads, const std::function<void(int)>& body) {
  if (n_threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  const int count = std::min(n_threads, n);
  workers.reserve(static_cast<std::size_t>(count));
  for (int w = 0; w < count; ++w) {
    workers.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace

SweepResult lambda_sweep(const EigenSystem& eig, const RevivalConstruction& construction,
                         const std::vector<double>& lambdas, int n_realizations,
                         std::uint64_t seed, int n_threads) {
  if (n_realizations < 1)
    throw std::invalid_argument("lambda_sweep: n_realizations must be >= 1");
  for (std::size_t j = 1; j < lambdas.size(); ++j)
    if (lambdas[j] <= lambdas[j - 1])
      throw std::invalid_argument("lambda_sweep: grid must be ascending");

  const QuantumState ideal = construction.state;
  const int site = construction.spec.revival_site;
  const int n_points = static_cast<int>(lambdas.size());
  const int total = n_points * n_realizations;

  std::vector<double> sz(static_cast<std::size_t>(total));
  std::vector<double> err(static_cast<std::size_t>(total));
  parallel_for(total, n_threads, [&](int task) {
    const int j = task / n_realizations;
    const int i = task % n_realizations;
    Rng rng = Rng::substream(seed, {static_cast<std::uint64_t>(j),
                                    static_cast<std::uint64_t>(i)});
    const QuantumState prepared =
        perturb_target(construction, lambdas[static_cast<std::size_t>(j)], rng);
    const QuantumState evolved = evolve(eig, prepared, construction.t_star);
    sz[static_cast<std::size_t>(task)] = local_expectations(evolved, site, eig.spec).sz;
    err[static_cast<std::size_t>(task)] = preparation_error(ideal, prepared);
  });

  SweepResult result;
  result.seed = seed;
  result.points.reserve(lambdas.size());
  for (int j = 0; j < n_points; ++j) {
    SweepPoint p;
    p.lambda = lambdas[static_cast<std::size_t>(j)];
    p.n_realizations = n_realizations;
    double sum = 0.0, sum_err = 0.0;
    for (int i = 0; i < n_realizations; ++i) {
      sum += sz[static_cast<std::size_t>(j * n_realizations + i)];
      sum_err += err[static_cast<std::size_t>(j * n_realizations + i)];
    }
    p.mean_sz = sum / n_realizations;
    p.mean_error = sum_err / n_realizations;
    double var = 0.0;
    for (int i = 0; i < n_realizations; ++i) {
      const double d = sz[static_cast<std::size_t>(j * n_realizations + i)] - p.mean_sz;
      var += d * d;
    }
    p.stderr_sz = n_realizations > 1
                      ? std::sqrt(var / (n_realizations - 1.0) / n_realizations)
                      : 0.0;
    result.points.push_back(p);
  }
  return result;
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_line: need >= 2 matching points");
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-30) throw std::invalid_argument("fit_line: degenerate abscissa");
  LinearFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  const double ss_tot = syy - sy * sy / n;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss_res += r * r;
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  fit.region_begin = 0;
  fit.region_end = static_cast<int>(x.size());
  return fit;
}

LinearFit fit_error_relation(const SweepResult& sweep) {
  const auto n = static_cast<int>(sweep.points.size());
  if (n < 4) throw std::invalid_argument("fit_error_relation: need >= 4 grid points");
  std::vector<double> delta(static_cast<std::size_t>(n)), error(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    delta[static_cast<std::size_t>(i)] = 1.0 - sweep.points[static_cast<std::size_t>(i)].mean_sz;
    error[static_cast<std::size_t>(i)] = sweep.points[static_cast<std::size_t>(i)].mean_error;
  }
  LinearFit best;
  bool found = false;
  for (int begin = 0; begin + 4 <= n; ++begin) {
    for (int end = begin + 4; end <= n; ++end) {
      const std::vector<double> dx(delta.begin() + begin, delta.begin() + end);
      const std::vector<double> dy(error.begin() + begin, error.begin() + end);
      LinearFit fit;
      try {
        fit = fit_line(dx, dy);
      } catch (const std::invalid_argument&) {
        continue;
      }
      fit.region_begin = begin;
      fit.region_end = end;
      if (!found || fit.r_squared > best.r_squared) {
        best = fit;
        found = true;
      }
    }
  }
  if (!found) throw std::invalid_argument("fit_error_relation: degenerate sweep data");
  return best;
}

}  // namespace aclr
