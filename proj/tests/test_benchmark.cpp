#include <doctest.h>

#include "aclr/benchmark.hpp"

using namespace aclr;

namespace {

ChainSpec default_spec(int length) {
  ChainSpec spec;
  spec.length = length;
  return spec;
}

const EigenSystem& shared_l8() {
  static const EigenSystem eig = diagonalize_chain(default_spec(8));
  return eig;
}

const RevivalConstruction& shared_construction() {
  static const RevivalConstruction c = build_revival(shared_l8(), 5.0);
  return c;
}

}  // namespace

TEST_CASE("perturb_target") {
  const auto& c = shared_construction();
  SUBCASE("lambda = 0 reproduces the ideal state") {
    Rng rng(1);
    const auto state = perturb_target(c, 0.0, rng);
    CHECK((state - c.state).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("support stays in the top block for any lambda") {
    Rng rng(2);
    for (double lambda : {0.3, 1.0, 3.5}) {
      const auto state = perturb_target(c, lambda, rng);
      const auto block = c.reservoir_amplitudes.size();
      CHECK(state.tail(state.size() - block).cwiseAbs().maxCoeff() == 0.0);
      CHECK(std::abs(state.norm() - 1.0) < 1e-12);
    }
  }
  SUBCASE("lambda = 1 concentrates E near 1/sqrt(2)") {
    double mean = 0.0;
    const int n = 40;
    for (int i = 0; i < n; ++i) {
      Rng rng = Rng::substream(3, {static_cast<std::uint64_t>(i)});
      mean += preparation_error(c.state, perturb_target(c, 1.0, rng));
    }
    mean /= n;
    CHECK(std::abs(mean - 1.0 / std::sqrt(2.0)) < 0.05);
  }
  SUBCASE("negative lambda rejected") {
    Rng rng(4);
    CHECK_THROWS_AS(perturb_target(c, -0.1, rng), std::invalid_argument);
  }
}

TEST_CASE("preparation_error") {
  QuantumState a = QuantumState::Zero(4), b = QuantumState::Zero(4);
  a(0) = 1.0;
  b(1) = 1.0;
  CHECK(preparation_error(a, a) == doctest::Approx(1.0));
  CHECK(preparation_error(a, b) == doctest::Approx(0.0));
  SUBCASE("global phase invariance") {
    const std::complex<double> phase = std::polar(1.0, 1.2);
    CHECK(preparation_error(phase * a, a) == doctest::Approx(1.0));
    CHECK(preparation_error(a, phase * a) == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(preparation_error(a, QuantumState::Zero(5)), std::invalid_argument);
}

TEST_CASE("lambda_sweep") {
  const auto& eig = shared_l8();
  const auto& c = shared_construction();
  SUBCASE("lambda = 0 grid is deterministic and fully revived") {
    const auto sweep = lambda_sweep(eig, c, {0.0}, 5, 11);
    CHECK(sweep.points[0].mean_sz == doctest::Approx((c.xi - 1.0) / (c.xi + 1.0)));
    CHECK(sweep.points[0].mean_sz >= 0.97);  // xi ~ 90 at L=8
    CHECK(sweep.points[0].stderr_sz == doctest::Approx(0.0));
  }
  SUBCASE("worker count does not change the result") {
    const std::vector<double> grid{0.0, 0.5, 1.0, 1.5};
    const auto a = lambda_sweep(eig, c, grid, 8, 21, 1);
    const auto b = lambda_sweep(eig, c, grid, 8, 21, 8);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(a.points[i].mean_sz == b.points[i].mean_sz);
      CHECK(a.points[i].mean_error == b.points[i].mean_error);
      CHECK(a.points[i].stderr_sz == b.points[i].stderr_sz);
    }
  }
  SUBCASE("monotone degradation on means") {
    const auto sweep = lambda_sweep(eig, c, {0.0, 0.7, 1.4, 2.1, 2.8, 3.5}, 20, 77, 2);
    for (std::size_t i = 1; i < sweep.points.size(); ++i)
      CHECK(sweep.points[i].mean_sz < sweep.points[i - 1].mean_sz);
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(lambda_sweep(eig, c, {0.0, 0.0}, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(lambda_sweep(eig, c, {0.0}, 0, 1), std::invalid_argument);
  }
}

TEST_CASE("linear fits") {
  SUBCASE("exact line recovered") {
    std::vector<double> x{0.0, 1.0, 2.0, 3.0, 4.0};
    std::vector<double> y;
    for (double v : x) y.push_back(2.5 * v - 0.75);
    const auto fit = fit_line(x, y);
    CHECK(fit.slope == doctest::Approx(2.5).epsilon(1e-9));
    CHECK(fit.intercept == doctest::Approx(-0.75).epsilon(1e-9));
    CHECK(fit.r_squared == doctest::Approx(1.0));
  }
  SUBCASE("degenerate abscissa rejected") {
    CHECK_THROWS_AS(fit_line({1.0, 1.0, 1.0}, {0.0, 1.0, 2.0}), std::invalid_argument);
  }
  SUBCASE("error relation on synthetic sweep data") {
    SweepResult sweep;
    for (int i = 0; i < 8; ++i) {
      SweepPoint p;
      p.lambda = 0.5 * i;
      p.mean_sz = 1.0 - 0.1 * i;          // delta = 0.1 i
      p.mean_error = 1.0 - 0.45 * 0.1 * i;  // E = 1 - 0.45 delta
      p.n_realizations = 1;
      sweep.points.push_back(p);
    }
    const auto fit = fit_error_relation(sweep);
    CHECK(fit.slope == doctest::Approx(-0.45).epsilon(1e-9));
    CHECK(fit.intercept == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fit.r_squared >= 0.999);
    CHECK(fit.region_end - fit.region_begin >= 4);
  }
  SUBCASE("too few points rejected") {
    SweepResult sweep;
    sweep.points.resize(3);
    CHECK_THROWS_AS(fit_error_relation(sweep), std::invalid_argument);
  }
}
