#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "aclr/basis.hpp"
#include "aclr/evolution.hpp"

using namespace aclr;

namespace {

ChainSpec default_spec(int length, int two_s = 1) {
  ChainSpec spec;
  spec.length = length;
  spec.two_s = two_s;
  return spec;
}

const EigenSystem& shared_l10() {
  static const EigenSystem eig = diagonalize_chain(default_spec(10));
  return eig;
}

}  // namespace

TEST_CASE("eigendecompose") {
  SUBCASE("zero matrix") {
    const auto spec = default_spec(2);
    const auto eig = eigendecompose(Matrix::Zero(4, 4), spec);
    CHECK(eig.energies.cwiseAbs().maxCoeff() == 0.0);
    CHECK(((eig.vectors.adjoint() * eig.vectors) - Matrix::Identity(4, 4))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
  SUBCASE("traceless spectrum, L=4") {
    const auto eig = diagonalize_chain(default_spec(4));
    CHECK(std::abs(eig.energies.sum()) < 1e-9);
    CHECK(std::is_sorted(eig.energies.data(), eig.energies.data() + eig.energies.size()));
  }
  SUBCASE("reconstruction, L=6") {
    const auto spec = default_spec(6);
    const auto h = build_hamiltonian(spec);
    const auto eig = eigendecompose(h, spec);
    const double width = eig.energies(eig.energies.size() - 1) - eig.energies(0);
    const Matrix rebuilt =
        eig.vectors * eig.energies.asDiagonal().toDenseMatrix().cast<std::complex<double>>() *
        eig.vectors.adjoint();
    CHECK((rebuilt - h).cwiseAbs().maxCoeff() < 1e-9 * width);
    CHECK(((eig.vectors.adjoint() * eig.vectors) -
           Matrix::Identity(h.rows(), h.cols())).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("rejects non-Hermitian input") {
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(eigendecompose(bad, default_spec(2)), std::invalid_argument);
  }
}

TEST_CASE("propagator") {
  const auto eig = diagonalize_chain(default_spec(6));
  SUBCASE("t = 0 is the identity") {
    CHECK((propagator(eig, 0.0) - Matrix::Identity(64, 64)).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("group property and unitarity") {
    const Matrix u = propagator(eig, 1.3);
    CHECK((u * propagator(eig, -1.3) - Matrix::Identity(64, 64)).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((u.adjoint() * u - Matrix::Identity(64, 64)).cwiseAbs().maxCoeff() < 1e-9);
  }
  SUBCASE("matches the scaling-and-squaring exponential") {
    const auto h = build_hamiltonian(default_spec(6));
    for (double t : {0.1, 1.0, 5.0}) {
      const Matrix oracle = (std::complex<double>(0.0, -t) * h).exp();
      CHECK((propagator(eig, t) - oracle).cwiseAbs().maxCoeff() < 1e-8);
    }
  }
}

TEST_CASE("evolve") {
  const auto eig = diagonalize_chain(default_spec(6));
  Rng rng(42);
  const QuantumState psi = random_direction(64, rng);
  SUBCASE("t = 0 is the identity") {
    CHECK((evolve(eig, psi, 0.0) - psi).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("eigenstate stationarity") {
    const QuantumState en = eig.vectors.col(7);
    const QuantumState evolved = evolve(eig, en, 2.0);
    const auto phase = std::exp(std::complex<double>(0.0, -eig.energies(7) * 2.0));
    CHECK((evolved - phase * en).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("reversibility and unitarity") {
    const QuantumState fwd = evolve(eig, psi, 3.7);
    CHECK(std::abs(fwd.norm() - 1.0) < 1e-10);
    CHECK((evolve(eig, fwd, -3.7) - psi).cwiseAbs().maxCoeff() < 1e-9);
  }
  SUBCASE("linearity") {
    const QuantumState phi = random_direction(64, rng);
    const std::complex<double> a(0.3, 0.4), b(-0.8, 0.1);
    const QuantumState lhs = evolve(eig, a * psi + b * phi, 1.1);
    const QuantumState rhs = a * evolve(eig, psi, 1.1) + b * evolve(eig, phi, 1.1);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("energy conservation") {
    const auto h = build_hamiltonian(default_spec(6));
    const double width = eig.energies(63) - eig.energies(0);
    const double e0 = expectation(psi, h);
    for (double t : {0.5, 2.0, 9.0})
      CHECK(std::abs(expectation(evolve(eig, psi, t), h) - e0) < 1e-9 * width);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(evolve(eig, QuantumState::Zero(5), 1.0), std::invalid_argument);
  }
}

TEST_CASE("expectation and local observables") {
  const auto spec = default_spec(6);
  const std::size_t dim = spec.dimension();
  SUBCASE("all-up and all-down poles") {
    QuantumState up = QuantumState::Zero(dim);
    up(0) = 1.0;
    QuantumState down = QuantumState::Zero(dim);
    down(static_cast<Eigen::Index>(dim) - 1) = 1.0;
    CHECK(local_expectations(up, 1, spec).sz == doctest::Approx(1.0));
    CHECK(local_expectations(down, 1, spec).sz == doctest::Approx(-1.0));
  }
  SUBCASE("random-phase uniform superposition averages to ~0") {
    Rng rng(7);
    QuantumState psi(dim);
    for (Eigen::Index i = 0; i < psi.size(); ++i)
      psi(i) = rng.unit_phase() / std::sqrt(static_cast<double>(dim));
    CHECK(std::abs(local_expectations(psi, 1, spec).sz) <
          3.0 / std::sqrt(static_cast<double>(dim)));
  }
  SUBCASE("reduced density route equals dense embedding") {
    Rng rng(3);
    const QuantumState psi = random_direction(dim, rng);
    const auto m = spin_matrices(1);
    for (int site : {1, 3, 6}) {
      const auto vals = local_expectations(psi, site, spec);
      CHECK(vals.sx == doctest::Approx(expectation(psi, embed_local(m.sx, site, spec)) / 0.5)
                           .epsilon(1e-9));
      CHECK(vals.sz == doctest::Approx(expectation(psi, embed_local(m.sz, site, spec)) / 0.5)
                           .epsilon(1e-9));
    }
  }
}

TEST_CASE("infinite temperature sampling") {
  const auto& eig = shared_l10();
  const auto h = build_hamiltonian(eig.spec);
  const double width = eig.energies(eig.energies.size() - 1) - eig.energies(0);
  const double bound = 4.0 * width / std::sqrt(1024.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng = Rng::substream(99, {seed});
    const QuantumState psi = sample_infinite_temperature(eig, rng);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
    CHECK(std::abs(expectation(psi, h)) < bound);
  }
  SUBCASE("different seeds are nearly orthogonal") {
    Rng r1(1), r2(2);
    const auto a = sample_infinite_temperature(eig, r1);
    const auto b = sample_infinite_temperature(eig, r2);
    CHECK(std::abs(overlap(a, b)) < 5.0 / std::sqrt(1024.0));
  }
}

TEST_CASE("half-revival superposition state") {
  const auto& eig = shared_l10();
  SUBCASE("t* = 0 returns the input") {
    Rng rng(5);
    const QuantumState psi0 = thermal_product_state(eig.spec, 1, rng);
    CHECK((half_revival_state(eig, psi0, 0.0) - psi0).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("half revival at t* = 5") {
    Rng rng(11);
    const QuantumState psi0 = thermal_product_state(eig.spec, 1, rng);
    const QuantumState psi = half_revival_state(eig, psi0, 5.0);
    const double v0 = local_expectations(psi, 1, eig.spec).sz;
    const double vt = local_expectations(evolve(eig, psi, 5.0), 1, eig.spec).sz;
    CHECK(v0 > 0.35);
    CHECK(v0 < 0.65);
    CHECK(vt > 0.35);
    CHECK(vt < 0.65);
    CHECK(std::abs(v0 - vt) < 0.05);
  }
}

TEST_CASE("observable series") {
  const auto eig = diagonalize_chain(default_spec(6));
  Rng rng(21);
  const QuantumState psi = thermal_product_state(eig.spec, 1, rng);
  const std::vector<double> times{0.0, 0.5, 1.0, 2.0};
  const auto series = observable_series(eig, psi, 1, times);
  CHECK(series.sz.size() == times.size());
  CHECK(series.sz[0] == doctest::Approx(local_expectations(psi, 1, eig.spec).sz));
  CHECK(series.sx[0] == doctest::Approx(local_expectations(psi, 1, eig.spec).sx));
  for (double v : series.sz) CHECK(std::abs(v) <= 1.0 + 1e-9);
}

TEST_CASE("overlap") {
  QuantumState a = QuantumState::Zero(4), b = QuantumState::Zero(4);
  a(0) = 1.0;
  b(1) = 1.0;
  CHECK(std::abs(overlap(a, a) - 1.0) < 1e-15);
  CHECK(std::abs(overlap(a, b)) < 1e-15);
  SUBCASE("conjugate-linear in the first argument") {
    const std::complex<double> c(0.0, 1.0);
    CHECK(std::abs(overlap(c * a, a) - std::conj(c)) < 1e-15);
  }
  CHECK_THROWS_AS(overlap(a, QuantumState::Zero(5)), std::invalid_argument);
}
