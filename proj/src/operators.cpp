#include "aclr/operators.hpp"

#include <stdexcept>

#include "aclr/basis.hpp"

namespace aclr {

double hermiticity_residual(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double rel_tol) {
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return true;
  return hermiticity_residual(m) <= rel_tol * scale;
}

SpinMatrices spin_matrices(int two_s) {
  if (two_s < 1) throw std::invalid_argument("spin_matrices: two_s must be >= 1");
  const int g = two_s + 1;
  const double s = 0.5 * two_s;
  Matrix sp = Matrix::Zero(g, g);  // raising operator S+
  Matrix sz = Matrix::Zero(g, g);
  for (int r = 0; r < g; ++r) {
    const double m = s - r;  // row 0 is m = +S
    sz(r, r) = m;
    if (r > 0) sp(r - 1, r) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  const Matrix sm = sp.adjoint();
  SpinMatrices out;
  out.sx = (sp + sm) / 2.0;
  out.sy = (sp - sm) / std::complex<double>(0.0, 2.0);
  out.sz = sz;
  return out;
}

namespace {

// Local matrix index for a basis digit: digit g-1 is m = +S (row 0).
inline int level_of(int digit, int g) { return (g - 1) - digit; }

}  // namespace

Matrix embed_local(const Matrix& op, int site, const ChainSpec& spec) {
  spec.validate();
  const int g = spec.local_dim();
  if (op.rows() != g || op.cols() != g)
    throw std::invalid_argument("embed_local: operator dimension != local dimension");
  if (site < 1 || site > spec.length)
    throw std::out_of_range("embed_local: site out of [1, L]");
  const std::size_t dim = spec.dimension();
  const auto stride = static_cast<std::ptrdiff_t>(
      ipow(static_cast<std::size_t>(g), spec.length - site));
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    const int v = digit_at(i, site, g, spec.length);
    for (int w = 0; w < g; ++w) {
      const auto entry = op(level_of(w, g), level_of(v, g));
      if (entry == std::complex<double>{}) continue;
      const auto j = static_cast<std::ptrdiff_t>(i) + (v - w) * stride;
      out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += entry;
    }
  }
  return out;
}

Matrix build_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  const int g = spec.local_dim();
  const int length = spec.length;
  const std::size_t dim = spec.dimension();
  const auto [sx, sy, sz] = spin_matrices(spec.two_s);
  (void)sz;  // Eq-of-motion couplings live in the XY plane only
  const auto& c = spec.couplings;

  std::vector<std::ptrdiff_t> stride(static_cast<std::size_t>(length) + 1);
  for (int site = 1; site <= length; ++site)
    stride[static_cast<std::size_t>(site)] = static_cast<std::ptrdiff_t>(
        ipow(static_cast<std::size_t>(g), length - site));

  Matrix h = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (int bond = 1; bond <= length; ++bond) {
    const int s1 = bond;
    const int s2 = (bond % length) + 1;
    for (std::size_t i = 0; i < dim; ++i) {
      const int v1 = digit_at(i, s1, g, length);
      const int v2 = digit_at(i, s2, g, length);
      const int l1 = level_of(v1, g);
      const int l2 = level_of(v2, g);
      for (int w1 = 0; w1 < g; ++w1) {
        for (int w2 = 0; w2 < g; ++w2) {
          const std::complex<double> amp =
              c.jx * sx(level_of(w1, g), l1) * sx(level_of(w2, g), l2) +
              c.jy * sy(level_of(w1, g), l1) * sy(level_of(w2, g), l2);
          if (amp == std::complex<double>{}) continue;
          const auto j = static_cast<std::ptrdiff_t>(i) + (v1 - w1) * stride[s1] +
                         (v2 - w2) * stride[s2];
          h(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += amp;
        }
      }
      // On-site fields at s1 (each site appears exactly once as a bond head).
      for (int w = 0; w < g; ++w) {
        const std::complex<double> amp =
            c.hx * sx(level_of(w, g), l1) + c.hy * sy(level_of(w, g), l1);
        if (amp == std::complex<double>{}) continue;
        const auto j = static_cast<std::ptrdiff_t>(i) + (v1 - w) * stride[s1];
        h(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += amp;
      }
    }
  }
  return h;
}

std::vector<std::size_t> translation_permutation(const ChainSpec& spec) {
  spec.validate();
  const int g = spec.local_dim();
  const std::size_t dim = spec.dimension();
  std::vector<std::size_t> perm(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    auto digits = basis_digits(i + 1, g, spec.length);
    std::vector<int> shifted(digits.size());
    for (std::size_t s = 0; s < digits.size(); ++s)
      shifted[(s + 1) % digits.size()] = digits[s];
    perm[i] = basis_rank(shifted, g) - 1;
  }
  return perm;
}

Matrix translation_operator(const ChainSpec& spec) {
  const auto perm = translation_permutation(spec);
  const auto dim = static_cast<Eigen::Index>(perm.size());
  Matrix t = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    t(static_cast<Eigen::Index>(perm[static_cast<std::size_t>(i)]), i) = 1.0;
  return t;
}

}  // namespace aclr
