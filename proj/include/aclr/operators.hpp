#pragma once

#include <Eigen/Dense>
#include <vector>

#include "aclr/chain_spec.hpp"

namespace aclr {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

double hermiticity_residual(const Matrix& m);
bool is_hermitian(const Matrix& m, double rel_tol = 1e-12);

// Spin-S matrices in the S^z eigenbasis, ordered m = +S (row 0) down to
// m = -S, matching the basis convention digit g-1 <-> m = +S.
struct SpinMatrices {
  Matrix sx, sy, sz;
};
SpinMatrices spin_matrices(int two_s);

// One-site operator embedded into the full chain (identity elsewhere).
Matrix embed_local(const Matrix& op, int site, const ChainSpec& spec);

// H = sum_j Jx Sx_j Sx_{j+1} + Jy Sy_j Sy_{j+1} + hx Sx_j + hy Sy_j,
// periodic wraparound bond included.
Matrix build_hamiltonian(const ChainSpec& spec);

// Cyclic shift: site j's digit moves to site j+1.  Returned as the
// 0-based offset permutation, offset i -> perm[i].
std::vector<std::size_t> translation_permutation(const ChainSpec& spec);

// Same shift as a dense permutation unitary T with T|b> = |shifted b>.
Matrix translation_operator(const ChainSpec& spec);

}  // namespace aclr
