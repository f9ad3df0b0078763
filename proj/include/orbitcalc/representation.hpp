#pragma once

#include <vector>

#include "orbitcalc/lie_algebra.hpp"

namespace orbitcalc {

/// Finite-dimensional representation of g: one N x N matrix per basis
/// element, extended C-linearly to g^C.
struct Representation {
  std::vector<Matrix> matrices;

  int dim() const { return matrices.empty() ? 0 : static_cast<int>(matrices.front().rows()); }
  int algebra_dim() const { return static_cast<int>(matrices.size()); }
  Matrix operator()(const Element& w) const;
};

Representation defining_representation(const LieAlgebra& a);
Representation trivial_representation(int algebra_dim);

/// pi(X) = pi1(X) (x) I + I (x) pi2(X).
Representation tensor_product(const Representation& r1, const Representation& r2);

/// Entrywise conjugate; valid as a representation because every pi(X) with X
/// real is skew-adjoint.  Weights are negated.
Representation conjugate_rep(const Representation& r);

/// Same representation in the basis given by the unitary columns of `u`.
Representation change_basis(const Representation& r, const Matrix& u);

/// max over basis pairs of |[pi_i, pi_j] - pi([X_i, X_j])|.
double homomorphism_residual(const Representation& r, const LieAlgebra& a);

/// max over basis elements of |pi_i + pi_i^dagger|.
double unitarity_residual(const Representation& r);

}  // namespace orbitcalc
