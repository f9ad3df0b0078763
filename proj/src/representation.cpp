#include "orbitcalc/representation.hpp"

#include <algorithm>

#include "orbitcalc/errors.hpp"

namespace orbitcalc {

Matrix Representation::operator()(const Element& w) const {
  if (w.dim() != algebra_dim()) throw DimensionMismatch("element does not match representation");
  Matrix m = Matrix::Zero(dim(), dim());
  for (int i = 0; i < algebra_dim(); ++i)
    if (w.coeffs[i] != cplx{}) m += w.coeffs[i] * matrices[static_cast<size_t>(i)];
  return m;
}

Representation defining_representation(const LieAlgebra& a) { return {a.defining_rep()}; }

Representation trivial_representation(int algebra_dim) {
  return {std::vector<Matrix>(static_cast<size_t>(algebra_dim), Matrix::Zero(1, 1))};
}

Representation tensor_product(const Representation& r1, const Representation& r2) {
  if (r1.algebra_dim() != r2.algebra_dim())
    throw DimensionMismatch("tensor product of representations of different algebras");
  const Matrix i1 = Matrix::Identity(r1.dim(), r1.dim());
  const Matrix i2 = Matrix::Identity(r2.dim(), r2.dim());
  Representation out;
  for (int k = 0; k < r1.algebra_dim(); ++k)
    out.matrices.push_back(linalg::kron(r1.matrices[static_cast<size_t>(k)], i2) +
                           linalg::kron(i1, r2.matrices[static_cast<size_t>(k)]));
  return out;
}

Representation conjugate_rep(const Representation& r) {
  Representation out;
  for (const auto& m : r.matrices) out.matrices.push_back(m.conjugate());
  return out;
}

Representation change_basis(const Representation& r, const Matrix& u) {
  Representation out;
  for (const auto& m : r.matrices) out.matrices.push_back(u.adjoint() * m * u);
  return out;
}

double homomorphism_residual(const Representation& r, const LieAlgebra& a) {
  if (r.algebra_dim() != a.dim()) throw DimensionMismatch("representation does not match algebra");
  const int n = a.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Matrix lhs = linalg::commutator(r.matrices[static_cast<size_t>(i)],
                                            r.matrices[static_cast<size_t>(j)]);
      Matrix rhs = Matrix::Zero(r.dim(), r.dim());
      for (int k = 0; k < n; ++k) {
        const double c = a.structure_constant(i, j, k);
        if (c != 0.0) rhs += c * r.matrices[static_cast<size_t>(k)];
      }
      worst = std::max(worst, (lhs - rhs).norm());
    }
  return worst;
}

double unitarity_residual(const Representation& r) {
  double worst = 0.0;
  for (const auto& m : r.matrices) worst = std::max(worst, (m + m.adjoint()).norm());
  return worst;
}

}  // namespace orbitcalc
