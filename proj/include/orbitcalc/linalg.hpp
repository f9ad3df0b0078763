#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "orbitcalc/tolerance.hpp"

namespace orbitcalc {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr cplx kI{0.0, 1.0};

namespace linalg {

struct RankDecision {
  int rank = 0;
  double sigma_max = 0.0;
  double cutoff = 0.0;
  /// True when some singular value lies within a factor 10 of the cutoff.
  bool ambiguous = false;
  Eigen::VectorXd singular_values;
};

RankDecision decide_rank(const Matrix& m, const Tolerance& tol = kDefaultTolerance);
RankDecision decide_rank(const RealMatrix& m, const Tolerance& tol = kDefaultTolerance);

int numerical_rank(const Matrix& m, const Tolerance& tol = kDefaultTolerance);

/// Orthonormal basis (columns) of the kernel of `m`.
Matrix null_space(const Matrix& m, const Tolerance& tol = kDefaultTolerance);
RealMatrix null_space(const RealMatrix& m, const Tolerance& tol = kDefaultTolerance);

/// Orthonormal basis of the column span of `columns`.
Matrix column_basis(const Matrix& columns, const Tolerance& tol = kDefaultTolerance);
RealMatrix column_basis(const RealMatrix& columns, const Tolerance& tol = kDefaultTolerance);

/// Orthogonal projector onto the span of orthonormal columns.
Matrix projector(const Matrix& orthonormal_columns, Eigen::Index ambient_dim);

/// Operator-norm distance between the orthogonal projectors onto two spans.
double subspace_distance(const Matrix& span_a, const Matrix& span_b,
                         const Tolerance& tol = kDefaultTolerance);

/// Norm of the component of `v` outside the span of orthonormal columns `basis`.
double distance_to_span(const Vector& v, const Matrix& basis);

double operator_norm(const Matrix& m);

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix kron(const Matrix& a, const Matrix& b);

/// Common eigenspace of a family of commuting Hermitian operators.
struct JointEigenspace {
  RealVector eigenvalues;  // one entry per operator
  Matrix basis;            // orthonormal columns
};

/// Splits the ambient space (or the span of `start_basis`) into joint
/// eigenspaces of commuting Hermitian `operators`.  Eigenvalues closer than
/// `tol.cluster_rel * max(1, scale)` are merged; a merged group whose spread
/// exceeds ten times that gap throws AmbiguousClustering.
std::vector<JointEigenspace> joint_eigenspaces(const std::vector<Matrix>& operators,
                                               const Tolerance& tol = kDefaultTolerance);
std::vector<JointEigenspace> joint_eigenspaces(const std::vector<Matrix>& operators,
                                               const Matrix& start_basis,
                                               const Tolerance& tol = kDefaultTolerance);

/// Modified Gram-Schmidt with one reorthogonalisation pass.  Appends the
/// normalised residual of `v` to `basis` when its norm exceeds
/// `rel * |v|` and returns whether it did.
bool extend_orthonormal(Matrix& basis, const Vector& v, double rel);

}  // namespace linalg
}  // namespace orbitcalc
