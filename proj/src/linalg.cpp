#include "orbitcalc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orbitcalc/errors.hpp"

namespace orbitcalc::linalg {

namespace {

RankDecision classify(const Eigen::VectorXd& sv, const Tolerance& tol) {
  RankDecision d;
  d.singular_values = sv;
  d.sigma_max = sv.size() > 0 ? sv.maxCoeff() : 0.0;
  d.cutoff = std::max(tol.rank_rel * d.sigma_max, tol.rank_abs);
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    const double s = sv[i];
    if (s > d.cutoff) ++d.rank;
    if (s > d.cutoff / 10.0 && s <= d.cutoff * 10.0) d.ambiguous = true;
  }
  return d;
}

template <class M>
Eigen::VectorXd singular_values(const M& m) {
  if (m.rows() == 0 || m.cols() == 0) return Eigen::VectorXd();
  Eigen::BDCSVD<M> svd(m);
  return svd.singularValues();
}

}  // namespace

RankDecision decide_rank(const Matrix& m, const Tolerance& tol) {
  return classify(singular_values(m), tol);
}

RankDecision decide_rank(const RealMatrix& m, const Tolerance& tol) {
  return classify(singular_values(m), tol);
}

int numerical_rank(const Matrix& m, const Tolerance& tol) { return decide_rank(m, tol).rank; }

namespace {

template <class M>
M null_space_impl(const M& m, const Tolerance& tol) {
  const Eigen::Index n = m.cols();
  if (m.rows() == 0) return M::Identity(n, n);
  // Full V is needed for the kernel; JacobiSVD is fine at the sizes used here.
  Eigen::JacobiSVD<M> svd(m, Eigen::ComputeFullV);
  const auto d = classify(svd.singularValues(), tol);
  return svd.matrixV().rightCols(n - d.rank);
}

template <class M>
M column_basis_impl(const M& cols, const Tolerance& tol) {
  if (cols.cols() == 0 || cols.rows() == 0) return M(cols.rows(), 0);
  Eigen::JacobiSVD<M> svd(cols, Eigen::ComputeThinU);
  const auto d = classify(svd.singularValues(), tol);
  return svd.matrixU().leftCols(d.rank);
}

}  // namespace

Matrix null_space(const Matrix& m, const Tolerance& tol) { return null_space_impl(m, tol); }
RealMatrix null_space(const RealMatrix& m, const Tolerance& tol) {
  return null_space_impl(m, tol);
}

Matrix column_basis(const Matrix& columns, const Tolerance& tol) {
  return column_basis_impl(columns, tol);
}
RealMatrix column_basis(const RealMatrix& columns, const Tolerance& tol) {
  return column_basis_impl(columns, tol);
}

Matrix projector(const Matrix& q, Eigen::Index ambient_dim) {
  if (q.cols() == 0) return Matrix::Zero(ambient_dim, ambient_dim);
  return q * q.adjoint();
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double subspace_distance(const Matrix& a, const Matrix& b, const Tolerance& tol) {
  const Eigen::Index n = std::max(a.rows(), b.rows());
  const Matrix qa = column_basis(a, tol);
  const Matrix qb = column_basis(b, tol);
  return operator_norm(projector(qa, n) - projector(qb, n));
}

double distance_to_span(const Vector& v, const Matrix& basis) {
  if (basis.cols() == 0) return v.norm();
  return (v - basis * (basis.adjoint() * v)).norm();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

bool extend_orthonormal(Matrix& basis, const Vector& v, double rel) {
  const double norm0 = v.norm();
  if (norm0 == 0.0) return false;
  Vector r = v;
  for (int pass = 0; pass < 2; ++pass)
    for (Eigen::Index k = 0; k < basis.cols(); ++k) r -= basis.col(k) * basis.col(k).dot(r);
  const double norm = r.norm();
  if (norm <= rel * norm0) return false;
  basis.conservativeResize(v.size(), basis.cols() + 1);
  basis.col(basis.cols() - 1) = r / norm;
  return true;
}

std::vector<JointEigenspace> joint_eigenspaces(const std::vector<Matrix>& operators,
                                               const Tolerance& tol) {
  const Eigen::Index n = operators.empty() ? 0 : operators.front().rows();
  return joint_eigenspaces(operators, Matrix::Identity(n, n), tol);
}

std::vector<JointEigenspace> joint_eigenspaces(const std::vector<Matrix>& operators,
                                               const Matrix& start_basis,
                                               const Tolerance& tol) {
  const auto count = static_cast<Eigen::Index>(operators.size());
  std::vector<JointEigenspace> spaces{{RealVector::Zero(count), start_basis}};
  if (start_basis.cols() == 0) return {};

  for (Eigen::Index op = 0; op < count; ++op) {
    const Matrix& a = operators[static_cast<size_t>(op)];
    double scale = 1.0;
    for (const auto& s : spaces) {
      const Matrix restricted = s.basis.adjoint() * a * s.basis;
      scale = std::max(scale, operator_norm(restricted));
    }
    const double gap = tol.cluster_rel * scale;

    std::vector<JointEigenspace> next;
    for (const auto& s : spaces) {
      Matrix restricted = s.basis.adjoint() * a * s.basis;
      restricted = 0.5 * (restricted + restricted.adjoint()).eval();
      Eigen::SelfAdjointEigenSolver<Matrix> eig(restricted);
      const auto& vals = eig.eigenvalues();
      const Matrix vecs = s.basis * eig.eigenvectors();
      Eigen::Index start = 0;
      for (Eigen::Index i = 1; i <= vals.size(); ++i) {
        if (i < vals.size() && vals[i] - vals[i - 1] < gap) continue;
        const double spread = vals[i - 1] - vals[start];
        if (spread > 10.0 * gap) {
          std::ostringstream msg;
          msg << "eigenvalue cluster spread " << spread << " exceeds clustering gap " << gap;
          throw AmbiguousClustering(msg.str());
        }
        JointEigenspace piece;
        piece.eigenvalues = s.eigenvalues;
        piece.eigenvalues[op] = vals.segment(start, i - start).mean();
        piece.basis = vecs.middleCols(start, i - start);
        next.push_back(std::move(piece));
        start = i;
      }
    }
    spaces = std::move(next);
  }
  return spaces;
}

}  // namespace orbitcalc::linalg
