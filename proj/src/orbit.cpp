#include "orbitcalc/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orbitcalc/errors.hpp"

namespace orbitcalc {

MomentumFunctional momentum(const Representation& r, const Vector& xi) {
  MomentumFunctional lambda;
  lambda.values.resize(r.algebra_dim());
  for (int i = 0; i < r.algebra_dim(); ++i) {
    const cplx v = -kI * xi.dot(r.matrices[static_cast<size_t>(i)] * xi);
    lambda.values[i] = v.real();
  }
  return lambda;
}

MomentumFunctional momentum(const Irrep& irrep) { return momentum(irrep.rep, irrep.highest_vector); }

RealVector z_diamond(const MomentumFunctional& lambda, const KillingForm& kil) {
  if (lambda.values.size() != kil.dim()) throw DimensionMismatch("functional does not match Kil");
  Eigen::LLT<RealMatrix> llt(kil.gram());
  if (llt.info() != Eigen::Success) throw InternalError("Kil Gram system is singular");
  return llt.solve(lambda.values);
}

OrbitData stabilizer_split(const LieAlgebra& a, const RealVector& z, const KillingForm& kil,
                           const Tolerance& tol) {
  if (z.size() != a.dim()) throw DimensionMismatch("element does not match algebra");
  if (!kil.positive_definite()) throw InternalError("Kil is not positive definite");
  const int n = a.dim();
  RealMatrix ad = RealMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) ad += z[k] * a.ad(k);

  // Work in Kil-orthonormal coordinates y = L^T x.
  const RealMatrix& lt_inv = kil.orthonormal_map_inverse();
  const RealMatrix map = ad * lt_inv;
  const auto decision = linalg::decide_rank(map, tol);
  if (decision.ambiguous)
    throw RankAmbiguity("stabilizer rank decision is ambiguous at the singular-value cutoff");
  const RealMatrix kernel = linalg::null_space(map, tol);
  RealMatrix complement(n, 0);
  if (kernel.cols() < n) {
    const RealMatrix proj = RealMatrix::Identity(n, n) - kernel * kernel.transpose();
    complement = linalg::column_basis(proj, tol);
  }

  OrbitData od;
  od.z_diamond = z;
  od.k_basis = lt_inv * kernel;
  od.m_basis = lt_inv * complement;
  return od;
}

std::vector<RootClass> classify_roots(const RootSystem& rs, const MomentumFunctional& lambda,
                                      const Tolerance& tol) {
  std::vector<RootClass> out;
  for (const auto& t : rs.triples) {
    const double label = (kI * lambda(t.h)).real();
    out.push_back(std::abs(label) <= tol.integrality ? RootClass::Stabilizer : RootClass::Complement);
  }
  return out;
}

StrukReport verify_struk(const OrbitData& od, const RootSystem& rs, const MomentumFunctional& lambda,
                         const Tolerance& tol) {
  const LieAlgebra& a = rs.algebra;
  const int n = a.dim();
  StrukReport rep;
  rep.dim_k = static_cast<int>(od.k_basis.cols());
  rep.dim_m = static_cast<int>(od.m_basis.cols());

  const Matrix k_span = linalg::column_basis(Matrix(od.k_basis.cast<cplx>()), tol);
  const Matrix m_span = linalg::column_basis(Matrix(od.m_basis.cast<cplx>()), tol);

  Matrix k_roots = rs.roots.cartan.matrix().cast<cplx>();
  Matrix m_roots(n, 0);
  auto append = [n](Matrix& m, const Element& e) {
    m.conservativeResize(n, m.cols() + 1);
    m.col(m.cols() - 1) = e.coeffs;
  };

  for (const auto& t : rs.triples) {
    LemmaCheck c;
    c.root = t.root;
    c.label = (kI * lambda(t.h)).real();
    c.label_zero = std::abs(c.label) <= tol.integrality;
    c.e_distance = linalg::distance_to_span(t.e.coeffs, k_span) / t.e.norm();
    c.f_distance = linalg::distance_to_span(t.f.coeffs, k_span) / t.f.norm();
    c.e_in_k = c.e_distance <= tol.residual;
    c.f_in_k = c.f_distance <= tol.residual;
    if (c.label_zero) {
      append(k_roots, t.e);
      append(k_roots, t.f);
      rep.stabilizer_roots.push_back(t.root);
    } else {
      append(m_roots, t.e);
      append(m_roots, t.f);
    }
    rep.lemma.push_back(c);
  }
  rep.k_distance = linalg::subspace_distance(k_span, k_roots, tol);
  rep.m_distance = linalg::subspace_distance(m_span, m_roots, tol);

  const RealMatrix& g = rs.kil.gram();
  for (Eigen::Index i = 0; i < od.k_basis.cols(); ++i) {
    const Element ki = Element::real(od.k_basis.col(i));
    rep.z_commutes_residual =
        std::max(rep.z_commutes_residual, bracket(a, ki, Element::real(od.z_diamond)).norm());
    for (Eigen::Index j = 0; j < od.k_basis.cols(); ++j)
      rep.kk_residual = std::max(rep.kk_residual,
          linalg::distance_to_span(bracket(a, ki, Element::real(od.k_basis.col(j))).coeffs, k_span));
    for (Eigen::Index j = 0; j < od.m_basis.cols(); ++j) {
      rep.km_residual = std::max(rep.km_residual,
          linalg::distance_to_span(bracket(a, ki, Element::real(od.m_basis.col(j))).coeffs, m_span));
      rep.kil_orthogonality = std::max(
          rep.kil_orthogonality, std::abs(od.k_basis.col(i).dot(g * od.m_basis.col(j))));
    }
  }
  for (const auto& h : rs.roots.cartan.basis)
    rep.h_in_k_residual = std::max(rep.h_in_k_residual,
                                   linalg::distance_to_span(h.cast<cplx>(), k_span) / h.norm());

  const bool lemma_ok = std::all_of(rep.lemma.begin(), rep.lemma.end(),
                                    [](const LemmaCheck& c) { return c.holds(); });
  rep.passed = lemma_ok && rep.k_distance < tol.residual && rep.m_distance < tol.residual &&
               rep.kk_residual < tol.residual && rep.km_residual < tol.residual &&
               rep.h_in_k_residual < tol.residual && rep.z_commutes_residual < tol.residual &&
               rep.kil_orthogonality < tol.residual && rep.dim_m % 2 == 0 &&
               rep.dim_k + rep.dim_m == n;
  return rep;
}

MomentumChecks check_momentum(const RootSystem& rs, const Irrep& irrep,
                              const MomentumFunctional& lambda) {
  MomentumChecks out;
  const Vector& xi = irrep.highest_vector;
  for (int i = 0; i < irrep.rep.algebra_dim(); ++i) {
    const cplx v = -kI * xi.dot(irrep.rep.matrices[static_cast<size_t>(i)] * xi);
    out.imaginary_residual = std::max(out.imaginary_residual, std::abs(v.imag()));
  }
  for (int j = 0; j < rs.roots.rank(); ++j) {
    const SL2Triple& t = rs.simple_triple(j);
    out.labels.push_back((kI * lambda(t.h)).real());
    out.lowering_norms.push_back((irrep.rep(t.f) * xi).squaredNorm());
  }
  for (const auto& t : rs.triples) {
    const cplx label = kI * lambda(t.h);
    const double nearest = std::max(0.0, std::round(label.real()));
    out.max_positive_label_residual =
        std::max(out.max_positive_label_residual, std::abs(label - cplx{nearest, 0.0}));
    out.raising_residual =
        std::max({out.raising_residual, std::abs(lambda(t.e)), std::abs(lambda(t.f))});
  }
  return out;
}

}  // namespace orbitcalc
