#pragma once

#include <string>
#include <vector>

#include "orbitcalc/irrep.hpp"
#include "orbitcalc/root_system.hpp"

namespace orbitcalc {

/// lambda(X_i) = -i <xi, pi(X_i) xi> on the basis of g; extended C-linearly.
struct MomentumFunctional {
  RealVector values;

  cplx operator()(const Element& w) const { return w.coeffs.cwiseProduct(values.cast<cplx>()).sum(); }
  bool is_zero(double tol) const { return values.cwiseAbs().maxCoeff() <= tol; }
};

enum class RootClass { Stabilizer, Complement };

/// Stabilizer split g = k (+) m of Z.  Bases are Kil-orthonormal, stored as
/// coordinate columns.
struct OrbitData {
  RealVector z_diamond;
  RealMatrix k_basis;
  RealMatrix m_basis;
  /// Parallel to RootDatum::positive; empty when built without roots.
  std::vector<RootClass> classified_roots;
};

/// Momentum of the marked highest weight vector of `irrep`.
MomentumFunctional momentum(const Irrep& irrep);
/// Momentum of an arbitrary vector of the representation space.
MomentumFunctional momentum(const Representation& r, const Vector& xi);

/// Unique Z in g with Kil(X, Z) = lambda(X) for all X.
RealVector z_diamond(const MomentumFunctional& lambda, const KillingForm& kil);

/// k = ker(X -> [X, z]); m = its Kil-orthocomplement.
OrbitData stabilizer_split(const LieAlgebra& a, const RealVector& z, const KillingForm& kil,
                           const Tolerance& tol = kDefaultTolerance);

/// Classifies each positive root by whether i lambda(H_alpha) vanishes.
std::vector<RootClass> classify_roots(const RootSystem& rs, const MomentumFunctional& lambda,
                                      const Tolerance& tol = kDefaultTolerance);

struct LemmaCheck {
  int root = -1;
  double label = 0.0;       // i lambda(H_alpha)
  double e_distance = 0.0;  // distance of E_alpha from k^C
  double f_distance = 0.0;
  bool label_zero = false;
  bool e_in_k = false;
  bool f_in_k = false;
  /// lambda(H_alpha) = 0  <=>  (E_alpha in k^C or F_alpha in k^C), and the
  /// forward direction puts both in k^C.
  bool holds() const { return label_zero ? (e_in_k && f_in_k) : (!e_in_k && !f_in_k); }
};

struct StrukReport {
  double k_distance = 0.0;  // projector distance k^C vs h^C + span{E, F : lambda(H) = 0}
  double m_distance = 0.0;  // projector distance m^C vs span{E, F : lambda(H) != 0}
  int dim_k = 0;
  int dim_m = 0;
  double kk_residual = 0.0;        // component of [k, k] outside k
  double km_residual = 0.0;        // component of [k, m] outside m
  double h_in_k_residual = 0.0;
  double z_commutes_residual = 0.0;  // |[X, Z]| over the k basis
  double kil_orthogonality = 0.0;    // |Kil(k, m)|
  std::vector<LemmaCheck> lemma;
  bool passed = false;
  std::vector<int> stabilizer_roots;  // positive-root indices with lambda(H_alpha) = 0
};

/// Checks the stabilizer decomposition against the root classification and
/// the root-by-root lemma in both directions.
StrukReport verify_struk(const OrbitData& od, const RootSystem& rs, const MomentumFunctional& lambda,
                         const Tolerance& tol = kDefaultTolerance);

struct MomentumChecks {
  std::vector<double> labels;           // i lambda(H_alpha_j) for simple roots
  std::vector<double> lowering_norms;   // |F_alpha_j xi|^2
  double max_positive_label_residual = 0.0;  // integrality over all positive roots
  double raising_residual = 0.0;             // max |lambda(E_alpha)|, |lambda(F_alpha)|
  double imaginary_residual = 0.0;           // lambda is real on g
};

MomentumChecks check_momentum(const RootSystem& rs, const Irrep& irrep, const MomentumFunctional& lambda);

}  // namespace orbitcalc
