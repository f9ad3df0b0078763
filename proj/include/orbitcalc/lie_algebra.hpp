#pragma once

#include <string>
#include <vector>

#include "orbitcalc/linalg.hpp"
#include "orbitcalc/tolerance.hpp"

namespace orbitcalc {

/// Element W = sum_i w_i X_i of the complexification, in coordinates of the
/// declared real basis X_i.  The real form is the set of real coordinate
/// vectors, so conjugation is coordinatewise and exact.
struct Element {
  Vector coeffs;

  Element() = default;
  explicit Element(Vector c) : coeffs(std::move(c)) {}
  static Element zero(int dim) { return Element(Vector::Zero(dim)); }
  static Element basis(int dim, int i) {
    Element e = zero(dim);
    e.coeffs[i] = 1.0;
    return e;
  }
  static Element real(const RealVector& x) { return Element(x.cast<cplx>()); }

  int dim() const { return static_cast<int>(coeffs.size()); }
  bool is_real(double tol) const { return coeffs.imag().norm() <= tol; }
  double norm() const { return coeffs.norm(); }

  Element& operator+=(const Element& o) { coeffs += o.coeffs; return *this; }
  Element& operator-=(const Element& o) { coeffs -= o.coeffs; return *this; }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(cplx s, Element a) { a.coeffs *= s; return a; }
  friend Element operator*(double s, Element a) { a.coeffs *= s; return a; }
  friend Element operator-(Element a) { a.coeffs = -a.coeffs; return a; }
};

/// Compact semisimple real Lie algebra given by structure constants and a
/// defining matrix realisation.  Construction only checks shapes; the
/// algebraic invariants are reported by check_algebra().
class LieAlgebra {
 public:
  struct Triplet {
    int i, j, k;
    double value;
  };

  LieAlgebra(std::string label, std::vector<std::string> basis_labels,
             const std::vector<Triplet>& structure_constants, std::vector<Matrix> defining_rep,
             std::vector<RealVector> default_cartan = {});

  /// Builds structure constants by expanding commutators of the given
  /// skew-adjoint matrices in their own real span.
  static LieAlgebra from_matrices(std::string label, std::vector<std::string> basis_labels,
                                  std::vector<Matrix> basis,
                                  std::vector<RealVector> default_cartan = {});

  const std::string& label() const { return label_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return basis_labels_; }

  /// c[i][j][k] with [X_i, X_j] = sum_k c[i][j][k] X_k.
  double structure_constant(int i, int j, int k) const { return ad_[i](k, j); }
  std::vector<Triplet> structure_triplets() const;

  /// Matrix of ad_{X_i} acting on coordinate columns.
  const RealMatrix& ad(int i) const { return ad_[i]; }
  Matrix ad(const Element& w) const;

  const std::vector<Matrix>& defining_rep() const { return defining_rep_; }
  int defining_dim() const {
    return defining_rep_.empty() ? 0 : static_cast<int>(defining_rep_.front().rows());
  }
  /// Complex-linear extension of the defining representation.
  Matrix represent(const Element& w) const;

  /// Preferred Cartan basis for built-in algebras (empty when unknown).
  const std::vector<RealVector>& default_cartan() const { return default_cartan_; }

 private:
  std::string label_;
  int dim_ = 0;
  std::vector<std::string> basis_labels_;
  std::vector<RealMatrix> ad_;
  std::vector<Matrix> defining_rep_;
  std::vector<RealVector> default_cartan_;
};

/// Gram matrix of Kil, the negative of the Killing form:
/// Kil(X_i, X_j) = -tr(ad_{X_i} ad_{X_j}).
class KillingForm {
 public:
  explicit KillingForm(const LieAlgebra& a);

  const RealMatrix& gram() const { return gram_; }
  int dim() const { return static_cast<int>(gram_.rows()); }

  /// C-bilinear extension.
  cplx operator()(const Element& w, const Element& z) const;

  /// Coordinates y = L^T x in which Kil is the standard inner product
  /// (gram = L L^T).  Only valid when the form is positive definite.
  const RealMatrix& orthonormal_map() const { return lt_; }
  const RealMatrix& orthonormal_map_inverse() const { return lt_inv_; }
  bool positive_definite() const { return positive_definite_; }

 private:
  RealMatrix gram_;
  RealMatrix lt_;
  RealMatrix lt_inv_;
  bool positive_definite_ = false;
};

Element bracket(const LieAlgebra& a, const Element& w, const Element& z);

/// (X + iY)* = -X + iY.
Element star(const Element& w);

/// Complex conjugation with respect to the real form.
Element theta(const Element& w);

cplx killing(const LieAlgebra& a, const Element& w, const Element& z);
cplx killing(const KillingForm& kil, const Element& w, const Element& z);

struct CheckItem {
  std::string name;
  bool passed;
  double residual;
  std::string detail;
};

struct AlgebraReport {
  std::vector<CheckItem> items;
  bool all_passed() const;
  const CheckItem* find(const std::string& name) const;
};

/// Checks every LieAlgebra invariant and reports residual norms; never throws
/// on invalid algebras.
AlgebraReport check_algebra(const LieAlgebra& a, const Tolerance& tol = kDefaultTolerance);

namespace algebras {

/// su(n) in its defining representation, 2 <= n <= 6.  Basis: for each pair
/// j < k the elements (i/2)(E_jk + E_kj) and (1/2)(E_jk - E_kj), then the
/// diagonal elements (i/2)(E_kk - E_{k+1,k+1}).  For n = 2 this is (i/2)sigma_a.
LieAlgebra su(int n);

/// so(n) in the vector representation, 3 <= n <= 6, basis E_jk - E_kj.
LieAlgebra so(int n);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Resolves names such as "su3", "so5", "su2+su2".
LieAlgebra by_name(const std::string& name);

}  // namespace algebras
}  // namespace orbitcalc
