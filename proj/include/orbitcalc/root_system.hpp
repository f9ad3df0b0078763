#pragma once

#include <optional>
#include <vector>

#include "orbitcalc/lie_algebra.hpp"

namespace orbitcalc {

/// Maximal abelian subalgebra h of g, given by an ordered real basis H_i.
struct CartanSubalgebra {
  std::vector<RealVector> basis;

  int rank() const { return static_cast<int>(basis.size()); }
  /// dim(g) x rank matrix whose columns are the H_i.
  RealMatrix matrix() const;
  /// Coordinates t with h = sum_i t_i H_i (least squares) and the residual.
  Vector coordinates(const Element& h, double* residual = nullptr) const;
};

/// alpha(H_i) for the ordered Cartan basis; ad_H acts on the root space by
/// i alpha(H).
struct Root {
  RealVector values;
};

struct RootDatum {
  CartanSubalgebra cartan;
  /// All roots: the positive roots first, then their negatives in the same order.
  std::vector<Root> roots;
  /// Unit spanning vector of each root space, parallel to `roots`.
  std::vector<Element> root_vectors;
  std::vector<int> positive;
  /// Simple roots, ordered by decreasing value of the positivity functional.
  std::vector<int> simple;
  std::vector<int> negative_of;
  /// For each positive root, its nonnegative integer coordinates on `simple`.
  std::vector<std::vector<int>> simple_coordinates;
  /// Orthonormal basis (columns) of the zero-weight space h^C.
  Matrix zero_weight_space;
  /// Weights of the positivity functional phi(alpha) = sum_i w_i alpha(H_i).
  RealVector positivity_weights;

  int rank() const { return cartan.rank(); }
  int size() const { return static_cast<int>(roots.size()); }
  /// Index of the root matching `values` to `tol`, if any.
  std::optional<int> find(const RealVector& values, double tol) const;
  double positivity(int root) const { return positivity_weights.dot(roots[root].values); }
};

/// (H_alpha, E_alpha, F_alpha = E_alpha*) with [E, E*] = H and [H, E] = 2E.
struct SL2Triple {
  int root = -1;
  Element h;
  Element e;
  Element f;
};

struct TripleResiduals {
  double e_f_minus_h = 0.0;  // |[E, E*] - H|
  double h_e = 0.0;          // |[H, E] - 2E|
  double h_f = 0.0;          // |[H, F] + 2F|
  double f_star = 0.0;       // |F - E*|
  double h_in_ih = 0.0;      // distance of H from i*h
  double max() const;
};

/// Maximal abelian subalgebra containing `hint` (or the algebra's default
/// Cartan when no hint is given).  Throws InvalidCartan when the hint is not
/// abelian or is numerically degenerate.
CartanSubalgebra find_cartan(const LieAlgebra& a,
                             const std::optional<std::vector<RealVector>>& hint = std::nullopt,
                             const Tolerance& tol = kDefaultTolerance);

/// Simultaneous eigendecomposition of ad restricted to h on g^C.
RootDatum compute_roots(const LieAlgebra& a, const CartanSubalgebra& h,
                        const Tolerance& tol = kDefaultTolerance);

/// Two-step normalisation: scale E in the root space so Kil(E, E*) = -1,
/// then rescale so [[E, E*], E] = 2E.  The phase of E is fixed by making its
/// first coordinate of modulus > 1e-6 real and positive.
SL2Triple sl2_triple(const LieAlgebra& a, const RootDatum& rd, int root, const KillingForm& kil,
                     const Tolerance& tol = kDefaultTolerance);

TripleResiduals triple_residuals(const LieAlgebra& a, const RootDatum& rd, const SL2Triple& t);

/// alpha(h) for h in h^C, by C-linear extension from the Cartan basis.
cplx evaluate_weight(const RealVector& weight, const CartanSubalgebra& cartan, const Element& h);

/// Everything downstream modules need about one algebra.
struct RootSystem {
  LieAlgebra algebra;
  KillingForm kil;
  RootDatum roots;
  /// One triple per positive root, in the order of `roots.positive`.
  std::vector<SL2Triple> triples;
  /// Row j maps a weight in h-coordinates to i mu(H_{alpha_j}) for simple alpha_j.
  RealMatrix coroots;
  /// (j, k) entry i alpha_j(H_{alpha_k}) over simple roots.
  Eigen::MatrixXi cartan_matrix;

  const SL2Triple& triple_for(int root) const;
  const SL2Triple& simple_triple(int j) const { return triple_for(roots.simple[j]); }
  /// Dynkin labels i mu(H_{alpha_j}) of a weight in h-coordinates.
  RealVector dynkin(const RealVector& weight) const { return coroots * weight; }
};

RootSystem analyze(LieAlgebra a, const Tolerance& tol = kDefaultTolerance);

}  // namespace orbitcalc
