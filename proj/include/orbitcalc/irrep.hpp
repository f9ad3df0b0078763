#pragma once

#include <cstddef>
#include <vector>

#include "orbitcalc/representation.hpp"
#include "orbitcalc/root_system.hpp"

namespace orbitcalc {

/// Dominant integral weight given by n_j = i lambda(H_{alpha_j}) over the
/// simple roots, in the order of RootDatum::simple.
struct HighestWeight {
  std::vector<int> dynkin_labels;

  bool is_zero() const;
  /// Throws InvalidWeight unless the labels are nonnegative and match `rank`.
  void validate(int rank) const;
};

struct WeightSpace {
  RealVector weight;          // mu(H_i) for the Cartan basis
  std::vector<int> dynkin;    // i mu(H_{alpha_j}), rounded
  Matrix basis;               // orthonormal columns
  int multiplicity() const { return static_cast<int>(basis.cols()); }
};

struct Irrep {
  HighestWeight highest_weight;
  Representation rep;
  /// Unit highest weight vector; the first basis vector by construction.
  Vector highest_vector;
  std::vector<WeightSpace> weights;
  /// Numbers of defining and conjugate-defining factors in the ambient tensor power.
  int defining_factors = 0;
  int conjugate_factors = 0;

  int dim() const { return rep.dim(); }
};

struct IrrepOptions {
  /// Largest ambient tensor-power dimension that may be built.
  std::size_t max_tensor_dim = std::size_t{1} << 16;
  Tolerance tol = kDefaultTolerance;
};

/// Highest-weight irrep built inside (defining)^a (x) (conjugate)^b: solve for
/// weight-lambda vectors killed by every simple raising operator, then close
/// under the simple lowering operators.  Throws UnreachableWeight when lambda
/// is outside the lattice generated by the defining weights.
Irrep build_irrep(const RootSystem& rs, const HighestWeight& lambda, const IrrepOptions& opts = {});

/// Orthogonal decomposition of `r` into joint eigenspaces of -i pi(H_k).
std::vector<WeightSpace> weight_decomposition(const Representation& r,
                                              const CartanSubalgebra& h,
                                              const RealMatrix& coroots,
                                              const Tolerance& tol = kDefaultTolerance);
std::vector<WeightSpace> weight_decomposition(const Representation& r, const RootSystem& rs,
                                              const Tolerance& tol = kDefaultTolerance);

/// dim of { v : pi(E_alpha) v = 0 for every simple alpha }.
int highest_weight_space_dim(const Representation& r, const RootSystem& rs,
                             const Tolerance& tol = kDefaultTolerance);

/// Whether `target` lies in the Z-span of `generators`.
bool lattice_contains(const std::vector<std::vector<int>>& generators,
                      const std::vector<int>& target);

}  // namespace orbitcalc
