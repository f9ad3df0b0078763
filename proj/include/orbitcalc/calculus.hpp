#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbitcalc/irrep.hpp"
#include "orbitcalc/root_system.hpp"

namespace orbitcalc {

/// The rank-one operator <ket, bra>_o : zeta -> ket <bra, zeta>, with the
/// inner product conjugate-linear in its first argument.
struct RankOne {
  Vector ket;
  Vector bra;

  Vector operator()(const Vector& zeta) const { return ket * bra.dot(zeta); }
  Matrix matrix() const { return ket * bra.adjoint(); }
};

/// g_o = ker(pi) and its Kil-orthocomplement g_lambda, as coordinate columns.
struct KernelIdeal {
  RealMatrix g_o;
  RealMatrix g_lambda;
  double ideal_residual = 0.0;    // component of [X_i, g_o] outside g_o
  double commute_residual = 0.0;  // |[g_lambda, g_o]|
  int faithful_rank = 0;          // rank of X -> pi(X) restricted to g_lambda
  bool faithful_on_g_lambda() const { return faithful_rank == g_lambda.cols(); }
};

KernelIdeal kernel_ideal(const LieAlgebra& a, const Representation& r, const KillingForm& kil,
                         const Tolerance& tol = kDefaultTolerance);

/// Derivation d : B(H) -> Hom(g, B(H)), (dT)(X) = [pi(X), T].
class DerivationCalculus {
 public:
  DerivationCalculus(const RootSystem& rs, Irrep irrep, const Tolerance& tol = kDefaultTolerance);

  const Irrep& irrep() const { return irrep_; }
  const Representation& rep() const { return irrep_.rep; }
  const KernelIdeal& ideal() const { return ideal_; }
  int n() const { return irrep_.dim(); }
  int algebra_dim() const { return irrep_.rep.algebra_dim(); }

  /// Values of dT on the basis of g.
  std::vector<Matrix> d(const Matrix& t) const;
  /// (dT)(W) for W in g^C.
  Matrix d(const Matrix& t, const Element& w) const;

 private:
  Irrep irrep_;
  KernelIdeal ideal_;
};

struct QSpan {
  int dim_q = 0;
  int dim_q_tight = 0;  // rank cutoff divided by 10
  int dim_q_loose = 0;  // rank cutoff multiplied by 10
  std::size_t functionals = 0;
  /// Orthonormal basis of the span, functionals written as coordinate
  /// columns (phi(X_1), ..., phi(X_n)).
  Matrix span;
  /// Projector distance between the span and the annihilator of g_o.
  double annihilator_distance = 0.0;
  /// max |phi(Y)| over generating functionals and Y in the g_o basis.
  double g_o_residual = 0.0;
  bool rank_stable() const { return dim_q == dim_q_tight && dim_q == dim_q_loose; }
};

/// Span of the functionals X -> <eta, [T, X] zeta> over weight vectors eta,
/// zeta and matrix units T.
QSpan q_span(const DerivationCalculus& calc, const Tolerance& tol = kDefaultTolerance);
/// Same sweep with eta, zeta over the columns of `vectors` and T over the
/// matrix units of the unitary `frame`.
QSpan q_span(const Representation& r, const Matrix& vectors, const Matrix& frame,
             const RealMatrix& g_o, const Tolerance& tol = kDefaultTolerance);

/// Rank of the span of X -> R [pi(X), T] S over matrix units R, S, T inside
/// Hom(g, B(H)).  Throws BudgetExceeded when N^2 dim g exceeds `budget`.
int bimodule_span(const DerivationCalculus& calc, std::size_t budget,
                  const Tolerance& tol = kDefaultTolerance);

enum class WitnessKind { CartanDirection, LoweringDirection };

/// One functional from the proof: for the sl2-highest weight vector xi,
///   CartanDirection:   phi(X) = <xi, [E_alpha, X] F_alpha xi>
///   LoweringDirection: phi(X) = <xi, [E_alpha, X] xi>
struct Witness {
  int root = -1;
  WitnessKind kind = WitnessKind::CartanDirection;
  Vector values;                // phi(X_i)
  double span_residual = 0.0;   // distance of phi/|phi| from the computed span
  /// CartanDirection: relative residual of phi|h against the best multiple of alpha.
  /// LoweringDirection: max |phi| on h, relative to |phi|.
  double cartan_residual = 0.0;
  double cartan_multiple = 0.0;  // CartanDirection only: |c| in phi|h = c alpha
  /// Largest |phi| on root vectors that must vanish, relative to |phi|.
  double root_vector_residual = 0.0;
  cplx target_value{};           // LoweringDirection only: phi(F_alpha)
  bool passed = false;
};

std::vector<Witness> proof_witnesses(const RootSystem& rs, const DerivationCalculus& calc,
                                     const QSpan& q, const Tolerance& tol = kDefaultTolerance);

struct TheoremOptions {
  /// Skip the bimodule check when N^2 dim g exceeds this.
  std::size_t bimodule_budget = 4096;
  bool bimodule = true;
  IrrepOptions irrep;
  Tolerance tol = kDefaultTolerance;
  unsigned seed = 20240611u;
};

struct CotangentReport {
  std::string algebra;
  std::vector<int> labels;
  int dim_g = 0;
  int dim_g_lambda = 0;
  int dim_g_o = 0;
  int dim_h = 0;  // N, dimension of the representation space
  QSpan q;
  std::optional<int> dim_bimodule;
  KernelIdeal ideal;
  std::vector<Witness> witnesses;
  double leibniz_residual = 0.0;
  double d_on_g_o_residual = 0.0;
  bool trivial = false;
  bool verdict = false;

  bool witnesses_passed() const;
};

/// build_irrep -> kernel_ideal -> q_span (-> bimodule_span) -> witnesses.
CotangentReport verify_main_theorem(const RootSystem& rs, const HighestWeight& lambda,
                                    const TheoremOptions& opts = {});

}  // namespace orbitcalc
