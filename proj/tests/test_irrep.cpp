#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "orbitcalc/errors.hpp"
#include "orbitcalc/irrep.hpp"

using namespace orbitcalc;

namespace {

std::map<std::vector<int>, int> weight_multiset(const std::vector<WeightSpace>& ws) {
  std::map<std::vector<int>, int> out;
  for (const auto& w : ws) out[w.dynkin] += w.multiplicity();
  return out;
}

std::map<std::vector<int>, int> weights_of(const Representation& r, const RootSystem& rs) {
  return weight_multiset(weight_decomposition(r, rs.roots.cartan, rs.coroots));
}

}  // namespace

TEST(TensorProduct, Su2DefiningSquared) {
  const RootSystem rs = analyze(algebras::su(2));
  const Representation d = defining_representation(rs.algebra);
  const Representation t = tensor_product(d, d);
  EXPECT_EQ(t.dim(), 4);
  const std::map<std::vector<int>, int> expected{{{2}, 1}, {{0}, 2}, {{-2}, 1}};
  EXPECT_EQ(weights_of(t, rs), expected);
  EXPECT_LT(homomorphism_residual(t, rs.algebra), 1e-12);
}

TEST(TensorProduct, TrivialFactorIsIdentity) {
  const RootSystem rs = analyze(algebras::su(3));
  const Representation d = defining_representation(rs.algebra);
  const Representation t = tensor_product(d, trivial_representation(rs.algebra.dim()));
  ASSERT_EQ(t.dim(), d.dim());
  for (size_t i = 0; i < d.matrices.size(); ++i) EXPECT_LT((t.matrices[i] - d.matrices[i]).norm(), 1e-15);
}

TEST(TensorProduct, Su3DefiningTimesConjugateHasTripleZeroWeight) {
  const RootSystem rs = analyze(algebras::su(3));
  const Representation d = defining_representation(rs.algebra);
  const auto w = weights_of(tensor_product(d, conjugate_rep(d)), rs);
  EXPECT_EQ(w.at({0, 0}), 3);
  int total = 0;
  for (const auto& [k, m] : w) total += m;
  EXPECT_EQ(total, 9);
}

TEST(TensorProduct, AlgebraMismatchRejected) {
  const Representation a = defining_representation(algebras::su(2));
  const Representation b = defining_representation(algebras::su(3));
  EXPECT_THROW(tensor_product(a, b), DimensionMismatch);
}

TEST(ConjugateRep, Su2IsSelfConjugate) {
  const RootSystem rs = analyze(algebras::su(2));
  const Representation d = defining_representation(rs.algebra);
  EXPECT_EQ(weights_of(conjugate_rep(d), rs), weights_of(d, rs));
  const std::map<std::vector<int>, int> expected{{{1}, 1}, {{-1}, 1}};
  EXPECT_EQ(weights_of(d, rs), expected);
}

TEST(ConjugateRep, Su3DefiningGoesToSecondFundamental) {
  const RootSystem rs = analyze(algebras::su(3));
  const Representation d = defining_representation(rs.algebra);
  const std::map<std::vector<int>, int> defining{{{1, 0}, 1}, {{-1, 1}, 1}, {{0, -1}, 1}};
  const std::map<std::vector<int>, int> dual{{{0, 1}, 1}, {{1, -1}, 1}, {{-1, 0}, 1}};
  EXPECT_EQ(weights_of(d, rs), defining);
  EXPECT_EQ(weights_of(conjugate_rep(d), rs), dual);
  const Representation triv = trivial_representation(8);
  EXPECT_LT(conjugate_rep(triv).matrices[3].norm(), 1e-15);
}

TEST(BuildIrrep, Dimensions) {
  const RootSystem su2 = analyze(algebras::su(2));
  EXPECT_EQ(build_irrep(su2, {{2}}).dim(), 3);
  EXPECT_EQ(build_irrep(su2, {{5}}).dim(), 6);
  const RootSystem su3 = analyze(algebras::su(3));
  EXPECT_EQ(build_irrep(su3, {{1, 1}}).dim(), 8);
  EXPECT_EQ(build_irrep(su3, {{0, 1}}).dim(), 3);
  EXPECT_EQ(build_irrep(su3, {{3, 0}}).dim(), 10);
}

TEST(BuildIrrep, TrivialWeight) {
  const RootSystem rs = analyze(algebras::su(2));
  const Irrep r = build_irrep(rs, {{0}});
  EXPECT_EQ(r.dim(), 1);
  for (const auto& m : r.rep.matrices) EXPECT_EQ(m.norm(), 0.0);
  ASSERT_EQ(r.weights.size(), 1u);
  EXPECT_EQ(r.weights[0].dynkin, std::vector<int>{0});
}

TEST(BuildIrrep, AdjointWeights) {
  const RootSystem rs = analyze(algebras::su(2));
  const Irrep r = build_irrep(rs, {{2}});
  const std::map<std::vector<int>, int> expected{{{2}, 1}, {{0}, 1}, {{-2}, 1}};
  EXPECT_EQ(weight_multiset(r.weights), expected);
}

TEST(BuildIrrep, Su3OctetZeroWeightMultiplicity) {
  const RootSystem rs = analyze(algebras::su(3));
  const Irrep r = build_irrep(rs, {{1, 1}});
  EXPECT_EQ(weight_multiset(r.weights).at({0, 0}), 2);
}

TEST(BuildIrrep, StructuralInvariants) {
  struct Case {
    const char* algebra;
    std::vector<int> labels;
  };
  const std::vector<Case> cases{{"su2", {3}}, {"su3", {2, 1}}, {"su4", {1, 0, 1}}, {"so5", {1, 0}},
                                {"so5", {2, 0}}, {"su2+su2", {1, 2}}};
  for (const auto& c : cases) {
    const RootSystem rs = analyze(algebras::by_name(c.algebra));
    const Irrep r = build_irrep(rs, {c.labels});
    SCOPED_TRACE(c.algebra);
    EXPECT_LT(homomorphism_residual(r.rep, rs.algebra), 1e-8);
    EXPECT_LT(unitarity_residual(r.rep), 1e-9);
    EXPECT_EQ(highest_weight_space_dim(r.rep, rs), 1);
    EXPECT_NEAR(r.highest_vector.norm(), 1.0, 1e-12);
    for (const auto& t : rs.triples) {
      EXPECT_LT((r.rep(t.e) * r.highest_vector).norm(), 1e-9);
      // Integral spectrum of pi(H_alpha) on every weight.
      for (const auto& w : r.weights) {
        const cplx v = evaluate_weight(w.weight, rs.roots.cartan, t.h);
        EXPECT_LT(std::abs(kI * v - std::round((kI * v).real())), 1e-7);
      }
    }
    // Weight spaces are pairwise orthogonal and span.
    Matrix all(r.dim(), 0);
    for (const auto& w : r.weights) {
      all.conservativeResize(Eigen::NoChange, all.cols() + w.basis.cols());
      all.rightCols(w.basis.cols()) = w.basis;
    }
    ASSERT_EQ(all.cols(), r.dim());
    EXPECT_LT((all.adjoint() * all - Matrix::Identity(r.dim(), r.dim())).norm(), 1e-9);
    EXPECT_EQ(r.weights.front().dynkin, c.labels);
  }
}

TEST(BuildIrrep, SpinWeightsOfSo5AreUnreachable) {
  const RootSystem rs = analyze(algebras::so(5));
  // The short simple root carries the spin label; a_01 = -2 makes root 0 the long one.
  const int spin = rs.cartan_matrix(0, 1) == -2 ? 1 : 0;
  std::vector<int> labels(2, 0);
  labels[spin] = 1;
  EXPECT_THROW(build_irrep(rs, {labels}), UnreachableWeight);
  labels[spin] = 2;
  EXPECT_NO_THROW(build_irrep(rs, {labels}));
}

TEST(BuildIrrep, InvalidWeights) {
  const RootSystem rs = analyze(algebras::su(3));
  EXPECT_THROW(build_irrep(rs, {{1}}), InvalidWeight);
  EXPECT_THROW(build_irrep(rs, {{1, -1}}), InvalidWeight);
}

TEST(BuildIrrep, BudgetExceeded) {
  const RootSystem rs = analyze(algebras::su(3));
  IrrepOptions opts;
  opts.max_tensor_dim = 8;
  EXPECT_THROW(build_irrep(rs, {{2, 2}}, opts), BudgetExceeded);
}

TEST(BuildIrrep, Deterministic) {
  const RootSystem rs = analyze(algebras::su(3));
  const Irrep a = build_irrep(rs, {{2, 1}});
  const Irrep b = build_irrep(rs, {{2, 1}});
  for (size_t i = 0; i < a.rep.matrices.size(); ++i) EXPECT_EQ((a.rep.matrices[i] - b.rep.matrices[i]).norm(), 0.0);
}

TEST(Lattice, Membership) {
  const std::vector<std::vector<int>> gens{{2, 0}, {0, 3}};
  EXPECT_TRUE(lattice_contains(gens, {4, -3}));
  EXPECT_FALSE(lattice_contains(gens, {1, 0}));
  EXPECT_TRUE(lattice_contains({{1, 1}, {1, -1}}, {2, 0}));
  EXPECT_FALSE(lattice_contains({{1, 1}, {1, -1}}, {1, 0}));
}
