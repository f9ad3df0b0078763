#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "orbitcalc/orbit.hpp"

using namespace orbitcalc;

namespace {

struct Built {
  RootSystem rs;
  Irrep irrep;
  MomentumFunctional lambda;
  OrbitData od;
};

Built build(const char* algebra, std::vector<int> labels) {
  RootSystem rs = analyze(algebras::by_name(algebra));
  Irrep irrep = build_irrep(rs, {std::move(labels)});
  MomentumFunctional lambda = momentum(irrep);
  OrbitData od = stabilizer_split(rs.algebra, z_diamond(lambda, rs.kil), rs.kil);
  return {std::move(rs), std::move(irrep), std::move(lambda), std::move(od)};
}

}  // namespace

TEST(Momentum, VanishesOnRootVectors) {
  const Built b = build("su3", {2, 1});
  for (const auto& t : b.rs.triples) {
    EXPECT_LT(std::abs(b.lambda(t.e)), 1e-10);
    EXPECT_LT(std::abs(b.lambda(t.f)), 1e-10);
  }
}

TEST(Momentum, Su2AdjointLabelIsTwoAndMatchesLoweringNorm) {
  const Built b = build("su2", {2});
  const MomentumChecks mc = check_momentum(b.rs, b.irrep, b.lambda);
  ASSERT_EQ(mc.labels.size(), 1u);
  EXPECT_NEAR(mc.labels[0], 2.0, 1e-9);
  EXPECT_NEAR(mc.lowering_norms[0], 2.0, 1e-9);
}

TEST(Momentum, TrivialRepIsZero) {
  const Built b = build("su3", {0, 0});
  EXPECT_TRUE(b.lambda.is_zero(1e-15));
  EXPECT_EQ(b.od.k_basis.cols(), 8);
  EXPECT_EQ(b.od.m_basis.cols(), 0);
}

TEST(Momentum, LabelsMatchDynkinAndLoweringNorms) {
  for (const auto& [name, labels] : std::vector<std::pair<const char*, std::vector<int>>>{
           {"su3", {1, 0}}, {"su3", {2, 3}}, {"su4", {1, 0, 2}}, {"so5", {1, 2}}, {"su2+su2", {3, 1}}}) {
    const Built b = build(name, labels);
    const MomentumChecks mc = check_momentum(b.rs, b.irrep, b.lambda);
    for (size_t j = 0; j < labels.size(); ++j) {
      EXPECT_NEAR(mc.labels[j], labels[j], 1e-7) << name;
      EXPECT_NEAR(mc.lowering_norms[j], labels[j], 1e-7) << name;
    }
    EXPECT_LT(mc.max_positive_label_residual, 1e-7);
    EXPECT_LT(mc.imaginary_residual, 1e-12);
  }
}

TEST(Momentum, IndependentOfPhase) {
  const Built b = build("su3", {1, 2});
  for (double phi : {0.3, 1.9, -2.4}) {
    const Vector rotated = std::exp(cplx{0.0, phi}) * b.irrep.highest_vector;
    const MomentumFunctional other = momentum(b.irrep.rep, rotated);
    EXPECT_LT((other.values - b.lambda.values).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ZDiamond, ZeroFunctional) {
  const RootSystem rs = analyze(algebras::su(3));
  MomentumFunctional zero{RealVector::Zero(8)};
  EXPECT_EQ(z_diamond(zero, rs.kil).norm(), 0.0);
  const OrbitData od = stabilizer_split(rs.algebra, RealVector::Zero(8), rs.kil);
  EXPECT_EQ(od.k_basis.cols(), 8);
  EXPECT_EQ(od.m_basis.cols(), 0);
}

TEST(ZDiamond, Su2FundamentalIsCartanMultiple) {
  const Built b = build("su2", {1});
  const RealVector& z = b.od.z_diamond;
  EXPECT_GT(z.norm(), 0.1);
  // Parallel to the Cartan generator e3.
  EXPECT_LT(z.head(2).norm(), 1e-10);
  for (int i = 0; i < 3; ++i) {
    const double kil = (b.rs.kil.gram() * z)[i];
    EXPECT_NEAR(kil, b.lambda.values[i], 1e-10);
  }
}

TEST(ZDiamond, LiesInCartanAndOrthogonalToRootSpaces) {
  const Built b = build("su4", {1, 0, 1});
  const Element z = Element::real(b.od.z_diamond);
  for (const auto& e : b.rs.roots.root_vectors) EXPECT_LT(std::abs(b.rs.kil(z, e)), 1e-10);
  for (int i = 0; i < b.rs.roots.rank(); ++i)
    EXPECT_LT(bracket(b.rs.algebra, z, Element::real(b.rs.roots.cartan.basis[i])).norm(), 1e-10);
}

TEST(Stabilizer, Su3Dimensions) {
  const Built p2 = build("su3", {1, 0});
  EXPECT_EQ(p2.od.k_basis.cols(), 4);
  EXPECT_EQ(p2.od.m_basis.cols(), 4);
  const Built flag = build("su3", {1, 1});
  EXPECT_EQ(flag.od.k_basis.cols(), 2);
  EXPECT_EQ(flag.od.m_basis.cols(), 6);
}

TEST(Stabilizer, BasesAreKilOrthonormal) {
  const Built b = build("su4", {0, 1, 0});
  const RealMatrix& g = b.rs.kil.gram();
  const RealMatrix kk = b.od.k_basis.transpose() * g * b.od.k_basis;
  const RealMatrix mm = b.od.m_basis.transpose() * g * b.od.m_basis;
  EXPECT_LT((kk - RealMatrix::Identity(kk.rows(), kk.cols())).norm(), 1e-10);
  EXPECT_LT((mm - RealMatrix::Identity(mm.rows(), mm.cols())).norm(), 1e-10);
  EXPECT_LT((b.od.k_basis.transpose() * g * b.od.m_basis).norm(), 1e-10);
}

TEST(Struk, Su3FundamentalHasOneStabilizerRoot) {
  const Built b = build("su3", {1, 0});
  const StrukReport r = verify_struk(b.od, b.rs, b.lambda);
  EXPECT_TRUE(r.passed);
  EXPECT_LT(r.k_distance, 1e-9);
  EXPECT_LT(r.m_distance, 1e-9);
  ASSERT_EQ(r.stabilizer_roots.size(), 1u);
  EXPECT_EQ(r.stabilizer_roots[0], b.rs.roots.simple[1]);
  for (const auto& c : r.lemma) EXPECT_TRUE(c.holds());
}

TEST(Struk, Su2HasNoStabilizerRoots) {
  for (int j = 1; j <= 4; ++j) {
    const Built b = build("su2", {j});
    const StrukReport r = verify_struk(b.od, b.rs, b.lambda);
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.stabilizer_roots.empty());
    EXPECT_EQ(r.dim_k, 1);
    EXPECT_NEAR(r.lemma[0].label, j, 1e-9);
  }
}

TEST(Struk, RegularWeightGivesTorus) {
  const Built b = build("su4", {1, 1, 1});
  const StrukReport r = verify_struk(b.od, b.rs, b.lambda);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.dim_k, 3);
  EXPECT_EQ(r.dim_m, 12);
}

TEST(Struk, ReductiveSplitAndLemmaBothWays) {
  for (const auto& [name, labels] : std::vector<std::pair<const char*, std::vector<int>>>{
           {"su3", {1, 1}}, {"su4", {1, 0, 0}}, {"su4", {0, 1, 0}}, {"so5", {2, 0}}, {"su2+su2", {1, 0}}}) {
    const Built b = build(name, labels);
    const StrukReport r = verify_struk(b.od, b.rs, b.lambda);
    SCOPED_TRACE(name);
    EXPECT_TRUE(r.passed);
    EXPECT_LT(r.kk_residual, 1e-9);
    EXPECT_LT(r.km_residual, 1e-9);
    EXPECT_LT(r.h_in_k_residual, 1e-9);
    EXPECT_EQ(r.dim_m % 2, 0);
    for (const auto& c : r.lemma) {
      if (c.label_zero) {
        EXPECT_TRUE(c.e_in_k && c.f_in_k);
      } else {
        EXPECT_FALSE(c.e_in_k);
        EXPECT_FALSE(c.f_in_k);
      }
    }
  }
}

TEST(Struk, DetectsWrongSplit) {
  // Feed the split of a different weight; the root description no longer matches.
  const Built a = build("su3", {1, 0});
  const Built b = build("su3", {1, 1});
  const StrukReport r = verify_struk(b.od, a.rs, a.lambda);
  EXPECT_FALSE(r.passed);
}

TEST(Classify, MatchesLemmaLabels) {
  const Built b = build("su4", {1, 0, 0});
  const auto classes = classify_roots(b.rs, b.lambda);
  int stab = 0;
  for (auto c : classes) stab += c == RootClass::Stabilizer;
  // Stabilizer of the fundamental of su(4) is s(u(1) + u(3)): 3 positive roots.
  EXPECT_EQ(stab, 3);
}
