#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "orbitcalc/algebra_io.hpp"
#include "orbitcalc/errors.hpp"
#include "orbitcalc/oracles.hpp"
#include "orbitcalc/root_system.hpp"

using namespace orbitcalc;

namespace {

// Same algebra without the built-in Cartan preference, so find_cartan has
// to grow one from the centralizer.
LieAlgebra without_default(const LieAlgebra& a) {
  return LieAlgebra(a.label(), a.basis_labels(), a.structure_triplets(), a.defining_rep());
}

Matrix columns(const std::vector<RealVector>& vs, int dim) {
  Matrix m(dim, static_cast<Eigen::Index>(vs.size()));
  for (size_t i = 0; i < vs.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vs[i].cast<cplx>();
  return m;
}

}  // namespace

TEST(FindCartan, Su2DefaultIsSigma3) {
  const LieAlgebra a = algebras::su(2);
  const CartanSubalgebra h = find_cartan(a);
  ASSERT_EQ(h.rank(), 1);
  Matrix e3 = Matrix::Zero(3, 1);
  e3(2, 0) = 1.0;
  EXPECT_LT(linalg::subspace_distance(columns(h.basis, 3), e3), 1e-12);
}

TEST(FindCartan, GrownFromCentralizer) {
  for (const char* name : {"su2", "su3", "su4", "so5"}) {
    const LieAlgebra a = without_default(algebras::by_name(name));
    const CartanSubalgebra h = find_cartan(a);
    const int expected = algebras::by_name(name).default_cartan().size();
    EXPECT_EQ(h.rank(), expected) << name;
    for (int i = 0; i < h.rank(); ++i)
      for (int j = 0; j < h.rank(); ++j)
        EXPECT_LT(bracket(a, Element::real(h.basis[i]), Element::real(h.basis[j])).norm(), 1e-10);
  }
}

TEST(FindCartan, GrownCartanIsSelfCentralizing) {
  const LieAlgebra a = without_default(algebras::su(3));
  const CartanSubalgebra h = find_cartan(a);
  RealMatrix stacked(8 * h.rank(), 8);
  for (int i = 0; i < h.rank(); ++i) {
    RealMatrix ad = RealMatrix::Zero(8, 8);
    for (int k = 0; k < 8; ++k) ad += h.basis[i][k] * a.ad(k);
    stacked.middleRows(8 * i, 8) = ad;
  }
  EXPECT_EQ(linalg::null_space(stacked).cols(), 2);
}

TEST(FindCartan, FullHintReturnedUnchanged) {
  const LieAlgebra a = algebras::su(3);
  const auto hint = a.default_cartan();
  const CartanSubalgebra h = find_cartan(a, hint);
  EXPECT_EQ(h.rank(), 2);
  EXPECT_LT(linalg::subspace_distance(columns(h.basis, 8), columns(hint, 8)), 1e-12);
}

TEST(FindCartan, PartialHintIsExtended) {
  const LieAlgebra a = algebras::su(3);
  const std::vector<RealVector> hint{a.default_cartan()[0]};
  const CartanSubalgebra h = find_cartan(a, hint);
  EXPECT_EQ(h.rank(), 2);
  EXPECT_LT(linalg::distance_to_span(hint[0].cast<cplx>(), linalg::column_basis(columns(h.basis, 8))), 1e-10);
}

TEST(FindCartan, NonAbelianHintRejected) {
  const LieAlgebra a = algebras::su(2);
  RealVector x = RealVector::Zero(3), y = RealVector::Zero(3);
  x[0] = 1.0;
  y[1] = 1.0;
  EXPECT_THROW(find_cartan(a, std::vector<RealVector>{x, y}), InvalidCartan);
  EXPECT_THROW(find_cartan(a, std::vector<RealVector>{x, 2.0 * x}), InvalidCartan);
}

TEST(Roots, CountsMatchClosedForms) {
  for (int n = 2; n <= 5; ++n) {
    const RootSystem rs = analyze(algebras::su(n));
    EXPECT_EQ(rs.roots.size(), n * n - n) << "su" << n;
    EXPECT_EQ(static_cast<int>(rs.roots.positive.size()), (n * n - n) / 2);
    EXPECT_EQ(static_cast<int>(rs.roots.simple.size()), n - 1);
  }
  const RootSystem so5 = analyze(algebras::so(5));
  EXPECT_EQ(so5.roots.size(), 8);
  EXPECT_EQ(so5.roots.simple.size(), 2u);
  EXPECT_EQ(analyze(algebras::so(6)).roots.size(), 12);
  EXPECT_EQ(analyze(algebras::so(4)).roots.size(), 4);
}

TEST(Roots, DecompositionSpansAlgebra) {
  for (const char* name : {"su3", "so5", "su2+su2"}) {
    const RootSystem rs = analyze(algebras::by_name(name));
    const int dim = rs.algebra.dim();
    Matrix all = rs.roots.zero_weight_space;
    for (const auto& e : rs.roots.root_vectors) {
      all.conservativeResize(Eigen::NoChange, all.cols() + 1);
      all.col(all.cols() - 1) = e.coeffs;
    }
    EXPECT_EQ(all.cols(), dim) << name;
    EXPECT_EQ(linalg::numerical_rank(all), dim) << name;
    EXPECT_EQ(rs.roots.zero_weight_space.cols(), rs.roots.rank());
  }
}

TEST(Roots, EigenvectorsOfAdH) {
  const RootSystem rs = analyze(algebras::su(4));
  const auto& rd = rs.roots;
  for (int r = 0; r < rd.size(); ++r) {
    const Element& e = rd.root_vectors[r];
    for (int i = 0; i < rd.rank(); ++i) {
      const Element hi = Element::real(rd.cartan.basis[i]);
      const Element lhs = bracket(rs.algebra, hi, e);
      const Element rhs = cplx{0.0, rd.roots[r].values[i]} * e;
      EXPECT_LT((lhs - rhs).norm(), 1e-10);
    }
  }
}

TEST(Roots, NegationAndPositivity) {
  const RootSystem rs = analyze(algebras::so(5));
  const auto& rd = rs.roots;
  const int np = static_cast<int>(rd.positive.size());
  for (int p = 0; p < np; ++p) {
    const int neg = rd.negative_of[rd.positive[p]];
    EXPECT_LT((rd.roots[neg].values + rd.roots[rd.positive[p]].values).norm(), 1e-10);
    EXPECT_GT(rd.positivity(rd.positive[p]), 0.0);
    EXPECT_LT(rd.positivity(neg), 0.0);
    // Nonnegative integer coordinates reproduce the root.
    RealVector sum = RealVector::Zero(rd.rank());
    for (int j = 0; j < rd.rank(); ++j) {
      EXPECT_GE(rd.simple_coordinates[p][j], 0);
      sum += rd.simple_coordinates[p][j] * rd.roots[rd.simple[j]].values;
    }
    EXPECT_LT((sum - rd.roots[rd.positive[p]].values).norm(), 1e-10);
  }
  RealMatrix simples(rd.rank(), rd.rank());
  for (int j = 0; j < rd.rank(); ++j) simples.col(j) = rd.roots[rd.simple[j]].values;
  EXPECT_EQ(linalg::decide_rank(simples).rank, rd.rank());
}

TEST(Roots, ThetaSwapsRootSpaces) {
  const RootSystem rs = analyze(algebras::su(3));
  const auto& rd = rs.roots;
  for (int r = 0; r < rd.size(); ++r) {
    const Element t = theta(rd.root_vectors[r]);
    Matrix target(8, 1);
    target.col(0) = rd.root_vectors[rd.negative_of[r]].coeffs;
    EXPECT_LT(linalg::distance_to_span(t.coeffs, linalg::column_basis(target)), 1e-10);
  }
}

// Root spaces are Kil-orthogonal exactly when alpha + beta != 0.  The
// alpha - beta condition would make E_alpha orthogonal to F_alpha, which fails.
TEST(Roots, KilOrthogonalityOfRootSpaces) {
  const RootSystem rs = analyze(algebras::su(3));
  const auto& rd = rs.roots;
  for (int a = 0; a < rd.size(); ++a) {
    for (int b = 0; b < rd.size(); ++b) {
      const cplx k = rs.kil(rd.root_vectors[a], rd.root_vectors[b]);
      if (b == rd.negative_of[a])
        EXPECT_GT(std::abs(k), 1e-3);
      else
        EXPECT_LT(std::abs(k), 1e-12);
    }
    for (int i = 0; i < rd.rank(); ++i)
      EXPECT_LT(std::abs(rs.kil(rd.root_vectors[a], Element::real(rd.cartan.basis[i]))), 1e-12);
  }
}

TEST(Roots, CartanMatricesOfKnownTypes) {
  Eigen::MatrixXi a2(2, 2);
  a2 << 2, -1, -1, 2;
  EXPECT_EQ(analyze(algebras::su(3)).cartan_matrix, a2);
  const Eigen::MatrixXi c = analyze(algebras::so(5)).cartan_matrix;
  // B2: one off-diagonal entry -1 and the other -2.
  EXPECT_EQ(c(0, 0), 2);
  EXPECT_EQ(c(1, 1), 2);
  EXPECT_EQ(std::min(c(0, 1), c(1, 0)), -2);
  EXPECT_EQ(std::max(c(0, 1), c(1, 0)), -1);
  const Eigen::MatrixXi su2su2 = analyze(algebras::by_name("su2+su2")).cartan_matrix;
  EXPECT_EQ(su2su2, (Eigen::MatrixXi(2, 2) << 2, 0, 0, 2).finished());
}

TEST(Triples, ResidualsBelowTolerance) {
  for (const char* name : {"su2", "su3", "su4", "so5", "so6"}) {
    const RootSystem rs = analyze(algebras::by_name(name));
    ASSERT_EQ(rs.triples.size(), rs.roots.positive.size());
    for (const auto& t : rs.triples) {
      const TripleResiduals r = triple_residuals(rs.algebra, rs.roots, t);
      EXPECT_LT(r.max(), 1e-9) << name;
      EXPECT_LT((t.f - star(t.e)).norm(), 1e-15);
    }
  }
}

TEST(Triples, Su2HIsDiagOneMinusOne) {
  const RootSystem rs = analyze(algebras::su(2));
  const SL2Triple& t = rs.triples.at(0);
  const Matrix h = rs.algebra.represent(t.h);
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  expected(1, 1) = -1.0;
  EXPECT_LT((h - expected).norm(), 1e-12);
  const Matrix e = rs.algebra.represent(t.e);
  const Matrix f = rs.algebra.represent(t.f);
  EXPECT_LT((h * e - e * h - 2.0 * e).norm(), 1e-12);
  EXPECT_LT((e * f - f * e - h).norm(), 1e-12);
}

TEST(Triples, AlphaOfHAlphaIsTwo) {
  const RootSystem rs = analyze(algebras::su(3));
  for (const auto& t : rs.triples) {
    const cplx v = evaluate_weight(rs.roots.roots[t.root].values, rs.roots.cartan, t.h);
    EXPECT_NEAR((kI * v).real(), 2.0, 1e-10);
    EXPECT_NEAR((kI * v).imag(), 0.0, 1e-10);
  }
}

TEST(Triples, PhaseConventionIsDeterministic) {
  const RootSystem a = analyze(algebras::su(4));
  const RootSystem b = analyze(algebras::su(4));
  for (size_t k = 0; k < a.triples.size(); ++k) {
    EXPECT_LT((a.triples[k].e - b.triples[k].e).norm(), 1e-15);
    const Vector& c = a.triples[k].e.coeffs;
    Eigen::Index first = 0;
    while (std::abs(c[first]) <= 1e-6) ++first;
    EXPECT_GT(c[first].real(), 0.0);
    EXPECT_NEAR(c[first].imag(), 0.0, 1e-14);
  }
}

TEST(Triples, RejectsNonPositiveRoot) {
  const RootSystem rs = analyze(algebras::su(3));
  const int neg = rs.roots.negative_of[rs.roots.positive[0]];
  EXPECT_THROW(sl2_triple(rs.algebra, rs.roots, neg, rs.kil), InvalidRoot);
  EXPECT_THROW(sl2_triple(rs.algebra, rs.roots, 99, rs.kil), InvalidRoot);
}

TEST(Roots, CountsAgreeWithCartanMatrixConstruction) {
  for (const char* name : {"su2", "su3", "su4", "su5", "so5", "so6", "su2+su2"}) {
    const RootSystem rs = analyze(algebras::by_name(name));
    const auto oracle = oracles::positive_roots_from_cartan(rs.cartan_matrix);
    auto computed = rs.roots.simple_coordinates;
    std::sort(computed.begin(), computed.end());
    EXPECT_EQ(oracle, computed) << name;
  }
}
