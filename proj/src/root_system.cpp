#include "orbitcalc/root_system.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "orbitcalc/errors.hpp"

namespace orbitcalc {

RealMatrix CartanSubalgebra::matrix() const {
  if (basis.empty()) return RealMatrix();
  RealMatrix m(basis.front().size(), rank());
  for (int i = 0; i < rank(); ++i) m.col(i) = basis[static_cast<size_t>(i)];
  return m;
}

Vector CartanSubalgebra::coordinates(const Element& h, double* residual) const {
  const Matrix m = matrix().cast<cplx>();
  const Vector t = m.colPivHouseholderQr().solve(h.coeffs);
  if (residual) *residual = (m * t - h.coeffs).norm();
  return t;
}

std::optional<int> RootDatum::find(const RealVector& values, double tol) const {
  for (int r = 0; r < size(); ++r)
    if ((roots[static_cast<size_t>(r)].values - values).norm() <= tol) return r;
  return std::nullopt;
}

double TripleResiduals::max() const {
  return std::max({e_f_minus_h, h_e, h_f, f_star, h_in_ih});
}

namespace {

/// Stacked ad_{H} maps; its kernel is the centralizer of span{H}.
RealMatrix stacked_ad(const LieAlgebra& a, const std::vector<RealVector>& hs) {
  RealMatrix m(a.dim() * static_cast<int>(hs.size()), a.dim());
  for (size_t i = 0; i < hs.size(); ++i) {
    RealMatrix ad = RealMatrix::Zero(a.dim(), a.dim());
    for (int k = 0; k < a.dim(); ++k) ad += hs[i][k] * a.ad(k);
    m.middleRows(static_cast<Eigen::Index>(i) * a.dim(), a.dim()) = ad;
  }
  return m;
}

}  // namespace

CartanSubalgebra find_cartan(const LieAlgebra& a, const std::optional<std::vector<RealVector>>& hint,
                             const Tolerance& tol) {
  std::vector<RealVector> h = hint ? *hint : a.default_cartan();
  const int n = a.dim();

  for (const auto& x : h)
    if (x.size() != n) throw InvalidCartan("Cartan hint element has wrong dimension");
  for (size_t i = 0; i < h.size(); ++i)
    for (size_t j = i + 1; j < h.size(); ++j) {
      const Element b = bracket(a, Element::real(h[i]), Element::real(h[j]));
      if (b.norm() > tol.residual)
        throw InvalidCartan("Cartan hint is not abelian: |[H_" + std::to_string(i) + ", H_" +
                            std::to_string(j) + "]| = " + std::to_string(b.norm()));
    }
  if (!h.empty()) {
    RealMatrix hm(n, static_cast<Eigen::Index>(h.size()));
    for (size_t i = 0; i < h.size(); ++i) hm.col(static_cast<Eigen::Index>(i)) = h[i];
    const auto d = linalg::decide_rank(hm, tol);
    if (d.rank != static_cast<int>(h.size()) || d.ambiguous)
      throw InvalidCartan("Cartan hint is not extendable: elements are numerically degenerate");
  }

  // Grow h by elements of its centralizer until it is self-centralizing.
  for (int guard = 0; guard <= n; ++guard) {
    const RealMatrix centralizer =
        h.empty() ? RealMatrix::Identity(n, n) : linalg::null_space(stacked_ad(a, h), tol);
    if (centralizer.cols() == static_cast<Eigen::Index>(h.size())) return {h};

    RealMatrix hm(n, static_cast<Eigen::Index>(h.size()));
    for (size_t i = 0; i < h.size(); ++i) hm.col(static_cast<Eigen::Index>(i)) = h[i];
    const RealMatrix qh = linalg::column_basis(hm, tol);
    RealMatrix extra = centralizer - qh * (qh.transpose() * centralizer);
    extra = linalg::column_basis(extra, tol);
    if (extra.cols() == 0) throw InvalidCartan("centralizer computation is numerically degenerate");

    // A fixed generic combination, so that one step usually reaches a regular element.
    RealVector x = RealVector::Zero(n);
    for (Eigen::Index k = 0; k < extra.cols(); ++k)
      x += (1.0 + std::sqrt(2.0) * static_cast<double>(k) + 0.1 / (static_cast<double>(k) + 1.7)) *
           extra.col(k);
    x.normalize();
    h.push_back(x);
  }
  throw InvalidCartan("failed to reach a maximal abelian subalgebra");
}

RootDatum compute_roots(const LieAlgebra& a, const CartanSubalgebra& h, const Tolerance& tol) {
  const KillingForm kil(a);
  if (!kil.positive_definite())
    throw InvalidCartan("Kil is not positive definite; the algebra is not compact semisimple");
  const int n = a.dim();
  const int r = h.rank();
  if (r == 0) throw InvalidCartan("empty Cartan subalgebra");

  // In Kil-orthonormal coordinates each ad_H is real skew-symmetric, so i*ad_H is Hermitian.
  const RealMatrix& lt = kil.orthonormal_map();
  const RealMatrix& lt_inv = kil.orthonormal_map_inverse();
  std::vector<Matrix> ops;
  for (const auto& x : h.basis) {
    RealMatrix ad = RealMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) ad += x[k] * a.ad(k);
    ops.push_back(kI * (lt * ad * lt_inv).cast<cplx>());
  }
  const auto spaces = linalg::joint_eigenspaces(ops, tol);

  double scale = 1.0;
  for (const auto& s : spaces) scale = std::max(scale, s.eigenvalues.cwiseAbs().maxCoeff());
  const double zero_tol = tol.cluster_rel * scale;

  RootDatum rd;
  rd.cartan = h;
  std::vector<Root> roots;
  std::vector<Element> vectors;
  for (const auto& s : spaces) {
    // i*ad_H v = -alpha(H) v
    const RealVector alpha = -s.eigenvalues;
    const Matrix basis = lt_inv.cast<cplx>() * s.basis;
    if (alpha.cwiseAbs().maxCoeff() <= zero_tol) {
      rd.zero_weight_space = linalg::column_basis(basis, tol);
      continue;
    }
    if (s.basis.cols() != 1) {
      std::ostringstream msg;
      msg << "root space of dimension " << s.basis.cols() << " at weight " << alpha.transpose()
          << "; the Cartan subalgebra is not regular or clustering is ambiguous";
      throw AmbiguousClustering(msg.str());
    }
    Vector v = basis.col(0);
    v.normalize();
    roots.push_back({alpha});
    vectors.emplace_back(v);
  }
  if (rd.zero_weight_space.cols() != r) {
    std::ostringstream msg;
    msg << "zero-weight space has dimension " << rd.zero_weight_space.cols() << ", expected rank "
        << r << "; h is not maximal abelian";
    throw InvalidCartan(msg.str());
  }

  // Positivity functional phi(alpha) = sum_i 10^(rank-i) alpha(H_i), perturbed if singular.
  RealVector w(r);
  for (int i = 0; i < r; ++i) w[i] = std::pow(10.0, r - 1 - i);
  for (int attempt = 0;; ++attempt) {
    const bool regular = std::all_of(roots.begin(), roots.end(), [&](const Root& a_) {
      return std::abs(w.dot(a_.values)) > tol.cluster_rel * scale * w.cwiseAbs().maxCoeff();
    });
    if (regular) break;
    if (attempt > 32) throw AmbiguousClustering("no regular positivity functional found");
    for (int i = 1; i < r; ++i) w[i] *= 1.0 + std::sqrt(2.0) * 0.01 * static_cast<double>(i);
    if (r == 1) throw AmbiguousClustering("rank-one root has zero value");
  }
  rd.positivity_weights = w;

  std::vector<int> pos;
  for (int k = 0; k < static_cast<int>(roots.size()); ++k)
    if (w.dot(roots[static_cast<size_t>(k)].values) > 0) pos.push_back(k);
  std::sort(pos.begin(), pos.end(), [&](int x, int y) {
    return w.dot(roots[static_cast<size_t>(x)].values) > w.dot(roots[static_cast<size_t>(y)].values);
  });

  const double match = tol.cluster_rel * scale * 10.0;
  auto find_in = [&](const RealVector& v) -> int {
    for (int k = 0; k < static_cast<int>(roots.size()); ++k)
      if ((roots[static_cast<size_t>(k)].values - v).norm() <= match) return k;
    return -1;
  };

  for (int k : pos) {
    rd.roots.push_back(roots[static_cast<size_t>(k)]);
    rd.root_vectors.push_back(vectors[static_cast<size_t>(k)]);
  }
  for (int k : pos) {
    const int neg = find_in(-roots[static_cast<size_t>(k)].values);
    if (neg < 0) throw InvalidRoot("root system is not closed under negation");
    rd.roots.push_back(roots[static_cast<size_t>(neg)]);
    rd.root_vectors.push_back(vectors[static_cast<size_t>(neg)]);
  }
  if (rd.roots.size() != roots.size())
    throw InvalidRoot("positive and negative roots do not partition the root set");

  const int np = static_cast<int>(pos.size());
  rd.positive.resize(static_cast<size_t>(np));
  std::iota(rd.positive.begin(), rd.positive.end(), 0);
  rd.negative_of.resize(rd.roots.size());
  for (int k = 0; k < np; ++k) {
    rd.negative_of[static_cast<size_t>(k)] = k + np;
    rd.negative_of[static_cast<size_t>(k + np)] = k;
  }

  // Simple roots: positive roots that are not a sum of two positive roots.
  for (int k = 0; k < np; ++k) {
    bool decomposable = false;
    for (int x = 0; x < np && !decomposable; ++x)
      for (int y = x; y < np && !decomposable; ++y)
        decomposable = (rd.roots[static_cast<size_t>(x)].values +
                        rd.roots[static_cast<size_t>(y)].values - rd.roots[static_cast<size_t>(k)].values)
                           .norm() <= match;
    if (!decomposable) rd.simple.push_back(k);
  }
  if (static_cast<int>(rd.simple.size()) != r) {
    std::ostringstream msg;
    msg << "found " << rd.simple.size() << " simple roots for rank " << r;
    throw InvalidRoot(msg.str());
  }

  RealMatrix simples(r, r);
  for (int j = 0; j < r; ++j) simples.col(j) = rd.roots[static_cast<size_t>(rd.simple[static_cast<size_t>(j)])].values;
  Eigen::FullPivLU<RealMatrix> lu(simples);
  if (lu.rank() != r) throw InvalidRoot("simple roots are linearly dependent");
  for (int k = 0; k < np; ++k) {
    const RealVector c = lu.solve(rd.roots[static_cast<size_t>(k)].values);
    std::vector<int> coords;
    for (int j = 0; j < r; ++j) {
      const double rounded = std::round(c[j]);
      if (std::abs(c[j] - rounded) > tol.integrality || rounded < 0) {
        std::ostringstream msg;
        msg << "positive root " << k << " has non-integral or negative simple coordinates "
            << c.transpose();
        throw InvalidRoot(msg.str());
      }
      coords.push_back(static_cast<int>(rounded));
    }
    rd.simple_coordinates.push_back(std::move(coords));
  }
  return rd;
}

cplx evaluate_weight(const RealVector& weight, const CartanSubalgebra& cartan, const Element& h) {
  return cartan.coordinates(h).cwiseProduct(weight.cast<cplx>()).sum();
}

SL2Triple sl2_triple(const LieAlgebra& a, const RootDatum& rd, int root, const KillingForm& kil,
                     const Tolerance& tol) {
  if (root < 0 || root >= rd.size()) throw InvalidRoot("root index out of range");
  if (std::find(rd.positive.begin(), rd.positive.end(), root) == rd.positive.end())
    throw InvalidRoot("sl2 triples are built for positive roots only");

  Element e = rd.root_vectors[static_cast<size_t>(root)];
  // Kil(E, E*) = -E^H K E < 0 for E != 0.
  const double kee = -kil(e, star(e)).real();
  if (!(kee > 0.0)) throw InvalidRoot("Kil(E, E*) is not negative for the root vector");
  e = (1.0 / std::sqrt(kee)) * e;

  const Element h_tilde = bracket(a, e, star(e));
  if (h_tilde.norm() <= tol.residual)
    throw InvalidRoot("[E, E*] vanishes; the root datum is inconsistent");
  // [[E, E*], E] = c E with c = -Kil(H~, H~) > 0.
  const Element he = bracket(a, h_tilde, e);
  const cplx c = e.coeffs.dot(he.coeffs) / e.coeffs.squaredNorm();
  if (!(c.real() > 0.0) || std::abs(c.imag()) > 1e-6 * std::abs(c))
    throw InvalidRoot("[[E, E*], E] is not a positive multiple of E");
  e = std::sqrt(2.0 / c.real()) * e;

  for (Eigen::Index i = 0; i < e.coeffs.size(); ++i) {
    if (std::abs(e.coeffs[i]) > 1e-6) {
      const cplx phase = std::conj(e.coeffs[i]) / std::abs(e.coeffs[i]);
      e = phase * e;
      e.coeffs[i] = std::abs(e.coeffs[i]);
      break;
    }
  }

  SL2Triple t;
  t.root = root;
  t.e = e;
  t.f = star(e);
  t.h = bracket(a, t.e, t.f);
  return t;
}

TripleResiduals triple_residuals(const LieAlgebra& a, const RootDatum& rd, const SL2Triple& t) {
  TripleResiduals r;
  r.e_f_minus_h = (bracket(a, t.e, star(t.e)) - t.h).norm();
  r.h_e = (bracket(a, t.h, t.e) - 2.0 * t.e).norm();
  r.h_f = (bracket(a, t.h, t.f) + 2.0 * t.f).norm();
  r.f_star = (t.f - star(t.e)).norm();
  // H = iY with Y real and in h.
  const Element y = cplx{0.0, -1.0} * t.h;
  double outside = 0.0;
  rd.cartan.coordinates(Element::real(y.coeffs.real()), &outside);
  r.h_in_ih = std::max(y.coeffs.imag().norm(), outside);
  return r;
}

const SL2Triple& RootSystem::triple_for(int root) const {
  for (const auto& t : triples)
    if (t.root == root) return t;
  throw InvalidRoot("no sl2 triple for root " + std::to_string(root));
}

RootSystem analyze(LieAlgebra a, const Tolerance& tol) {
  KillingForm kil(a);
  const CartanSubalgebra h = find_cartan(a, std::nullopt, tol);
  RootDatum rd = compute_roots(a, h, tol);

  std::vector<SL2Triple> triples;
  for (int p : rd.positive) triples.push_back(sl2_triple(a, rd, p, kil, tol));

  const int r = rd.rank();
  RealMatrix coroots(r, r);
  for (int j = 0; j < r; ++j) {
    const SL2Triple& t = triples[static_cast<size_t>(rd.simple[static_cast<size_t>(j)])];
    // i mu(H) = i sum_k t_k mu_k with H = sum_k t_k H_k.
    const Vector coords = h.coordinates(t.h);
    coroots.row(j) = (kI * coords).real().transpose();
  }

  Eigen::MatrixXi cm(r, r);
  for (int j = 0; j < r; ++j) {
    const RealVector dyn = coroots * rd.roots[static_cast<size_t>(rd.simple[static_cast<size_t>(j)])].values;
    for (int k = 0; k < r; ++k) {
      const double v = dyn[k];
      if (std::abs(v - std::round(v)) > tol.integrality)
        throw InvalidRoot("non-integral Cartan matrix entry " + std::to_string(v));
      cm(j, k) = static_cast<int>(std::lround(v));
    }
  }
  return RootSystem{std::move(a), std::move(kil), std::move(rd), std::move(triples),
                    std::move(coroots), std::move(cm)};
}

}  // namespace orbitcalc
