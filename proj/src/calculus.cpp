#include "orbitcalc/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "orbitcalc/errors.hpp"

namespace orbitcalc {

namespace {

// Real matrix whose column i is pi(X_i) flattened into real and imaginary parts.
RealMatrix flatten(const Representation& r) {
  const Eigen::Index n2 = static_cast<Eigen::Index>(r.dim()) * r.dim();
  RealMatrix flat(2 * n2, r.algebra_dim());
  for (int i = 0; i < r.algebra_dim(); ++i) {
    const Eigen::Map<const Vector> m(r.matrices[static_cast<size_t>(i)].data(), n2);
    flat.col(i) << m.real(), m.imag();
  }
  return flat;
}

// Keeps the triangular factor of [acc; rows].  Row span and singular values
// of the full stack are preserved.
void compress(Matrix& acc, const Matrix& rows) {
  if (rows.rows() == 0) return;
  Matrix stacked(acc.rows() + rows.rows(), rows.cols());
  stacked << acc, rows;
  Eigen::HouseholderQR<Matrix> qr(stacked);
  const Eigen::Index k = std::min(stacked.rows(), stacked.cols());
  acc = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
}

Matrix random_matrix(std::mt19937& gen, int n) {
  std::normal_distribution<double> dist;
  Matrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = cplx{dist(gen), dist(gen)};
  return m;
}

cplx pair(const Vector& phi, const Element& w) { return phi.cwiseProduct(w.coeffs).sum(); }

}  // namespace

KernelIdeal kernel_ideal(const LieAlgebra& a, const Representation& r, const KillingForm& kil,
                         const Tolerance& tol) {
  if (r.algebra_dim() != a.dim()) throw DimensionMismatch("representation does not match algebra");
  const int n = a.dim();
  const RealMatrix flat = flatten(r);
  const auto decision = linalg::decide_rank(flat, tol);
  if (decision.ambiguous)
    throw RankAmbiguity("rank of X -> pi(X) is ambiguous at the singular-value cutoff");

  KernelIdeal out;
  out.g_o = linalg::null_space(flat, tol);
  if (out.g_o.cols() == 0) {
    out.g_lambda = RealMatrix::Identity(n, n);
  } else {
    const RealMatrix constraints = (kil.gram() * out.g_o).transpose();
    out.g_lambda = linalg::null_space(constraints, tol);
  }

  for (Eigen::Index y = 0; y < out.g_o.cols(); ++y) {
    const RealVector gy = out.g_o.col(y);
    for (int i = 0; i < n; ++i) {
      const RealVector b = a.ad(i) * gy;
      out.ideal_residual =
          std::max(out.ideal_residual, (b - out.g_o * (out.g_o.transpose() * b)).norm());
    }
    for (Eigen::Index x = 0; x < out.g_lambda.cols(); ++x) {
      const Element c = bracket(a, Element::real(out.g_lambda.col(x)), Element::real(gy));
      out.commute_residual = std::max(out.commute_residual, c.norm());
    }
  }
  out.faithful_rank = out.g_lambda.cols() == 0
                          ? 0
                          : linalg::decide_rank(RealMatrix(flat * out.g_lambda), tol).rank;
  return out;
}

DerivationCalculus::DerivationCalculus(const RootSystem& rs, Irrep irrep, const Tolerance& tol)
    : irrep_(std::move(irrep)) {
  ideal_ = kernel_ideal(rs.algebra, irrep_.rep, rs.kil, tol);
}

std::vector<Matrix> DerivationCalculus::d(const Matrix& t) const {
  if (t.rows() != n() || t.cols() != n()) throw DimensionMismatch("operator size does not match representation");
  std::vector<Matrix> out;
  out.reserve(irrep_.rep.matrices.size());
  for (const auto& p : irrep_.rep.matrices) out.push_back(linalg::commutator(p, t));
  return out;
}

Matrix DerivationCalculus::d(const Matrix& t, const Element& w) const {
  if (t.rows() != n() || t.cols() != n()) throw DimensionMismatch("operator size does not match representation");
  if (w.dim() != algebra_dim()) throw DimensionMismatch("element does not match algebra");
  return linalg::commutator(irrep_.rep(w), t);
}

namespace {

Matrix weight_basis(const Irrep& irrep) {
  Matrix w(irrep.dim(), 0);
  for (const auto& ws : irrep.weights) {
    const Eigen::Index at = w.cols();
    w.conservativeResize(Eigen::NoChange, at + ws.basis.cols());
    w.middleCols(at, ws.basis.cols()) = ws.basis;
  }
  return w;
}

}  // namespace

QSpan q_span(const Representation& r, const Matrix& vectors, const Matrix& frame,
             const RealMatrix& g_o, const Tolerance& tol) {
  const int n = r.dim();
  const int dim = r.algebra_dim();
  if (frame.rows() != n || frame.cols() != n || vectors.rows() != n)
    throw DimensionMismatch("basis does not match representation");

  QSpan out;
  Matrix acc(0, dim);
  Matrix buffer(static_cast<Eigen::Index>(n) * n, dim);
  // With T = u_p u_q^dagger:
  //   <eta, [T, X] zeta> = <eta, u_p> <u_q, X zeta> - <eta, X u_p> <u_q, zeta>.
  const Matrix frame_h = frame.adjoint();
  std::vector<Matrix> adjoint_rep;
  for (const auto& p : r.matrices) adjoint_rep.push_back(p.adjoint());
  for (Eigen::Index e = 0; e < vectors.cols(); ++e) {
    const Vector eta = vectors.col(e);
    const Vector a = frame_h * eta;  // conj(<eta, u_p>)
    Matrix c(n, dim);                // conj(<eta, X_i u_p>)
    for (int i = 0; i < dim; ++i) c.col(i) = frame_h * (adjoint_rep[static_cast<size_t>(i)] * eta);
    for (Eigen::Index z = 0; z < vectors.cols(); ++z) {
      const Vector zeta = vectors.col(z);
      const Vector dz = frame_h * zeta;
      Matrix b(n, dim);
      for (int i = 0; i < dim; ++i) b.col(i) = frame_h * (r.matrices[static_cast<size_t>(i)] * zeta);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          buffer.row(static_cast<Eigen::Index>(p) * n + q) =
              std::conj(a[p]) * b.row(q) - dz[q] * c.row(p).conjugate();
      out.functionals += buffer.rows();
      if (g_o.cols() > 0) {
        const Matrix on_g_o = buffer * g_o.cast<cplx>();
        out.g_o_residual = std::max(out.g_o_residual, on_g_o.cwiseAbs().maxCoeff());
      }
      compress(acc, buffer);
    }
  }

  const auto decision = linalg::decide_rank(acc, tol);
  out.dim_q = decision.rank;
  out.dim_q_tight = linalg::decide_rank(acc, tol.scaled_rank(0.1)).rank;
  out.dim_q_loose = linalg::decide_rank(acc, tol.scaled_rank(10.0)).rank;
  out.span = linalg::column_basis(Matrix(acc.transpose()), tol);

  Matrix annihilator;
  if (g_o.cols() == 0)
    annihilator = Matrix::Identity(dim, dim);
  else
    annihilator = linalg::null_space(Matrix(g_o.transpose().cast<cplx>()), tol);
  out.annihilator_distance = linalg::subspace_distance(out.span, annihilator, tol);
  return out;
}

QSpan q_span(const DerivationCalculus& calc, const Tolerance& tol) {
  const int n = calc.n();
  return q_span(calc.rep(), weight_basis(calc.irrep()), Matrix::Identity(n, n), calc.ideal().g_o, tol);
}

int bimodule_span(const DerivationCalculus& calc, std::size_t budget, const Tolerance& tol) {
  const int n = calc.n();
  const int dim = calc.algebra_dim();
  const std::size_t cols = static_cast<std::size_t>(n) * n * dim;
  if (cols > budget) {
    std::ostringstream msg;
    msg << "bimodule span needs " << cols << " columns, budget is " << budget;
    throw BudgetExceeded(msg.str());
  }
  const auto& pi = calc.rep().matrices;

  // R = E_ab, S = E_cd, T = E_pq: R [pi_X, T] S = [pi_X, T]_bc E_ad, with
  //   [pi_X, E_pq]_bc = pi_X(b, p) delta_qc - delta_bp pi_X(q, c).
  // Every generator lives in the (a, d) block of Hom(g, B), so the stacked
  // matrix is block diagonal and its singular values are those of the blocks.
  Eigen::VectorXd singular;
  Matrix block(static_cast<Eigen::Index>(n) * n * n * n, dim);
  for (int a = 0; a < n; ++a)
    for (int d = 0; d < n; ++d) {
      Eigen::Index row = 0;
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q, ++row)
              for (int i = 0; i < dim; ++i) {
                const Matrix& m = pi[static_cast<size_t>(i)];
                cplx v{};
                if (q == c) v += m(b, p);
                if (b == p) v -= m(q, c);
                block(row, i) = v;
              }
      Matrix acc(0, dim);
      compress(acc, block);
      const Eigen::VectorXd s =
          acc.size() == 0 ? Eigen::VectorXd() : Eigen::VectorXd(Eigen::BDCSVD<Matrix>(acc).singularValues());
      Eigen::VectorXd grown(singular.size() + s.size());
      grown << singular, s;
      singular = std::move(grown);
    }

  const double sigma_max = singular.size() > 0 ? singular.maxCoeff() : 0.0;
  const double cutoff = std::max(tol.rank_rel * sigma_max, tol.rank_abs);
  int rank = 0;
  for (Eigen::Index i = 0; i < singular.size(); ++i) {
    if (singular[i] > cutoff) ++rank;
    if (singular[i] > cutoff / 10.0 && singular[i] <= cutoff * 10.0)
      throw RankAmbiguity("bimodule rank is ambiguous at the singular-value cutoff");
  }
  return rank;
}

std::vector<Witness> proof_witnesses(const RootSystem& rs, const DerivationCalculus& calc,
                                     const QSpan& q, const Tolerance& tol) {
  const Representation& r = calc.rep();
  const int dim = r.algebra_dim();
  const Matrix basis = weight_basis(calc.irrep());
  const auto& cartan = rs.roots.cartan;
  std::vector<Witness> out;
  constexpr double kSpanTol = 1e-8;

  for (const auto& t : rs.triples) {
    const Matrix pe = r(t.e);
    const Matrix pf = r(t.f);
    const double threshold = 1e-6 * std::max(1.0, linalg::operator_norm(pf));
    Vector xi;
    for (Eigen::Index k = 0; k < basis.cols(); ++k)
      if ((pf * basis.col(k)).norm() > threshold) {
        xi = basis.col(k);
        break;
      }
    if (xi.size() == 0) continue;
    for (int step = 0; step < r.dim(); ++step) {
      const Vector up = pe * xi;
      if (up.norm() <= threshold) break;
      xi = up / up.norm();
    }

    const Vector pf_xi = pf * xi;
    Vector phi1(dim), phi2(dim);
    for (int i = 0; i < dim; ++i) {
      const Matrix c = linalg::commutator(pe, r.matrices[static_cast<size_t>(i)]);
      phi1[i] = xi.dot(c * pf_xi);
      phi2[i] = xi.dot(c * xi);
    }

    const RealVector& alpha = rs.roots.roots[static_cast<size_t>(t.root)].values;
    auto on_h = [&](const Vector& phi) {
      Vector v(cartan.rank());
      for (int k = 0; k < cartan.rank(); ++k) v[k] = pair(phi, Element::real(cartan.basis[static_cast<size_t>(k)]));
      return v;
    };

    for (WitnessKind kind : {WitnessKind::CartanDirection, WitnessKind::LoweringDirection}) {
      Witness w;
      w.root = t.root;
      w.kind = kind;
      w.values = kind == WitnessKind::CartanDirection ? phi1 : phi2;
      const double norm = w.values.norm();
      if (norm == 0.0) {
        out.push_back(w);
        continue;
      }
      w.span_residual = linalg::distance_to_span(w.values / norm, q.span);
      const Vector h = on_h(w.values);
      double vanish = 0.0;
      for (const auto& s : rs.triples) {
        vanish = std::max(vanish, std::abs(pair(w.values, s.e)) / s.e.norm());
        if (kind == WitnessKind::CartanDirection || s.root != t.root)
          vanish = std::max(vanish, std::abs(pair(w.values, s.f)) / s.f.norm());
      }
      w.root_vector_residual = vanish / norm;
      bool ok = w.span_residual < kSpanTol && w.root_vector_residual < kSpanTol;
      if (kind == WitnessKind::CartanDirection) {
        const cplx coeff = alpha.cast<cplx>().dot(h) / alpha.squaredNorm();
        w.cartan_multiple = std::abs(coeff);
        w.cartan_residual = (h - coeff * alpha.cast<cplx>()).norm() / norm;
        ok = ok && w.cartan_residual < kSpanTol && w.cartan_multiple > tol.integrality;
      } else {
        w.cartan_residual = h.cwiseAbs().maxCoeff() / norm;
        w.target_value = pair(w.values, t.f);
        ok = ok && w.cartan_residual < kSpanTol && std::abs(w.target_value) > tol.integrality;
      }
      w.passed = ok;
      out.push_back(w);
    }
  }
  return out;
}

bool CotangentReport::witnesses_passed() const {
  return std::all_of(witnesses.begin(), witnesses.end(), [](const Witness& w) { return w.passed; });
}

CotangentReport verify_main_theorem(const RootSystem& rs, const HighestWeight& lambda,
                                    const TheoremOptions& opts) {
  IrrepOptions io = opts.irrep;
  io.tol = opts.tol;
  DerivationCalculus calc(rs, build_irrep(rs, lambda, io), opts.tol);

  CotangentReport rep;
  rep.algebra = rs.algebra.label();
  rep.labels = lambda.dynkin_labels;
  rep.dim_g = rs.algebra.dim();
  rep.dim_h = calc.n();
  rep.ideal = calc.ideal();
  rep.dim_g_o = static_cast<int>(rep.ideal.g_o.cols());
  rep.dim_g_lambda = static_cast<int>(rep.ideal.g_lambda.cols());
  rep.trivial = lambda.is_zero();
  rep.q = q_span(calc, opts.tol);

  const std::size_t cols = static_cast<std::size_t>(rep.dim_h) * rep.dim_h * rep.dim_g;
  if (opts.bimodule && cols <= opts.bimodule_budget)
    rep.dim_bimodule = bimodule_span(calc, opts.bimodule_budget, opts.tol);

  rep.witnesses = proof_witnesses(rs, calc, rep.q, opts.tol);

  std::mt19937 gen(opts.seed);
  const Matrix s = random_matrix(gen, rep.dim_h);
  const Matrix t = random_matrix(gen, rep.dim_h);
  const auto ds = calc.d(s);
  const auto dt = calc.d(t);
  const auto dst = calc.d(s * t);
  for (size_t i = 0; i < ds.size(); ++i)
    rep.leibniz_residual = std::max(rep.leibniz_residual, (dst[i] - ds[i] * t - s * dt[i]).norm());
  for (Eigen::Index y = 0; y < rep.ideal.g_o.cols(); ++y)
    rep.d_on_g_o_residual = std::max(
        rep.d_on_g_o_residual, calc.d(t, Element::real(rep.ideal.g_o.col(y))).norm());

  rep.verdict = rep.q.dim_q == rep.dim_g_lambda;
  if (rep.dim_bimodule)
    rep.verdict = rep.verdict && *rep.dim_bimodule == rep.dim_h * rep.dim_h * rep.dim_g_lambda;
  return rep;
}

}  // namespace orbitcalc
