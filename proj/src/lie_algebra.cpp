#include "orbitcalc/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

#include "orbitcalc/errors.hpp"

namespace orbitcalc {

LieAlgebra::LieAlgebra(std::string label, std::vector<std::string> basis_labels,
                       const std::vector<Triplet>& structure_constants,
                       std::vector<Matrix> defining_rep, std::vector<RealVector> default_cartan)
    : label_(std::move(label)),
      dim_(static_cast<int>(basis_labels.size())),
      basis_labels_(std::move(basis_labels)),
      defining_rep_(std::move(defining_rep)),
      default_cartan_(std::move(default_cartan)) {
  if (dim_ <= 0) throw SpecError("Lie algebra dimension must be positive");
  if (static_cast<int>(defining_rep_.size()) != dim_) {
    std::ostringstream msg;
    msg << "defining_rep has " << defining_rep_.size() << " matrices, expected " << dim_;
    throw SpecError(msg.str());
  }
  const Eigen::Index n = defining_rep_.front().rows();
  for (const auto& m : defining_rep_)
    if (m.rows() != n || m.cols() != n || n == 0)
      throw SpecError("defining_rep matrices must be square and of equal nonzero size");

  ad_.assign(static_cast<size_t>(dim_), RealMatrix::Zero(dim_, dim_));
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& t : structure_constants) {
    if (t.i < 0 || t.j < 0 || t.k < 0 || t.i >= dim_ || t.j >= dim_ || t.k >= dim_) {
      std::ostringstream msg;
      msg << "structure constant index out of range: [" << t.i << "," << t.j << "," << t.k << "]";
      throw SpecError(msg.str());
    }
    if (!std::isfinite(t.value)) throw SpecError("structure constant is not finite");
    if (!seen.insert({t.i, t.j, t.k}).second) {
      std::ostringstream msg;
      msg << "duplicate structure constant [" << t.i << "," << t.j << "," << t.k << "]";
      throw SpecError(msg.str());
    }
    ad_[t.i](t.k, t.j) = t.value;
  }
  for (const auto& h : default_cartan_)
    if (h.size() != dim_) throw SpecError("default Cartan element has wrong dimension");
}

LieAlgebra LieAlgebra::from_matrices(std::string label, std::vector<std::string> basis_labels,
                                     std::vector<Matrix> basis,
                                     std::vector<RealVector> default_cartan) {
  const int dim = static_cast<int>(basis.size());
  if (dim == 0 || static_cast<int>(basis_labels.size()) != dim)
    throw SpecError("basis and labels must be nonempty and of equal length");
  const Eigen::Index n = basis.front().rows();
  const Eigen::Index n2 = n * n;

  // Real coordinates of a complex matrix: real parts stacked on imaginary parts.
  auto flatten = [&](const Matrix& m) {
    RealVector v(2 * n2);
    for (Eigen::Index c = 0; c < n; ++c)
      for (Eigen::Index r = 0; r < n; ++r) {
        v[c * n + r] = m(r, c).real();
        v[n2 + c * n + r] = m(r, c).imag();
      }
    return v;
  };
  RealMatrix b(2 * n2, dim);
  for (int i = 0; i < dim; ++i) b.col(i) = flatten(basis[static_cast<size_t>(i)]);
  Eigen::ColPivHouseholderQR<RealMatrix> qr(b);
  if (qr.rank() != dim) throw SpecError("matrix basis is linearly dependent over R");

  std::vector<Triplet> triplets;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      const RealVector rhs = flatten(linalg::commutator(basis[static_cast<size_t>(i)],
                                                         basis[static_cast<size_t>(j)]));
      const RealVector c = qr.solve(rhs);
      if ((b * c - rhs).norm() > 1e-9 * std::max(1.0, rhs.norm()))
        throw SpecError("matrix basis is not closed under the commutator");
      for (int k = 0; k < dim; ++k)
        if (std::abs(c[k]) > 1e-14) triplets.push_back({i, j, k, c[k]});
    }
  return LieAlgebra(std::move(label), std::move(basis_labels), triplets, std::move(basis),
                    std::move(default_cartan));
}

std::vector<LieAlgebra::Triplet> LieAlgebra::structure_triplets() const {
  std::vector<Triplet> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (ad_[i](k, j) != 0.0) out.push_back({i, j, k, ad_[i](k, j)});
  return out;
}

Matrix LieAlgebra::ad(const Element& w) const {
  if (w.dim() != dim_) throw DimensionMismatch("element dimension does not match algebra");
  Matrix m = Matrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (w.coeffs[i] != cplx{}) m += w.coeffs[i] * ad_[i].cast<cplx>();
  return m;
}

Matrix LieAlgebra::represent(const Element& w) const {
  if (w.dim() != dim_) throw DimensionMismatch("element dimension does not match algebra");
  const Eigen::Index n = defining_dim();
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < dim_; ++i)
    if (w.coeffs[i] != cplx{}) m += w.coeffs[i] * defining_rep_[static_cast<size_t>(i)];
  return m;
}

KillingForm::KillingForm(const LieAlgebra& a) {
  const int n = a.dim();
  gram_.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) gram_(i, j) = gram_(j, i) = -(a.ad(i) * a.ad(j)).trace();
  Eigen::LLT<RealMatrix> llt(gram_);
  positive_definite_ = llt.info() == Eigen::Success;
  if (positive_definite_) {
    lt_ = llt.matrixU();
    lt_inv_ = lt_.inverse();
  }
}

cplx KillingForm::operator()(const Element& w, const Element& z) const {
  if (w.dim() != dim() || z.dim() != dim())
    throw DimensionMismatch("element dimension does not match Killing form");
  return w.coeffs.transpose() * gram_.cast<cplx>() * z.coeffs;
}

Element bracket(const LieAlgebra& a, const Element& w, const Element& z) {
  if (w.dim() != a.dim() || z.dim() != a.dim())
    throw DimensionMismatch("bracket operands do not belong to this algebra");
  return Element(a.ad(w) * z.coeffs);
}

Element star(const Element& w) { return Element(-w.coeffs.conjugate()); }

Element theta(const Element& w) { return Element(w.coeffs.conjugate()); }

cplx killing(const LieAlgebra& a, const Element& w, const Element& z) {
  return KillingForm(a)(w, z);
}

cplx killing(const KillingForm& kil, const Element& w, const Element& z) { return kil(w, z); }

bool AlgebraReport::all_passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
}

const CheckItem* AlgebraReport::find(const std::string& name) const {
  for (const auto& c : items)
    if (c.name == name) return &c;
  return nullptr;
}

AlgebraReport check_algebra(const LieAlgebra& a, const Tolerance& tol) {
  AlgebraReport report;
  const int n = a.dim();
  auto add = [&](std::string name, double residual, bool passed, std::string detail = {}) {
    report.items.push_back({std::move(name), passed, residual, std::move(detail)});
  };

  double anti = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        anti = std::max(anti, std::abs(a.structure_constant(i, j, k) + a.structure_constant(j, i, k)));
  add("antisymmetry", anti, anti <= tol.residual);

  double jacobi = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // [[X_i,X_j],X_k] = -ad_k [X_i,X_j]
        const RealVector r = a.ad(k) * a.ad(i).col(j) + a.ad(i) * a.ad(j).col(k) +
                             a.ad(j) * a.ad(k).col(i);
        jacobi = std::max(jacobi, r.norm());
      }
  add("jacobi", jacobi, jacobi <= tol.residual);

  const KillingForm kil(a);
  const RealMatrix& g = kil.gram();
  const double asym = (g - g.transpose()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<RealMatrix> eig(0.5 * (g + g.transpose()));
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  {
    std::ostringstream d;
    d << "eigenvalue range [" << lo << ", " << hi << "]";
    add("killing_definite", asym, hi > 0.0 && lo > tol.residual * hi && asym <= tol.residual,
        d.str());
  }

  double inv = 0.0;
  for (int z = 0; z < n; ++z)
    inv = std::max(inv, (a.ad(z).transpose() * g + g * a.ad(z)).cwiseAbs().maxCoeff());
  add("ad_invariance", inv, inv <= tol.residual);

  const auto& rep = a.defining_rep();
  double hom = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Matrix lhs = linalg::commutator(rep[static_cast<size_t>(i)], rep[static_cast<size_t>(j)]);
      const Matrix rhs = a.represent(bracket(a, Element::basis(n, i), Element::basis(n, j)));
      hom = std::max(hom, (lhs - rhs).norm());
    }
  add("rep_homomorphism", hom, hom <= tol.residual);

  double skew = 0.0;
  double star_res = 0.0;
  for (int i = 0; i < n; ++i) {
    const Matrix& m = rep[static_cast<size_t>(i)];
    skew = std::max(skew, (m + m.adjoint()).norm());
    const Element w = cplx{1.0, 2.0} * Element::basis(n, i);
    star_res = std::max(star_res, (a.represent(w).adjoint() - a.represent(star(w))).norm());
  }
  add("rep_skew_adjoint", skew, skew <= tol.residual);
  add("rep_star", star_res, star_res <= tol.residual);

  const Eigen::Index dn = a.defining_dim();
  RealMatrix flat(dn * dn * 2, n);
  for (int i = 0; i < n; ++i) {
    const Eigen::Map<const Vector> m(rep[static_cast<size_t>(i)].data(), dn * dn);
    flat.col(i) << m.real(), m.imag();
  }
  const auto rank = linalg::decide_rank(flat, tol);
  {
    std::ostringstream d;
    d << "rank " << rank.rank << " of " << n;
    add("rep_faithful", static_cast<double>(n - rank.rank), rank.rank == n, d.str());
  }
  return report;
}

namespace algebras {

namespace {

Matrix unit(int n, int r, int c) {
  Matrix m = Matrix::Zero(n, n);
  m(r, c) = 1.0;
  return m;
}

std::string pair_label(char prefix, int j, int k) {
  return std::string(1, prefix) + std::to_string(j) + std::to_string(k);
}

}  // namespace

LieAlgebra su(int n) {
  if (n < 2 || n > 6) throw SpecError("su(n) is built in for 2 <= n <= 6");
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      basis.push_back(0.5 * kI * (unit(n, j, k) + unit(n, k, j)));
      labels.push_back(pair_label('S', j, k));
      basis.push_back(0.5 * (unit(n, j, k) - unit(n, k, j)));
      labels.push_back(pair_label('A', j, k));
    }
  const int off_diagonal = static_cast<int>(basis.size());
  std::vector<RealVector> cartan;
  for (int k = 0; k + 1 < n; ++k) {
    basis.push_back(0.5 * kI * (unit(n, k, k) - unit(n, k + 1, k + 1)));
    labels.push_back("D" + std::to_string(k));
  }
  const int dim = static_cast<int>(basis.size());
  for (int k = 0; k + 1 < n; ++k) {
    RealVector h = RealVector::Zero(dim);
    h[off_diagonal + k] = 1.0;
    cartan.push_back(h);
  }
  return LieAlgebra::from_matrices("su" + std::to_string(n), std::move(labels), std::move(basis),
                                   std::move(cartan));
}

LieAlgebra so(int n) {
  if (n < 3 || n > 6) throw SpecError("so(n) is built in for 3 <= n <= 6");
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      basis.push_back(unit(n, j, k) - unit(n, k, j));
      labels.push_back(pair_label('L', j, k));
      pairs.emplace_back(j, k);
    }
  const int dim = static_cast<int>(basis.size());
  std::vector<RealVector> cartan;
  for (int m = 0; 2 * m + 1 < n; ++m) {
    const auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(2 * m, 2 * m + 1));
    RealVector h = RealVector::Zero(dim);
    h[it - pairs.begin()] = 1.0;
    cartan.push_back(h);
  }
  return LieAlgebra::from_matrices("so" + std::to_string(n), std::move(labels), std::move(basis),
                                   std::move(cartan));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const int da = a.dim(), db = b.dim();
  const Eigen::Index na = a.defining_dim(), nb = b.defining_dim();
  std::vector<std::string> labels;
  const bool clash = a.label() == b.label();
  for (const auto& l : a.basis_labels()) labels.push_back((clash ? "1." : a.label() + ".") + l);
  for (const auto& l : b.basis_labels()) labels.push_back((clash ? "2." : b.label() + ".") + l);

  std::vector<LieAlgebra::Triplet> triplets;
  for (const auto& t : a.structure_triplets()) triplets.push_back(t);
  for (const auto& t : b.structure_triplets())
    triplets.push_back({t.i + da, t.j + da, t.k + da, t.value});

  std::vector<Matrix> rep;
  for (const auto& m : a.defining_rep()) {
    Matrix big = Matrix::Zero(na + nb, na + nb);
    big.topLeftCorner(na, na) = m;
    rep.push_back(big);
  }
  for (const auto& m : b.defining_rep()) {
    Matrix big = Matrix::Zero(na + nb, na + nb);
    big.bottomRightCorner(nb, nb) = m;
    rep.push_back(big);
  }

  std::vector<RealVector> cartan;
  if (!a.default_cartan().empty() && !b.default_cartan().empty()) {
    for (const auto& h : a.default_cartan()) {
      RealVector v = RealVector::Zero(da + db);
      v.head(da) = h;
      cartan.push_back(v);
    }
    for (const auto& h : b.default_cartan()) {
      RealVector v = RealVector::Zero(da + db);
      v.tail(db) = h;
      cartan.push_back(v);
    }
  }
  return LieAlgebra(a.label() + "+" + b.label(), std::move(labels), triplets, std::move(rep),
                    std::move(cartan));
}

LieAlgebra by_name(const std::string& name) {
  const auto plus = name.find('+');
  if (plus != std::string::npos)
    return direct_sum(by_name(name.substr(0, plus)), by_name(name.substr(plus + 1)));
  if (name.size() >= 3 && (name.rfind("su", 0) == 0 || name.rfind("so", 0) == 0)) {
    int n = 0;
    try {
      size_t used = 0;
      n = std::stoi(name.substr(2), &used);
      if (used != name.size() - 2) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n > 0) return name[1] == 'u' ? su(n) : so(n);
  }
  throw SpecError("unknown built-in algebra '" + name + "'");
}

}  // namespace algebras
}  // namespace orbitcalc
