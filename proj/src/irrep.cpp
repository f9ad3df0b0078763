#include "orbitcalc/irrep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/SparseCore>

#include "orbitcalc/errors.hpp"

namespace orbitcalc {

bool HighestWeight::is_zero() const {
  return std::all_of(dynkin_labels.begin(), dynkin_labels.end(), [](int n) { return n == 0; });
}

void HighestWeight::validate(int rank) const {
  if (static_cast<int>(dynkin_labels.size()) != rank) {
    std::ostringstream msg;
    msg << "highest weight has " << dynkin_labels.size() << " labels but the algebra has rank "
        << rank;
    throw InvalidWeight(msg.str());
  }
  for (int n : dynkin_labels)
    if (n < 0) throw InvalidWeight("highest weight labels must be nonnegative integers");
}

namespace {

std::string format_labels(const std::vector<int>& v) {
  std::ostringstream s;
  s << "[";
  for (size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << "]";
  return s.str();
}

/// (defining)^a (x) (conjugate defining)^b in a tensor basis of weight vectors.
class TensorPower {
 public:
  TensorPower(const Representation& base, int defining, int conjugate)
      : base_(base), conj_(conjugate_rep(base)), n_(base.dim()), a_(defining), t_(defining + conjugate) {
    size_ = 1;
    for (int p = 0; p < t_; ++p) size_ *= static_cast<Eigen::Index>(n_);
    strides_.assign(static_cast<size_t>(t_), 1);
    for (int p = t_ - 2; p >= 0; --p)
      strides_[static_cast<size_t>(p)] = strides_[static_cast<size_t>(p + 1)] * n_;
  }

  Eigen::Index size() const { return size_; }

  int digit(Eigen::Index index, int position) const {
    return static_cast<int>((index / strides_[static_cast<size_t>(position)]) % n_);
  }

  /// Factor matrices of w for the defining and the conjugate positions.
  std::pair<Matrix, Matrix> factors(const Element& w) const { return {base_(w), conj_(w)}; }

  Vector apply(const std::pair<Matrix, Matrix>& ops, const Vector& v) const {
    Vector out = Vector::Zero(size_);
    for (int p = 0; p < t_; ++p) {
      const Matrix& m = p < a_ ? ops.first : ops.second;
      const Eigen::Index stride = strides_[static_cast<size_t>(p)];
      for (Eigen::Index idx = 0; idx < size_; ++idx) {
        const cplx x = v[idx];
        if (x == cplx{}) continue;
        const int d = digit(idx, p);
        for (int e = 0; e < n_; ++e) {
          const cplx c = m(e, d);
          if (c != cplx{}) out[idx + (e - d) * stride] += c * x;
        }
      }
    }
    return out;
  }

 private:
  Representation base_;
  Representation conj_;
  int n_;
  int a_;
  int t_;
  Eigen::Index size_ = 1;
  std::vector<Eigen::Index> strides_;
};

using Labels = std::vector<int>;

// [pi_i, pi_j] - pi([X_i, X_j]) applied to a few fixed random unit vectors.
double homomorphism_probe(const Representation& r, const LieAlgebra& a) {
  const int n = r.dim(), g = a.dim();
  std::mt19937 gen(7);
  std::normal_distribution<double> d;
  Matrix probes(n, 2);
  for (Eigen::Index c = 0; c < probes.cols(); ++c) {
    for (int i = 0; i < n; ++i) probes(i, c) = cplx{d(gen), d(gen)};
    probes.col(c).normalize();
  }
  std::vector<Matrix> images;
  for (const auto& m : r.matrices) images.push_back(m * probes);
  double worst = 0.0;
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j) {
      Matrix res = r.matrices[static_cast<size_t>(i)] * images[static_cast<size_t>(j)] -
                   r.matrices[static_cast<size_t>(j)] * images[static_cast<size_t>(i)];
      for (int k = 0; k < g; ++k) {
        const double c = a.structure_constant(i, j, k);
        if (c != 0.0) res -= c * images[static_cast<size_t>(k)];
      }
      worst = std::max(worst, res.norm());
    }
  return worst;
}

Labels add_labels(Labels a, const Labels& b, int sign) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
  return a;
}

}  // namespace

bool lattice_contains(const std::vector<std::vector<int>>& generators, const std::vector<int>& target) {
  const size_t dim = target.size();
  std::vector<std::vector<long long>> rows;
  for (const auto& g : generators) rows.emplace_back(g.begin(), g.end());

  // Integer row echelon form by repeated Euclidean reduction.
  std::vector<std::pair<size_t, size_t>> pivots;  // (column, row)
  size_t next = 0;
  for (size_t col = 0; col < dim && next < rows.size(); ++col) {
    for (;;) {
      size_t best = rows.size();
      for (size_t r = next; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (best == rows.size() || std::llabs(rows[r][col]) < std::llabs(rows[best][col])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[next], rows[best]);
      bool reduced = true;
      for (size_t r = next + 1; r < rows.size(); ++r) {
        const long long q = rows[r][col] / rows[next][col];
        for (size_t c = 0; c < dim; ++c) rows[r][c] -= q * rows[next][c];
        if (rows[r][col] != 0) reduced = false;
      }
      if (reduced) {
        pivots.emplace_back(col, next++);
        break;
      }
    }
  }

  std::vector<long long> rest(target.begin(), target.end());
  size_t p = 0;
  for (size_t col = 0; col < dim; ++col) {
    if (p < pivots.size() && pivots[p].first == col) {
      const auto& row = rows[pivots[p].second];
      if (rest[col] % row[col] != 0) return false;
      const long long q = rest[col] / row[col];
      for (size_t c = 0; c < dim; ++c) rest[c] -= q * row[c];
      ++p;
    } else if (rest[col] != 0) {
      return false;
    }
  }
  return true;
}

std::vector<WeightSpace> weight_decomposition(const Representation& r, const CartanSubalgebra& h,
                                              const RealMatrix& coroots, const Tolerance& tol) {
  std::vector<Matrix> ops;
  for (const auto& x : h.basis) ops.push_back(cplx{0.0, -1.0} * r(Element::real(x)));
  std::vector<WeightSpace> out;
  for (auto& s : linalg::joint_eigenspaces(ops, tol)) {
    WeightSpace w;
    w.weight = s.eigenvalues;
    const RealVector dyn = coroots * w.weight;
    for (Eigen::Index j = 0; j < dyn.size(); ++j) {
      const double rounded = std::round(dyn[j]);
      if (std::abs(dyn[j] - rounded) > tol.integrality) {
        std::ostringstream msg;
        msg << "weight with non-integral label " << dyn[j] << " on simple coroot " << j;
        throw InternalError(msg.str());
      }
      w.dynkin.push_back(static_cast<int>(rounded));
    }
    w.basis = std::move(s.basis);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(),
            [](const WeightSpace& x, const WeightSpace& y) { return x.dynkin > y.dynkin; });
  return out;
}

std::vector<WeightSpace> weight_decomposition(const Representation& r, const RootSystem& rs,
                                              const Tolerance& tol) {
  auto spaces = weight_decomposition(r, rs.roots.cartan, rs.coroots, tol);
  const RealVector& phi = rs.roots.positivity_weights;
  std::stable_sort(spaces.begin(), spaces.end(), [&](const WeightSpace& x, const WeightSpace& y) {
    return phi.dot(x.weight) > phi.dot(y.weight) + tol.cluster_rel;
  });
  return spaces;
}

int highest_weight_space_dim(const Representation& r, const RootSystem& rs, const Tolerance& tol) {
  const int n = r.dim();
  const int rank = rs.roots.rank();
  Matrix stacked(static_cast<Eigen::Index>(n) * rank, n);
  for (int j = 0; j < rank; ++j) stacked.middleRows(j * n, n) = r(rs.simple_triple(j).e);
  return static_cast<int>(linalg::null_space(stacked, tol).cols());
}

Irrep build_irrep(const RootSystem& rs, const HighestWeight& lambda, const IrrepOptions& opts) {
  const Tolerance& tol = opts.tol;
  const int rank = rs.roots.rank();
  lambda.validate(rank);
  const LieAlgebra& a = rs.algebra;

  // Defining representation in a basis of weight vectors.
  const Representation def = defining_representation(a);
  const auto def_weights = weight_decomposition(def, rs, tol);
  Matrix u(def.dim(), 0);
  std::vector<Labels> basis_labels;
  std::vector<Labels> generators;
  for (const auto& w : def_weights) {
    for (Eigen::Index c = 0; c < w.basis.cols(); ++c) {
      u.conservativeResize(def.dim(), u.cols() + 1);
      u.col(u.cols() - 1) = w.basis.col(c);
      basis_labels.push_back(w.dynkin);
    }
    generators.push_back(w.dynkin);
  }
  const Representation base = change_basis(def, u);

  if (!lattice_contains(generators, lambda.dynkin_labels)) {
    std::ostringstream msg;
    msg << "unreachable weight " << format_labels(lambda.dynkin_labels)
        << ": not in the lattice generated by the weights of the defining representation {";
    for (size_t i = 0; i < generators.size(); ++i) msg << (i ? " " : "") << format_labels(generators[i]);
    msg << "} of " << a.label() << " (for so(n) this excludes spin representations)";
    throw UnreachableWeight(msg.str());
  }

  std::vector<std::pair<Matrix, Matrix>> raise_ops, lower_ops;
  std::vector<Labels> simple_labels;
  for (int j = 0; j < rank; ++j) {
    Labels alpha(static_cast<size_t>(rank));
    for (int k = 0; k < rank; ++k) alpha[static_cast<size_t>(k)] = rs.cartan_matrix(j, k);
    simple_labels.push_back(alpha);
  }

  const auto n0 = static_cast<std::size_t>(base.dim());
  for (int total = 0;; ++total) {
    std::size_t ambient = 1;
    for (int p = 0; p < total; ++p) ambient *= n0;
    if (ambient > opts.max_tensor_dim) {
      std::ostringstream msg;
      msg << "highest weight " << format_labels(lambda.dynkin_labels)
          << " not found in tensor powers up to dimension " << opts.max_tensor_dim;
      throw BudgetExceeded(msg.str());
    }
    for (int defining = total; defining >= 0; --defining) {
      const TensorPower tp(base, defining, total - defining);
      raise_ops.clear();
      lower_ops.clear();
      for (int j = 0; j < rank; ++j) {
        raise_ops.push_back(tp.factors(rs.simple_triple(j).e));
        lower_ops.push_back(tp.factors(rs.simple_triple(j).f));
      }

      auto labels_of = [&](Eigen::Index idx) {
        Labels l(static_cast<size_t>(rank), 0);
        for (int p = 0; p < total; ++p)
          l = add_labels(l, basis_labels[static_cast<size_t>(tp.digit(idx, p))], p < defining ? 1 : -1);
        return l;
      };
      std::map<Labels, std::vector<Eigen::Index>> by_weight;
      for (Eigen::Index idx = 0; idx < tp.size(); ++idx) by_weight[labels_of(idx)].push_back(idx);
      const auto top = by_weight.find(lambda.dynkin_labels);
      if (top == by_weight.end()) continue;
      const auto& cols = top->second;

      // Raising operators map weight lambda into weight lambda + alpha_j.
      std::vector<Matrix> blocks;
      Eigen::Index rows = 0;
      for (int j = 0; j < rank; ++j) {
        const auto target = by_weight.find(add_labels(lambda.dynkin_labels, simple_labels[static_cast<size_t>(j)], 1));
        if (target == by_weight.end()) continue;
        std::map<Eigen::Index, Eigen::Index> row_of;
        for (size_t k = 0; k < target->second.size(); ++k)
          row_of[target->second[k]] = static_cast<Eigen::Index>(k);
        Matrix block = Matrix::Zero(static_cast<Eigen::Index>(target->second.size()),
                                    static_cast<Eigen::Index>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c) {
          Vector e = Vector::Zero(tp.size());
          e[cols[c]] = 1.0;
          const Vector image = tp.apply(raise_ops[static_cast<size_t>(j)], e);
          for (const auto& [idx, row] : row_of) block(row, static_cast<Eigen::Index>(c)) = image[idx];
        }
        rows += block.rows();
        blocks.push_back(std::move(block));
      }
      Matrix system(rows, static_cast<Eigen::Index>(cols.size()));
      Eigen::Index offset = 0;
      for (const auto& b : blocks) {
        system.middleRows(offset, b.rows()) = b;
        offset += b.rows();
      }
      const Matrix kernel = linalg::null_space(system, tol);
      if (kernel.cols() == 0) continue;

      // Deterministic choice: project the canonical vector with the largest overlap.
      Eigen::Index best = 0;
      double best_norm = -1.0;
      for (Eigen::Index k = 0; k < kernel.rows(); ++k) {
        const double nrm = kernel.row(k).norm();
        if (nrm > best_norm + 1e-12) {
          best_norm = nrm;
          best = k;
        }
      }
      Vector coeffs = kernel * kernel.row(best).adjoint();
      coeffs.normalize();
      Vector xi = Vector::Zero(tp.size());
      for (size_t c = 0; c < cols.size(); ++c) xi[cols[c]] = coeffs[static_cast<Eigen::Index>(c)];

      // Close under simple lowering operators, orthonormalising within weight spaces.
      Matrix q(tp.size(), 0);
      std::map<Labels, std::vector<Eigen::Index>> columns_by_weight;
      std::vector<Labels> col_weight;
      auto add_vector = [&](const Vector& v, const Labels& w) {
        // Columns are unit vectors, so images below the residual tolerance are rounding noise.
        const double norm0 = v.norm();
        if (norm0 <= tol.residual) return false;
        Vector r = v;
        auto& same = columns_by_weight[w];
        for (int pass = 0; pass < 2; ++pass)
          for (Eigen::Index k : same) r -= q.col(k) * q.col(k).dot(r);
        const double norm = r.norm();
        if (norm <= tol.rank_rel * norm0) return false;
        q.conservativeResize(tp.size(), q.cols() + 1);
        q.col(q.cols() - 1) = r / norm;
        same.push_back(q.cols() - 1);
        col_weight.push_back(w);
        return true;
      };
      add_vector(xi, lambda.dynkin_labels);
      std::vector<Eigen::Index> frontier{0};
      while (!frontier.empty()) {
        std::vector<Eigen::Index> next;
        for (Eigen::Index k : frontier) {
          for (int j = 0; j < rank; ++j) {
            const Vector v = tp.apply(lower_ops[static_cast<size_t>(j)], q.col(k));
            const Labels w = add_labels(col_weight[static_cast<size_t>(k)], simple_labels[static_cast<size_t>(j)], -1);
            if (add_vector(v, w)) next.push_back(q.cols() - 1);
          }
        }
        frontier = std::move(next);
      }

      Irrep irrep;
      irrep.highest_weight = lambda;
      irrep.defining_factors = defining;
      irrep.conjugate_factors = total - defining;
      // Each column is supported on the tensor indices of one weight.
      const Eigen::SparseMatrix<cplx> qs = q.sparseView(cplx{0.0}, 0.0);
      for (int i = 0; i < a.dim(); ++i) {
        const auto ops = tp.factors(Element::basis(a.dim(), i));
        Matrix image(tp.size(), q.cols());
        for (Eigen::Index c = 0; c < q.cols(); ++c) image.col(c) = tp.apply(ops, q.col(c));
        irrep.rep.matrices.push_back(qs.adjoint() * image);
      }
      irrep.highest_vector = Vector::Unit(q.cols(), 0);

      const double hom = homomorphism_probe(irrep.rep, a);
      const double uni = unitarity_residual(irrep.rep);
      const int hw_dim = highest_weight_space_dim(irrep.rep, rs, tol);
      if (hom > 1e-8 || uni > tol.residual || hw_dim != 1) {
        std::ostringstream msg;
        msg << "irrep construction for " << format_labels(lambda.dynkin_labels)
            << " failed checks: homomorphism residual " << hom << ", unitarity residual " << uni
            << ", highest-weight space dimension " << hw_dim;
        throw InternalError(msg.str());
      }
      irrep.weights = weight_decomposition(irrep.rep, rs, tol);
      if (irrep.weights.empty() || irrep.weights.front().dynkin != lambda.dynkin_labels ||
          irrep.weights.front().multiplicity() != 1) {
        throw InternalError("highest weight of the constructed representation does not match " +
                            format_labels(lambda.dynkin_labels));
      }
      return irrep;
    }
  }
}

}  // namespace orbitcalc
