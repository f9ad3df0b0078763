#include "orbitcalc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "orbitcalc/errors.hpp"

namespace orbitcalc::oracles {

WeightPairing::WeightPairing(const RootDatum& rd, const KillingForm& kil) {
  const RealMatrix b = rd.cartan.matrix();
  const RealMatrix gram_h = b.transpose() * kil.gram() * b;
  inverse_gram_ = gram_h.inverse();
}

WeylVector weyl_vector(const RootDatum& rd) {
  RealVector rho = RealVector::Zero(rd.rank());
  for (int p : rd.positive) rho += rd.roots[static_cast<size_t>(p)].values;
  return {0.5 * rho};
}

namespace {

const RealVector& simple_root(const RootDatum& rd, int j) {
  return rd.roots[static_cast<size_t>(rd.simple[static_cast<size_t>(j)])].values;
}

}  // namespace

Eigen::MatrixXi cartan_matrix(const RootDatum& rd, const KillingForm& kil) {
  const WeightPairing pair(rd, kil);
  const int r = rd.rank();
  Eigen::MatrixXi a(r, r);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k)
      a(j, k) = static_cast<int>(std::lround(pair.coroot(simple_root(rd, j), simple_root(rd, k))));
  return a;
}

RealVector weight_from_labels(const RootDatum& rd, const KillingForm& kil,
                              const std::vector<int>& labels) {
  const WeightPairing pair(rd, kil);
  const int r = rd.rank();
  if (static_cast<int>(labels.size()) != r) throw InvalidWeight("label count does not match rank");
  // Row j: the linear functional mu -> <mu, alpha_j^vee>.
  RealMatrix m(r, r);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) {
      RealVector e = RealVector::Zero(r);
      e[k] = 1.0;
      m(j, k) = pair.coroot(e, simple_root(rd, j));
    }
  RealVector rhs(r);
  for (int j = 0; j < r; ++j) rhs[j] = labels[static_cast<size_t>(j)];
  return m.fullPivLu().solve(rhs);
}

long weyl_dimension(const RootDatum& rd, const KillingForm& kil, const HighestWeight& lambda) {
  lambda.validate(rd.rank());
  const WeightPairing pair(rd, kil);
  const RealVector rho = weyl_vector(rd).rho;
  const RealVector shifted = weight_from_labels(rd, kil, lambda.dynkin_labels) + rho;
  double value = 1.0;
  for (int p : rd.positive) {
    const RealVector& alpha = rd.roots[static_cast<size_t>(p)].values;
    value *= pair(shifted, alpha) / pair(rho, alpha);
  }
  const double rounded = std::round(value);
  if (std::abs(value - rounded) > 1e-6 || rounded < 1.0) {
    std::ostringstream msg;
    msg << "Weyl dimension " << value << " is not a positive integer";
    throw InternalError(msg.str());
  }
  return static_cast<long>(rounded);
}

std::map<std::vector<int>, int> freudenthal_multiplicities(const RootDatum& rd,
                                                           const KillingForm& kil,
                                                           const HighestWeight& lambda) {
  const int r = rd.rank();
  lambda.validate(r);
  const WeightPairing pair(rd, kil);
  const Eigen::MatrixXi cm = cartan_matrix(rd, kil);

  using Key = std::vector<int>;
  // Fundamental weights as columns, so a Dynkin-labelled weight maps to h-coordinates.
  RealMatrix omega(r, r);
  for (int j = 0; j < r; ++j) {
    Key e(static_cast<size_t>(r), 0);
    e[static_cast<size_t>(j)] = 1;
    omega.col(j) = weight_from_labels(rd, kil, e);
  }
  auto to_h = [&](const Key& k) {
    RealVector v(r);
    for (int j = 0; j < r; ++j) v[j] = k[static_cast<size_t>(j)];
    return RealVector(omega * v);
  };

  struct PositiveRoot {
    Key labels;
    RealVector h;
    int height;
  };
  std::vector<PositiveRoot> positives;
  for (size_t p = 0; p < rd.positive.size(); ++p) {
    const auto& coords = rd.simple_coordinates[p];
    Key labels(static_cast<size_t>(r), 0);
    int height = 0;
    for (int j = 0; j < r; ++j) {
      height += coords[static_cast<size_t>(j)];
      for (int k = 0; k < r; ++k) labels[static_cast<size_t>(k)] += coords[static_cast<size_t>(j)] * cm(j, k);
    }
    positives.push_back({labels, rd.roots[static_cast<size_t>(rd.positive[p])].values, height});
  }

  const RealVector rho = weyl_vector(rd).rho;
  const RealVector top = to_h(lambda.dynkin_labels) + rho;
  const double top_norm = pair(top, top);

  std::map<Key, int> mult;
  std::map<Key, int> level_of;
  mult[lambda.dynkin_labels] = 1;
  level_of[lambda.dynkin_labels] = 0;
  std::vector<Key> current{lambda.dynkin_labels};
  for (int level = 1; !current.empty(); ++level) {
    std::set<Key> candidates;
    for (const auto& mu : current)
      for (int j = 0; j < r; ++j) {
        Key next = mu;
        for (int k = 0; k < r; ++k) next[static_cast<size_t>(k)] -= cm(j, k);
        candidates.insert(next);
      }
    std::vector<Key> found;
    for (const auto& mu : candidates) {
      const RealVector mu_h = to_h(mu);
      double numerator = 0.0;
      for (const auto& alpha : positives) {
        Key shifted = mu;
        for (int step = 1; step * alpha.height <= level; ++step) {
          for (int k = 0; k < r; ++k) shifted[static_cast<size_t>(k)] += alpha.labels[static_cast<size_t>(k)];
          const auto it = mult.find(shifted);
          if (it == mult.end()) continue;
          numerator += 2.0 * it->second * pair(to_h(shifted), alpha.h);
        }
      }
      const RealVector shifted_rho = mu_h + rho;
      const double denominator = top_norm - pair(shifted_rho, shifted_rho);
      const double scale = std::max(1.0, std::abs(top_norm));
      double m = 0.0;
      if (std::abs(denominator) <= 1e-9 * scale) {
        if (std::abs(numerator) > 1e-6 * scale)
          throw InternalError("Freudenthal denominator vanishes at a weight with nonzero numerator");
      } else {
        m = numerator / denominator;
      }
      const double rounded = std::round(m);
      if (std::abs(m - rounded) > 1e-6 || rounded < 0) {
        std::ostringstream msg;
        msg << "Freudenthal multiplicity " << m << " is not a nonnegative integer";
        throw InternalError(msg.str());
      }
      if (rounded > 0) {
        mult[mu] = static_cast<int>(rounded);
        found.push_back(mu);
      }
    }
    current = std::move(found);
  }
  return mult;
}

std::vector<std::vector<int>> positive_roots_from_cartan(const Eigen::MatrixXi& cartan) {
  const int r = static_cast<int>(cartan.rows());
  using Key = std::vector<int>;
  std::set<Key> all;
  std::vector<Key> current;
  for (int j = 0; j < r; ++j) {
    Key e(static_cast<size_t>(r), 0);
    e[static_cast<size_t>(j)] = 1;
    current.push_back(e);
    all.insert(e);
  }
  while (!current.empty()) {
    std::set<Key> next;
    for (const auto& beta : current) {
      for (int i = 0; i < r; ++i) {
        // p: how far the alpha_i-string extends downward from beta.
        int p = 0;
        Key down = beta;
        for (;;) {
          down[static_cast<size_t>(i)] -= 1;
          if (!all.count(down)) break;
          ++p;
        }
        int pairing = 0;  // <beta, alpha_i^vee>
        for (int j = 0; j < r; ++j) pairing += beta[static_cast<size_t>(j)] * cartan(j, i);
        if (p - pairing > 0) {
          Key up = beta;
          up[static_cast<size_t>(i)] += 1;
          if (!all.count(up)) next.insert(up);
        }
      }
    }
    current.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  return {all.begin(), all.end()};
}

}  // namespace orbitcalc::oracles
