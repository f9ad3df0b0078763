#pragma once

#include <map>
#include <vector>

#include "orbitcalc/irrep.hpp"
#include "orbitcalc/root_system.hpp"

// Closed-form references used to validate the irrep construction.  They only
// read the root datum and Kil, never the constructed representations or the
// sl2 triples.
namespace orbitcalc::oracles {

/// Half-sum of positive roots, in h-coordinates.
struct WeylVector {
  RealVector rho;
};

/// Inner product on weights (h-coordinates) dual to Kil restricted to h.
class WeightPairing {
 public:
  WeightPairing(const RootDatum& rd, const KillingForm& kil);

  double operator()(const RealVector& mu, const RealVector& nu) const { return mu.dot(inverse_gram_ * nu); }
  /// <mu, alpha^vee> = 2 <mu, alpha> / <alpha, alpha>.
  double coroot(const RealVector& mu, const RealVector& alpha) const {
    return 2.0 * (*this)(mu, alpha) / (*this)(alpha, alpha);
  }

 private:
  RealMatrix inverse_gram_;
};

WeylVector weyl_vector(const RootDatum& rd);

/// (j, k) entry <alpha_j, alpha_k^vee> computed from the Kil pairing.
Eigen::MatrixXi cartan_matrix(const RootDatum& rd, const KillingForm& kil);

/// Weight with the given Dynkin labels, in h-coordinates.
RealVector weight_from_labels(const RootDatum& rd, const KillingForm& kil,
                              const std::vector<int>& labels);

/// prod_{alpha > 0} <lambda + rho, alpha> / <rho, alpha>.
long weyl_dimension(const RootDatum& rd, const KillingForm& kil, const HighestWeight& lambda);

/// Weight multiplicities keyed by Dynkin labels, by Freudenthal's recursion.
std::map<std::vector<int>, int> freudenthal_multiplicities(const RootDatum& rd,
                                                           const KillingForm& kil,
                                                           const HighestWeight& lambda);

/// Positive roots as simple-root coordinates, generated from a Cartan matrix
/// by root strings.  Independent of any eigen-decomposition.
std::vector<std::vector<int>> positive_roots_from_cartan(const Eigen::MatrixXi& cartan);

}  // namespace orbitcalc::oracles
