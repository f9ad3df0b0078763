#pragma once

namespace orbitcalc {

/// Numerical thresholds shared by every module.
///
/// `residual` bounds identities that hold exactly in exact arithmetic
/// (Jacobi, bracket relations, unitarity).  `rank_rel` is the relative
/// singular-value cutoff used for every rank and kernel decision: a singular
/// value counts iff it exceeds `rank_rel * sigma_max` and `rank_abs`.
struct Tolerance {
  double residual = 1e-9;
  double rank_rel = 1e-8;
  double rank_abs = 1e-12;
  double cluster_rel = 1e-7;
  double integrality = 1e-7;

  Tolerance scaled_rank(double factor) const {
    Tolerance t = *this;
    t.rank_rel *= factor;
    return t;
  }
};

inline constexpr Tolerance kDefaultTolerance{};

}  // namespace orbitcalc
