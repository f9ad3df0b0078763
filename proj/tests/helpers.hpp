#pragma once

#include <random>

#include "orbitcalc/linalg.hpp"

namespace orbitcalc::test_util {

inline Matrix random_complex(std::mt19937& gen, int rows, int cols) {
  std::normal_distribution<double> d;
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = cplx{d(gen), d(gen)};
  return m;
}

inline Vector random_vector(std::mt19937& gen, int n) { return random_complex(gen, n, 1).col(0); }

inline RealVector random_real(std::mt19937& gen, int n) {
  std::normal_distribution<double> d;
  RealVector v(n);
  for (int i = 0; i < n; ++i) v[i] = d(gen);
  return v;
}

// Rank by a plain full SVD, kept separate from the library's rank decision.
inline int plain_rank(const Matrix& m, double rel = 1e-8) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > rel * s[0]) ++r;
  return r;
}

}  // namespace orbitcalc::test_util
