#pragma once

// Test-only oracles, kept independent of the library implementation paths
// they are used to check.

#include <algorithm>
#include <cmath>
#include <vector>

#include "qvol/types.hpp"

namespace qvol::testing {

/// Number of eigenvalues of a Hermitian matrix strictly below x, from the
/// inertia (count of negative pivots) of the unpivoted LDL-style elimination
/// of (m - x I). Independent of any eigensolver library.
inline int eigen_count_below(Matrix a, double x) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i) a(i, i) -= x;
  int negatives = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    double pivot = a(k, k).real();
    if (std::abs(pivot) < 1e-300) pivot = 1e-300;
    if (pivot < 0.0) ++negatives;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const Complex factor = a(i, k) / pivot;
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) -= factor * a(k, j);
      }
    }
  }
  return negatives;
}

/// All eigenvalues of a Hermitian matrix, ascending, by bisection on the
/// counting function over the Gershgorin interval.
inline std::vector<double> eigenvalues_by_bisection(const Matrix& m, double tol = 1e-11) {
  const Eigen::Index n = m.rows();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    double radius = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != i) radius += std::abs(m(i, j));
    }
    lo = std::min(lo, m(i, i).real() - radius);
    hi = std::max(hi, m(i, i).real() + radius);
  }
  lo -= 1.0;
  hi += 1.0;

  std::vector<double> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    double a = lo;
    double b = hi;
    // invariant: count_below(a) <= i < count_below(b)
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      if (eigen_count_below(m, mid) >= i + 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out[static_cast<std::size_t>(i)] = 0.5 * (a + b);
  }
  return out;
}

/// Partial trace by explicit summation over all basis-index pairs.
inline Matrix partial_trace_oracle(const Matrix& rho, const BipartiteDims& dims, Subsystem keep) {
  const int n1 = dims.n1;
  const int n2 = dims.n2;
  if (keep == Subsystem::B) {
    Matrix out = Matrix::Zero(n2, n2);
    for (int b = 0; b < n2; ++b)
      for (int b2 = 0; b2 < n2; ++b2)
        for (int a = 0; a < n1; ++a)
          for (int a2 = 0; a2 < n1; ++a2)
            if (a == a2) out(b, b2) += rho(a * n2 + b, a2 * n2 + b2);
    return out;
  }
  Matrix out = Matrix::Zero(n1, n1);
  for (int a = 0; a < n1; ++a)
    for (int a2 = 0; a2 < n1; ++a2)
      for (int b = 0; b < n2; ++b)
        for (int b2 = 0; b2 < n2; ++b2)
          if (b == b2) out(a, a2) += rho(a * n2 + b, a2 * n2 + b2);
  return out;
}

/// One-sample Kolmogorov-Smirnov statistic against the uniform [0,1] CDF.
inline double ks_statistic_uniform01(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    d = std::max(d, xs[i] - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - xs[i]);
  }
  return d;
}

/// Two-sample Kolmogorov-Smirnov statistic.
inline double ks_statistic_two_sample(std::vector<double> xs, std::vector<double> ys) {
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  double d = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < xs.size() && j < ys.size()) {
    if (xs[i] <= ys[j]) {
      ++i;
    } else {
      ++j;
    }
    d = std::max(d, std::abs(static_cast<double>(i) / static_cast<double>(xs.size()) -
                             static_cast<double>(j) / static_cast<double>(ys.size())));
  }
  return d;
}

}  // namespace qvol::testing
