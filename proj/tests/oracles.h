// Copyright 2026 The wcrte Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Naive reference implementations used only by the tests. Each one is
// written from the defining integral or sum rather than from the library
// code, with long double accumulation and O(n^2) loops where convenient.

#ifndef WCRTE_TESTS_ORACLES_H_
#define WCRTE_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

using Real = long double;

inline std::vector<double> sorted_copy(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Empirical survival #{X > t} / n by counting.
inline Real empirical_survival(const std::vector<double>& x, double t) {
  std::size_t above = 0;
  for (double v : x) above += v > t ? 1 : 0;
  return static_cast<Real>(above) / static_cast<Real>(x.size());
}

// Integral of x * g(S_n(x)) over [0, max X], integrating the step function
// exactly on each interval between distinct observations.
template <typename G>
Real integrate_step(const std::vector<double>& data, G g) {
  std::vector<double> knots = sorted_copy(data);
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  Real total = 0;
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const Real a = knots[k];
    const Real b = knots[k + 1];
    const Real s = empirical_survival(data, knots[k]);
    total += g(s) * (b * b - a * a) / 2;
  }
  return total;
}

inline Real wcrte_empirical(const std::vector<double>& x, double alpha) {
  const Real a = alpha;
  return integrate_step(x, [a](Real s) {
    return (s - std::pow(s, a)) / (a - 1);
  });
}

inline Real wcre_empirical(const std::vector<double>& x) {
  return integrate_step(x, [](Real s) {
    return s > 0 ? -s * std::log(s) : Real(0);
  });
}

// X_(i), 1-based, with indices below 1 or above n replaced by the extremes.
inline Real order_stat(const std::vector<double>& sorted, long i) {
  const long n = static_cast<long>(sorted.size());
  if (i < 1) return sorted.front();
  if (i > n) return sorted.back();
  return sorted[static_cast<std::size_t>(i - 1)];
}

inline Real boundary_weight(long n, long m, long i) {
  if (1 <= i && i <= m) return 1 + static_cast<Real>(i - 1) / m;
  if (m + 1 <= i && i <= n - m) return 2;
  return 1 + static_cast<Real>(n - i) / m;
}

// power = 0 (Vasicek), 1 (Ebrahimi) or 2 (modified): each term is divided by
// C_i^power. weight(u) is the per-term weight at u = 1 - i/n.
template <typename W>
Real spacing(const std::vector<double>& data, long m, int power, long last,
             W weight) {
  const auto x = sorted_copy(data);
  const long n = static_cast<long>(x.size());
  Real total = 0;
  for (long i = 1; i <= last; ++i) {
    const Real hi = order_stat(x, i + m);
    const Real lo = order_stat(x, i - m);
    Real c = 1;
    for (int p = 0; p < power; ++p) c *= boundary_weight(n, m, i);
    const Real u = static_cast<Real>(n - i) / n;
    total += (hi * hi - lo * lo) * weight(u) / c;
  }
  return total;
}

inline Real spacing_scale(int power, long m) {
  return power == 0 ? Real(1) / (4 * m) : power == 1 ? Real(1) / (2 * m)
                                                     : Real(1) / m;
}

inline Real wcrte_spacing(const std::vector<double>& x, double alpha, long m,
                          int power) {
  const Real a = alpha;
  const long n = static_cast<long>(x.size());
  return spacing_scale(power, m) / (a - 1) *
         spacing(x, m, power, n, [a](Real u) { return u - std::pow(u, a); });
}

inline Real wcre_spacing(const std::vector<double>& x, long m, int power) {
  const long n = static_cast<long>(x.size());
  return spacing_scale(power, m) *
         spacing(x, m, power, n - 1, [](Real u) { return -u * std::log(u); });
}

inline Real wcrte_lstat(const std::vector<double>& data, double alpha,
                        bool over_n_plus_one) {
  const auto x = sorted_copy(data);
  const Real n = x.size();
  const Real a = alpha;
  Real total = 0;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    const Real p = i / (over_n_plus_one ? n + 1 : n);
    const Real xi = x[i - 1];
    total += xi * xi * (1 - a * std::pow(1 - p, a - 1));
  }
  return total / (2 * (a - 1) * n);
}

inline Real wcre_lstat(const std::vector<double>& data, bool over_n_plus_one) {
  const auto x = sorted_copy(data);
  const Real n = x.size();
  Real total = 0;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    const Real p = i / (over_n_plus_one ? n + 1 : n);
    if (p >= 1) continue;
    const Real xi = x[i - 1];
    total += xi * xi * (1 + std::log(1 - p));
  }
  return -total / (2 * n);
}

// (1/2) c sum_{i<n} sum_{j<i} (j/n)(1 - i/n) psi_i psi_j D_i D_j with
// D_k = X_(k+1)^2 - X_(k)^2.
template <typename Psi>
Real lstat_variance(const std::vector<double>& data, Real c, Psi psi) {
  const auto x = sorted_copy(data);
  const std::size_t n = x.size();
  const Real nd = n;
  auto d = [&](std::size_t k) {
    const Real a = x[k - 1];
    const Real b = x[k];
    return b * b - a * a;
  };
  Real total = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      total += (j / nd) * (1 - i / nd) * psi((nd - i) / nd) *
               psi((nd - j) / nd) * d(i) * d(j);
    }
  }
  return c * total / 2;
}

inline Real wcrte_lstat_variance(const std::vector<double>& x, double alpha) {
  const Real a = alpha;
  return lstat_variance(x, 1 / ((a - 1) * (a - 1)), [a](Real u) {
    return 1 - a * std::pow(u, a - 1);
  });
}

inline Real wcre_lstat_variance(const std::vector<double>& x) {
  return lstat_variance(x, 1, [](Real u) { return 1 + std::log(u); });
}

// --- Uniformity statistics from their integral definitions ---------------

// sup_t |F_n(t) - t| checking both sides of every jump.
inline Real ks(const std::vector<double>& data) {
  Real d = 0;
  const Real n = data.size();
  for (double t : data) {
    std::size_t below = 0;
    std::size_t at_or_below = 0;
    for (double v : data) {
      below += v < t ? 1 : 0;
      at_or_below += v <= t ? 1 : 0;
    }
    d = std::max({d, std::fabs(at_or_below / n - t), std::fabs(below / n - t)});
  }
  return d;
}

// n * integral of (F_n(t) - t)^2 over [0,1], exact on each step.
inline Real cvm(const std::vector<double>& data) {
  auto knots = sorted_copy(data);
  knots.insert(knots.begin(), 0.0);
  knots.push_back(1.0);
  const Real n = data.size();
  Real total = 0;
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const Real a = knots[k];
    const Real b = knots[k + 1];
    const Real c = k / n;
    total += ((b - c) * (b - c) * (b - c) - (a - c) * (a - c) * (a - c)) / 3;
  }
  return n * total;
}

// n * integral of (F_n(t) - t)^2 / (t(1-t)); data strictly inside (0,1).
inline Real ad(const std::vector<double>& data) {
  auto knots = sorted_copy(data);
  const Real n = data.size();
  Real total = 0;
  // (c - t)^2 / (t(1-t)) = -1 + c^2/t + (1-c)^2/(1-t)
  auto piece = [](Real c, Real a, Real b) {
    Real v = -(b - a);
    if (c != 0) v += c * c * std::log(b / a);
    if (c != 1) v -= (1 - c) * (1 - c) * std::log((1 - b) / (1 - a));
    return v;
  };
  knots.insert(knots.begin(), 0.0);
  knots.push_back(1.0);
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const Real c = k / n;
    total += piece(c, knots[k], knots[k + 1]);
  }
  return n * total;
}

inline Real ent(const std::vector<double>& data, long m) {
  const auto x = sorted_copy(data);
  const long n = static_cast<long>(x.size());
  Real total = 0;
  for (long i = 1; i <= n; ++i) {
    total += std::log(static_cast<Real>(n) / (2 * m) *
                      (order_stat(x, i + m) - order_stat(x, i - m)));
  }
  return total / n;
}

}  // namespace oracle

#endif  // WCRTE_TESTS_ORACLES_H_
