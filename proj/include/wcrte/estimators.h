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

#ifndef WCRTE_ESTIMATORS_H_
#define WCRTE_ESTIMATORS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wcrte/diagnostics.h"
#include "wcrte/sample.h"
#include "wcrte/tsallis_order.h"

namespace wcrte {

// Nonparametric estimators of the weighted cumulative residual Tsallis
// entropy (WCRTE) and of its alpha -> 1 limit, the weighted cumulative
// residual entropy (WCRE), from the order statistics of a Sample.
//
// Throughout, u_i = 1 - i/n and Delta_i(m) = X_(i+m)^2 - X_(i-m)^2 with
// out-of-range indices clamped to X_(1) or X_(n).

enum class EstimatorKind {
  kEmpiricalPlugin,  // empirical survival function plugged into the measure
  kVasicek,          // spacing estimator, window m
  kEbrahimi,         // spacing estimator with boundary weights C_i
  kModifiedN,        // Ebrahimi weights applied twice (C_i^2)
  kLStatistic,       // weighted sum of X_(i)^2
};

// Plotting position p_i assigned to X_(i).
enum class Plotting { kOverN, kOverNPlusOne };

std::string to_string(EstimatorKind kind);

struct EstimatorSpec {
  EstimatorKind kind = EstimatorKind::kEmpiricalPlugin;
  TsallisOrder order = TsallisOrder::wcre_limit();
  // Required for the three spacing estimators, absent otherwise.
  std::optional<int> window;
  // Only meaningful for kLStatistic; unset selects i/n for WCRTE and
  // i/(n+1) for WCRE.
  std::optional<Plotting> plotting;

  bool needs_window() const;
  Plotting resolved_plotting() const;
  // Throws DomainError if the window presence or range (1 <= m < n/2) is
  // wrong for this kind and sample size.
  void validate(std::size_t n) const;
  // e.g. "wcrte:v,alpha=2,m=3".
  std::string label() const;
};

// Boundary weights C_1..C_n for window m:
//   1 + (i-1)/m  for i <= m,  2 in the interior,  1 + (n-i)/m  for i > n-m.
class EbrahimiWeights {
 public:
  EbrahimiWeights(std::size_t n, int m);
  // 1-based.
  double operator[](std::size_t i) const { return c_[i - 1]; }
  const std::vector<double>& values() const { return c_; }

 private:
  std::vector<double> c_;
};

// 1/(2(alpha-1)) sum_{i<n} (X_(i+1)^2 - X_(i)^2) (u_i - u_i^alpha).
double wcrte_empirical(const Sample& sample, const TsallisOrder& order);
// -1/2 sum_{i<n} (X_(i+1)^2 - X_(i)^2) u_i log u_i.
double wcre_empirical(const Sample& sample);

// 1/(4m(alpha-1)) sum_{i<=n} Delta_i(m) (u_i - u_i^alpha).
double wcrte_vasicek(const Sample& sample, const TsallisOrder& order, int m,
                     Diagnostics* diag = nullptr);
// 1/(2m(alpha-1)) sum_{i<=n} Delta_i(m) / C_i (u_i - u_i^alpha).
double wcrte_ebrahimi(const Sample& sample, const TsallisOrder& order, int m,
                      Diagnostics* diag = nullptr);
// 1/(m(alpha-1)) sum_{i<=n} Delta_i(m) / C_i^2 (u_i - u_i^alpha).
double wcrte_modified_n(const Sample& sample, const TsallisOrder& order, int m,
                        Diagnostics* diag = nullptr);

// 1/(2(alpha-1)) (1/n) sum X_(i)^2 [1 - alpha (1 - p_i)^(alpha-1)].
// Requires alpha > 1.
double wcrte_lstat(const Sample& sample, const TsallisOrder& order,
                   Plotting plotting = Plotting::kOverN);

// WCRE spacing estimators: weight -u_i log u_i, i = 1..n-1, prefactors
// 1/(4m), 1/(2m) and 1/m.
double wcre_vasicek(const Sample& sample, int m);
double wcre_ebrahimi(const Sample& sample, int m);
double wcre_modified_n(const Sample& sample, int m);

// -(1/(2n)) sum X_(i)^2 [1 + log(1 - p_i)]. With kOverN the i = n term is
// log(0); it is dropped and kDroppedLogZeroTerm is raised.
double wcre_lstat(const Sample& sample,
                  Plotting plotting = Plotting::kOverNPlusOne,
                  Diagnostics* diag = nullptr);

// Plug-in estimate of the asymptotic variance of sqrt(n) * wcrte_lstat:
//   1/(2(alpha-1)^2) sum_{j<i<n} (j/n) u_i psi_i psi_j D_i D_j,
// psi_k = 1 - alpha u_k^(alpha-1), D_k = X_(k+1)^2 - X_(k)^2.
// Requires n >= 3 and alpha > 1. May be negative at small n; the value is
// returned unchanged and kNegativeVariance raised.
double wcrte_lstat_variance(const Sample& sample, const TsallisOrder& order,
                            Diagnostics* diag = nullptr);
// Same with psi_k = 1 + log u_k and prefactor 1/2.
double wcre_lstat_variance(const Sample& sample, Diagnostics* diag = nullptr);

struct Estimate {
  double value = 0.0;
  // Plug-in asymptotic variance of sqrt(n) * value (L-statistics only).
  std::optional<double> variance;
  Diagnostics diagnostics;
};

// Dispatches on spec.kind and spec.order after spec.validate(n).
double evaluate(const Sample& sample, const EstimatorSpec& spec,
                Diagnostics* diag = nullptr);
// evaluate() plus the variance estimate where one exists.
Estimate estimate(const Sample& sample, const EstimatorSpec& spec);

}  // namespace wcrte

#endif  // WCRTE_ESTIMATORS_H_
