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

#include "wcrte/estimators.h"

#include <cmath>
#include <string>

#include "summation.h"
#include "wcrte/error.h"
#include "wcrte/text_io.h"

namespace wcrte {
namespace {

using internal::CompensatedSum;

double finite_alpha(const TsallisOrder& order, const char* what) {
  if (order.is_wcre_limit()) {
    throw DomainError(std::string(what) +
                      " needs a finite Tsallis order; use the WCRE variant");
  }
  return order.alpha();
}

void check_window(std::size_t n, int m) {
  if (m < 1 || 2 * static_cast<std::size_t>(m) >= n) {
    throw DomainError("window m = " + std::to_string(m) +
                      " outside 1 <= m < n/2 for n = " + std::to_string(n));
  }
}

double ebrahimi_weight(std::size_t n, int m, std::size_t i) {
  const auto mm = static_cast<std::size_t>(m);
  if (i <= mm) return 1.0 + static_cast<double>(i - 1) / m;
  if (i + mm <= n) return 2.0;
  return 1.0 + static_cast<double>(n - i) / m;
}

// u - u^alpha with u = 1 - i/n.
double tsallis_weight(std::size_t n, std::size_t i, double alpha) {
  const double u = static_cast<double>(n - i) / static_cast<double>(n);
  return u - std::pow(u, alpha);
}

// -u log u with u = 1 - i/n; zero at u = 0.
double shannon_weight(std::size_t n, std::size_t i) {
  if (i >= n) return 0.0;
  const double u = static_cast<double>(n - i) / static_cast<double>(n);
  return -u * std::log(u);
}

enum class SpacingScheme { kVasicek, kEbrahimi, kModifiedN };

// sum_{i=1}^{last} Delta_i(m) * weight(i) / divisor_i with the scheme's
// divisor (1, C_i or C_i^2).
template <typename WeightFn>
double spacing_sum(const Sample& sample, int m, std::size_t last,
                   SpacingScheme scheme, WeightFn weight) {
  const std::size_t n = sample.size();
  const auto mm = static_cast<std::ptrdiff_t>(m);
  double total = 0.0;
  for (std::size_t i = 1; i <= last; ++i) {
    const auto ii = static_cast<std::ptrdiff_t>(i);
    const double hi = sample.order_stat(ii + mm);
    const double lo = sample.order_stat(ii - mm);
    double term = (hi * hi - lo * lo) * weight(i);
    if (scheme != SpacingScheme::kVasicek) {
      const double c = ebrahimi_weight(n, m, i);
      term /= scheme == SpacingScheme::kEbrahimi ? c : c * c;
    }
    total += term;
  }
  return total;
}

double spacing_prefactor(SpacingScheme scheme, int m) {
  switch (scheme) {
    case SpacingScheme::kVasicek:
      return 1.0 / (4.0 * m);
    case SpacingScheme::kEbrahimi:
      return 1.0 / (2.0 * m);
    case SpacingScheme::kModifiedN:
      return 1.0 / m;
  }
  return 0.0;
}

double wcrte_spacing(const Sample& sample, const TsallisOrder& order, int m,
                     SpacingScheme scheme, Diagnostics* diag) {
  const double alpha = finite_alpha(order, "spacing WCRTE estimator");
  const std::size_t n = sample.size();
  check_window(n, m);
  if (alpha < 1.0) raise_if(diag, Diagnostic::kAlphaBelowOne);
  const double sum = spacing_sum(sample, m, n, scheme, [&](std::size_t i) {
    return tsallis_weight(n, i, alpha);
  });
  return spacing_prefactor(scheme, m) * sum / (alpha - 1.0);
}

double wcre_spacing(const Sample& sample, int m, SpacingScheme scheme) {
  const std::size_t n = sample.size();
  check_window(n, m);
  const double sum = spacing_sum(sample, m, n - 1, scheme, [&](std::size_t i) {
    return shannon_weight(n, i);
  });
  return spacing_prefactor(scheme, m) * sum;
}

// sum_{j<i<n} A_j B_i with A_j = (j/n) psi_j D_j, B_i = (1 - i/n) psi_i D_i,
// evaluated with a compensated running prefix of A.
template <typename PsiFn>
double lstat_variance_sum(const Sample& sample, PsiFn psi) {
  const auto x = sample.sorted();
  const std::size_t n = x.size();
  const double nd = static_cast<double>(n);
  CompensatedSum prefix;
  CompensatedSum total;
  for (std::size_t i = 1; i + 1 <= n - 1 + 1 && i <= n - 1; ++i) {
    const double d = x[i] * x[i] - x[i - 1] * x[i - 1];
    const double p = psi(i) * d;
    total.add(prefix.value() * (static_cast<double>(n - i) / nd) * p);
    prefix.add((static_cast<double>(i) / nd) * p);
  }
  return total.value();
}

}  // namespace

std::string to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::kEmpiricalPlugin:
      return "empirical";
    case EstimatorKind::kVasicek:
      return "vasicek";
    case EstimatorKind::kEbrahimi:
      return "ebrahimi";
    case EstimatorKind::kModifiedN:
      return "modified";
    case EstimatorKind::kLStatistic:
      return "lstat";
  }
  return {};
}

// --- EstimatorSpec ---------------------------------------------------------

bool EstimatorSpec::needs_window() const {
  return kind == EstimatorKind::kVasicek || kind == EstimatorKind::kEbrahimi ||
         kind == EstimatorKind::kModifiedN;
}

Plotting EstimatorSpec::resolved_plotting() const {
  if (plotting) return *plotting;
  return order.is_wcre_limit() ? Plotting::kOverNPlusOne : Plotting::kOverN;
}

void EstimatorSpec::validate(std::size_t n) const {
  if (needs_window()) {
    if (!window) {
      throw DomainError(to_string(kind) + " estimator needs a window m");
    }
    check_window(n, *window);
  } else if (window) {
    throw DomainError(to_string(kind) + " estimator takes no window");
  }
  if (kind == EstimatorKind::kLStatistic && !order.is_wcre_limit() &&
      !(order.alpha() > 1.0)) {
    throw DomainError("WCRTE L-statistic needs alpha > 1");
  }
}

std::string EstimatorSpec::label() const {
  static constexpr const char* kShort[] = {"emp", "v", "e", "n", "l"};
  std::string s = order.is_wcre_limit() ? "wcre:" : "wcrte:";
  s += kShort[static_cast<int>(kind)];
  if (!order.is_wcre_limit()) s += ",alpha=" + order.to_string();
  if (window) s += ",m=" + std::to_string(*window);
  if (plotting) {
    s += *plotting == Plotting::kOverN ? ",plotting=n" : ",plotting=n+1";
  }
  return s;
}

EbrahimiWeights::EbrahimiWeights(std::size_t n, int m) {
  check_window(n, m);
  c_.resize(n);
  for (std::size_t i = 1; i <= n; ++i) c_[i - 1] = ebrahimi_weight(n, m, i);
}

// --- Estimators ------------------------------------------------------------

double wcrte_empirical(const Sample& sample, const TsallisOrder& order) {
  const double alpha = finite_alpha(order, "wcrte_empirical");
  const auto x = sample.sorted();
  const std::size_t n = x.size();
  double total = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    total += (x[i] * x[i] - x[i - 1] * x[i - 1]) * tsallis_weight(n, i, alpha);
  }
  return total / (2.0 * (alpha - 1.0));
}

double wcre_empirical(const Sample& sample) {
  const auto x = sample.sorted();
  const std::size_t n = x.size();
  double total = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    total += (x[i] * x[i] - x[i - 1] * x[i - 1]) * shannon_weight(n, i);
  }
  return 0.5 * total;
}

double wcrte_vasicek(const Sample& sample, const TsallisOrder& order, int m,
                     Diagnostics* diag) {
  return wcrte_spacing(sample, order, m, SpacingScheme::kVasicek, diag);
}

double wcrte_ebrahimi(const Sample& sample, const TsallisOrder& order, int m,
                      Diagnostics* diag) {
  return wcrte_spacing(sample, order, m, SpacingScheme::kEbrahimi, diag);
}

double wcrte_modified_n(const Sample& sample, const TsallisOrder& order, int m,
                        Diagnostics* diag) {
  return wcrte_spacing(sample, order, m, SpacingScheme::kModifiedN, diag);
}

double wcre_vasicek(const Sample& sample, int m) {
  return wcre_spacing(sample, m, SpacingScheme::kVasicek);
}

double wcre_ebrahimi(const Sample& sample, int m) {
  return wcre_spacing(sample, m, SpacingScheme::kEbrahimi);
}

double wcre_modified_n(const Sample& sample, int m) {
  return wcre_spacing(sample, m, SpacingScheme::kModifiedN);
}

double wcrte_lstat(const Sample& sample, const TsallisOrder& order,
                   Plotting plotting) {
  const double alpha = finite_alpha(order, "wcrte_lstat");
  if (!(alpha > 1.0)) {
    throw DomainError("wcrte_lstat needs alpha > 1; use wcre_lstat");
  }
  const auto x = sample.sorted();
  const std::size_t n = x.size();
  const double denom =
      static_cast<double>(plotting == Plotting::kOverN ? n : n + 1);
  double total = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double q = 1.0 - static_cast<double>(i) / denom;
    total += x[i - 1] * x[i - 1] * (1.0 - alpha * std::pow(q, alpha - 1.0));
  }
  return total / (2.0 * (alpha - 1.0) * static_cast<double>(n));
}

double wcre_lstat(const Sample& sample, Plotting plotting, Diagnostics* diag) {
  const auto x = sample.sorted();
  const std::size_t n = x.size();
  std::size_t last = n;
  double denom = static_cast<double>(n + 1);
  if (plotting == Plotting::kOverN) {
    last = n - 1;
    denom = static_cast<double>(n);
    raise_if(diag, Diagnostic::kDroppedLogZeroTerm);
  }
  double total = 0.0;
  for (std::size_t i = 1; i <= last; ++i) {
    const double q = 1.0 - static_cast<double>(i) / denom;
    total += x[i - 1] * x[i - 1] * (1.0 + std::log(q));
  }
  return -total / (2.0 * static_cast<double>(n));
}

double wcrte_lstat_variance(const Sample& sample, const TsallisOrder& order,
                            Diagnostics* diag) {
  const double alpha = finite_alpha(order, "wcrte_lstat_variance");
  if (!(alpha > 1.0)) {
    throw DomainError("wcrte_lstat_variance needs alpha > 1");
  }
  const std::size_t n = sample.size();
  if (n < 3) throw DomainError("variance estimate needs n >= 3");
  const double nd = static_cast<double>(n);
  const double sum = lstat_variance_sum(sample, [&](std::size_t k) {
    const double u = static_cast<double>(n - k) / nd;
    return 1.0 - alpha * std::pow(u, alpha - 1.0);
  });
  const double v = sum / (2.0 * (alpha - 1.0) * (alpha - 1.0));
  if (v < 0.0) raise_if(diag, Diagnostic::kNegativeVariance);
  return v;
}

double wcre_lstat_variance(const Sample& sample, Diagnostics* diag) {
  const std::size_t n = sample.size();
  if (n < 3) throw DomainError("variance estimate needs n >= 3");
  const double nd = static_cast<double>(n);
  const double sum = lstat_variance_sum(sample, [&](std::size_t k) {
    return 1.0 + std::log(static_cast<double>(n - k) / nd);
  });
  const double v = 0.5 * sum;
  if (v < 0.0) raise_if(diag, Diagnostic::kNegativeVariance);
  return v;
}

// --- Dispatch --------------------------------------------------------------

double evaluate(const Sample& sample, const EstimatorSpec& spec,
                Diagnostics* diag) {
  spec.validate(sample.size());
  const bool wcre = spec.order.is_wcre_limit();
  switch (spec.kind) {
    case EstimatorKind::kEmpiricalPlugin:
      return wcre ? wcre_empirical(sample) : wcrte_empirical(sample, spec.order);
    case EstimatorKind::kVasicek:
      return wcre ? wcre_vasicek(sample, *spec.window)
                  : wcrte_vasicek(sample, spec.order, *spec.window, diag);
    case EstimatorKind::kEbrahimi:
      return wcre ? wcre_ebrahimi(sample, *spec.window)
                  : wcrte_ebrahimi(sample, spec.order, *spec.window, diag);
    case EstimatorKind::kModifiedN:
      return wcre ? wcre_modified_n(sample, *spec.window)
                  : wcrte_modified_n(sample, spec.order, *spec.window, diag);
    case EstimatorKind::kLStatistic:
      return wcre ? wcre_lstat(sample, spec.resolved_plotting(), diag)
                  : wcrte_lstat(sample, spec.order, spec.resolved_plotting());
  }
  return 0.0;
}

Estimate estimate(const Sample& sample, const EstimatorSpec& spec) {
  Estimate out;
  out.value = evaluate(sample, spec, &out.diagnostics);
  if (spec.kind == EstimatorKind::kLStatistic && sample.size() >= 3) {
    out.variance = spec.order.is_wcre_limit()
                       ? wcre_lstat_variance(sample, &out.diagnostics)
                       : wcrte_lstat_variance(sample, spec.order,
                                              &out.diagnostics);
  }
  return out;
}

std::vector<std::string> Diagnostics::messages() const {
  std::vector<std::string> out;
  if (has(Diagnostic::kDroppedLogZeroTerm)) {
    out.emplace_back("i = n term with log(0) dropped (plotting i/n)");
  }
  if (has(Diagnostic::kNegativeVariance)) {
    out.emplace_back("plug-in variance estimate is negative");
  }
  if (has(Diagnostic::kAlphaBelowOne)) {
    out.emplace_back("alpha < 1: measure finite only with higher moments");
  }
  if (has(Diagnostic::kClampedToOpenInterval)) {
    out.emplace_back("observation at 0 or 1 clamped into [1e-12, 1-1e-12]");
  }
  if (has(Diagnostic::kLogFloorApplied)) {
    out.emplace_back("zero spacing hit the log floor -745");
  }
  return out;
}

}  // namespace wcrte
