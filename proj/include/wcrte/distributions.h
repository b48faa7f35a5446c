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

#ifndef WCRTE_DISTRIBUTIONS_H_
#define WCRTE_DISTRIBUTIONS_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wcrte/random.h"
#include "wcrte/tsallis_order.h"

namespace wcrte {

class Sample;

enum class ModelKind { kUniform, kExponential, kRayleigh, kParetoI, kWeibull };

// Nonnegative reference distribution with closed-form cdf and quantile.
//
//   Uniform(theta)      F(x) = x / theta on (0, theta)
//   Exponential(lambda) F(x) = 1 - exp(-lambda x)
//   Rayleigh(sigma)     F(x) = 1 - exp(-x^2 / (2 sigma^2))
//   ParetoI(k, delta)   F(x) = 1 - (k / x)^delta for x > k
//   Weibull(lambda, p)  F(x) = 1 - exp(-(lambda x)^p)
//
// All parameters must be strictly positive and finite; factories throw
// DomainError otherwise.
class ParametricModel {
 public:
  static ParametricModel uniform(double theta);
  static ParametricModel exponential(double lambda);
  static ParametricModel rayleigh(double sigma);
  static ParametricModel pareto1(double k, double delta);
  static ParametricModel weibull(double lambda, double p);

  ModelKind kind() const { return kind_; }
  // Parameters in the order listed above (second entry unused for
  // one-parameter families).
  double first() const { return params_[0]; }
  double second() const { return params_[1]; }

  double cdf(double x) const;
  double survival(double x) const;
  // log of the survival function, computed without cancellation in the tail.
  // Returns -infinity past the upper end of the support.
  double log_survival(double x) const;
  double log_pdf(double x) const;
  // Throws DomainError unless 0 < u < 1.
  double quantile(double u) const;

  double support_lower() const;
  // +infinity for unbounded families.
  double support_upper() const;

  // Canonical model string, e.g. "pareto1:k=1,delta=3".
  std::string label() const;

  friend bool operator==(const ParametricModel&,
                         const ParametricModel&) = default;

 private:
  ParametricModel(ModelKind kind, double a, double b)
      : kind_(kind), params_{a, b} {}

  ModelKind kind_;
  std::array<double, 2> params_;
};

enum class AlternativeFamily { kA, kB, kC };

// Alternatives to U(0,1) on [0,1]:
//   A_j: F(z) = 1 - (1-z)^j
//   B_j: F(z) = 2^(j-1) z^j for z <= 1/2, 1 - 2^(j-1) (1-z)^j above
//   C_j: F(z) = 1/2 - 2^(j-1) (1/2-z)^j for z <= 1/2,
//               1/2 + 2^(j-1) (z-1/2)^j above
// Any j > 0 is accepted; is_standard() reports whether (family, j) is one of
// the seven classical configurations A_{1.5,2}, B_{1.5,2,3}, C_{1.5,2}.
class AlternativeModel {
 public:
  AlternativeModel(AlternativeFamily family, double j);

  AlternativeFamily family() const { return family_; }
  double j() const { return j_; }
  bool is_standard() const;

  double cdf(double z) const;
  // Piecewise closed-form inverse; u = 1/2 maps to the lower piece.
  double quantile(double u) const;

  std::string label() const;

  // The seven classical configurations in table order.
  static std::vector<AlternativeModel> standard_set();

  friend bool operator==(const AlternativeModel&,
                         const AlternativeModel&) = default;

 private:
  double raw_cdf(double z) const;

  AlternativeFamily family_;
  double j_;
};

using Model = std::variant<ParametricModel, AlternativeModel>;

double cdf(const Model& model, double x);
double quantile(const Model& model, double u);
std::string label(const Model& model);

// Fills out with i.i.d. draws quantile(U) for U from the stream.
void draw_into(const Model& model, std::span<double> out, RandomStream& stream);
// n >= 1 draws.
std::vector<double> draw(const Model& model, std::size_t n,
                         RandomStream& stream);
// n >= 2 draws wrapped as a Sample.
Sample sample(const Model& model, std::size_t n, RandomStream& stream);

// Tabulated WCRTE closed forms. For the WCRE limit returns closed_wcre.
// ParetoI requires delta > 2 and delta * alpha > 2 (DomainError otherwise);
// only alpha > 1 is accepted for ParetoI.
double closed_wcrte(const ParametricModel& model, const TsallisOrder& order);

// WCRE = -int x S(x) log S(x) dx by adaptive quadrature (abs tol 1e-10).
// Throws DomainError when the measure diverges (ParetoI with delta <= 2).
double closed_wcre(const ParametricModel& model);

// WCRTE = 1/(alpha-1) int x (S(x) - S(x)^alpha) dx by adaptive quadrature,
// directly from the survival function. Independent of the tabulated forms.
double integrated_wcrte(const ParametricModel& model,
                        const TsallisOrder& order);

// Differential entropy H(X) and E[log X], both by quadrature.
double differential_entropy(const ParametricModel& model);
double expected_log(const ParametricModel& model);

// eta(alpha) = int_0^1 log((u - u^alpha)/(alpha - 1)) du. For the WCRE limit
// the integrand becomes log(-u log u).
double entropy_offset(const TsallisOrder& order);

// exp[H(X) + E(log X) + eta(alpha)], a lower bound on the WCRTE.
double wcrte_lower_bound(const ParametricModel& model,
                         const TsallisOrder& order);

}  // namespace wcrte

#endif  // WCRTE_DISTRIBUTIONS_H_
