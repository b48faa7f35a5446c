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

#include "wcrte/distributions.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wcrte/error.h"
#include "wcrte/quadrature.h"
#include "wcrte/sample.h"
#include "wcrte/text_io.h"

namespace wcrte {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMeasureTol = 1e-10;
constexpr double kBoundTol = 1e-8;
constexpr double kLogArgFloor = 1e-300;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be positive and finite, got " +
                      format_double(v));
  }
}

void require_open_unit(double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("quantile level must lie in (0,1), got " +
                      format_double(u));
  }
}

// -log(1 - u) without cancellation.
double neg_log1m(double u) { return -std::log1p(-u); }

bool pareto_measure_finite(const ParametricModel& m, double alpha) {
  const double delta = m.second();
  return delta > 2.0 && delta * alpha > 2.0;
}

// x * S(x) * (1 - S(x)^(alpha-1)) / (alpha - 1), stable near alpha = 1.
double wcrte_integrand(const ParametricModel& m, double alpha, double x) {
  const double ls = m.log_survival(x);
  if (ls == -kInf) return 0.0;
  // S - S^alpha, factored so that no intermediate overflows.
  const double gap = alpha > 1.0
                         ? -std::exp(ls) * std::expm1((alpha - 1.0) * ls)
                         : std::exp(alpha * ls) * std::expm1((1.0 - alpha) * ls);
  return x * gap / (alpha - 1.0);
}

double wcre_integrand(const ParametricModel& m, double x) {
  const double ls = m.log_survival(x);
  if (ls == -kInf || ls == 0.0) return 0.0;
  return -x * std::exp(ls) * ls;
}

// Integrates over the part of the support where S(x) < 1.
double integrate_over_tail(const ParametricModel& m, const Integrand& f,
                           double tol) {
  const double a = m.support_lower();
  const double b = m.support_upper();
  switch (m.kind()) {
    case ModelKind::kUniform:
      // x log x behaviour at the upper endpoint.
      return integrate_singular(f, a, b, tol);
    case ModelKind::kParetoI:
      // Algebraic tail.
      return integrate_singular(f, a, b, tol);
    default:
      return integrate_smooth(f, a, b, tol);
  }
}

double log_density_integral(const ParametricModel& m, const Integrand& f) {
  return integrate_singular(f, m.support_lower(), m.support_upper(),
                            kBoundTol);
}

}  // namespace

// --- ParametricModel -------------------------------------------------------

ParametricModel ParametricModel::uniform(double theta) {
  require_positive(theta, "theta");
  return ParametricModel(ModelKind::kUniform, theta, 0.0);
}

ParametricModel ParametricModel::exponential(double lambda) {
  require_positive(lambda, "lambda");
  return ParametricModel(ModelKind::kExponential, lambda, 0.0);
}

ParametricModel ParametricModel::rayleigh(double sigma) {
  require_positive(sigma, "sigma");
  return ParametricModel(ModelKind::kRayleigh, sigma, 0.0);
}

ParametricModel ParametricModel::pareto1(double k, double delta) {
  require_positive(k, "k");
  require_positive(delta, "delta");
  return ParametricModel(ModelKind::kParetoI, k, delta);
}

ParametricModel ParametricModel::weibull(double lambda, double p) {
  require_positive(lambda, "lambda");
  require_positive(p, "p");
  return ParametricModel(ModelKind::kWeibull, lambda, p);
}

double ParametricModel::log_survival(double x) const {
  const double a = params_[0];
  const double b = params_[1];
  if (x <= support_lower()) return 0.0;
  switch (kind_) {
    case ModelKind::kUniform:
      return x >= a ? -kInf : std::log1p(-x / a);
    case ModelKind::kExponential:
      return -a * x;
    case ModelKind::kRayleigh:
      return -x * x / (2.0 * a * a);
    case ModelKind::kParetoI:
      return b * std::log(a / x);
    case ModelKind::kWeibull:
      return -std::pow(a * x, b);
  }
  return 0.0;
}

double ParametricModel::survival(double x) const {
  if (kind_ == ModelKind::kUniform) {
    return 1.0 - std::clamp(x / params_[0], 0.0, 1.0);
  }
  return std::exp(log_survival(x));
}

double ParametricModel::cdf(double x) const {
  if (kind_ == ModelKind::kUniform) return std::clamp(x / params_[0], 0.0, 1.0);
  return -std::expm1(log_survival(x));
}

double ParametricModel::log_pdf(double x) const {
  const double a = params_[0];
  const double b = params_[1];
  if (x < support_lower() || x > support_upper()) return -kInf;
  switch (kind_) {
    case ModelKind::kUniform:
      return -std::log(a);
    case ModelKind::kExponential:
      return std::log(a) - a * x;
    case ModelKind::kRayleigh:
      return std::log(x / (a * a)) - x * x / (2.0 * a * a);
    case ModelKind::kParetoI:
      return std::log(b) + b * std::log(a) - (b + 1.0) * std::log(x);
    case ModelKind::kWeibull:
      return std::log(b * a) + (b - 1.0) * std::log(a * x) - std::pow(a * x, b);
  }
  return -kInf;
}

double ParametricModel::quantile(double u) const {
  require_open_unit(u);
  const double a = params_[0];
  const double b = params_[1];
  switch (kind_) {
    case ModelKind::kUniform:
      return a * u;
    case ModelKind::kExponential:
      return neg_log1m(u) / a;
    case ModelKind::kRayleigh:
      return a * std::sqrt(2.0 * neg_log1m(u));
    case ModelKind::kParetoI:
      return a * std::exp(neg_log1m(u) / b);
    case ModelKind::kWeibull:
      return std::pow(neg_log1m(u), 1.0 / b) / a;
  }
  return 0.0;
}

double ParametricModel::support_lower() const {
  return kind_ == ModelKind::kParetoI ? params_[0] : 0.0;
}

double ParametricModel::support_upper() const {
  return kind_ == ModelKind::kUniform ? params_[0] : kInf;
}

std::string ParametricModel::label() const {
  const std::string a = format_double(params_[0]);
  const std::string b = format_double(params_[1]);
  switch (kind_) {
    case ModelKind::kUniform:
      return "uniform:theta=" + a;
    case ModelKind::kExponential:
      return "exp:lambda=" + a;
    case ModelKind::kRayleigh:
      return "rayleigh:sigma=" + a;
    case ModelKind::kParetoI:
      return "pareto1:k=" + a + ",delta=" + b;
    case ModelKind::kWeibull:
      return "weibull:lambda=" + a + ",p=" + b;
  }
  return {};
}

// --- AlternativeModel ------------------------------------------------------

AlternativeModel::AlternativeModel(AlternativeFamily family, double j)
    : family_(family), j_(j) {
  require_positive(j, "j");
}

bool AlternativeModel::is_standard() const {
  switch (family_) {
    case AlternativeFamily::kA:
    case AlternativeFamily::kC:
      return j_ == 1.5 || j_ == 2.0;
    case AlternativeFamily::kB:
      return j_ == 1.5 || j_ == 2.0 || j_ == 3.0;
  }
  return false;
}

double AlternativeModel::cdf(double z) const {
  if (z <= 0.0) return 0.0;
  if (z >= 1.0) return 1.0;
  return std::clamp(raw_cdf(z), 0.0, 1.0);
}

double AlternativeModel::raw_cdf(double z) const {
  const double scale = std::pow(2.0, j_ - 1.0);
  switch (family_) {
    case AlternativeFamily::kA:
      return 1.0 - std::pow(1.0 - z, j_);
    case AlternativeFamily::kB:
      return z <= 0.5 ? scale * std::pow(z, j_)
                      : 1.0 - scale * std::pow(1.0 - z, j_);
    case AlternativeFamily::kC:
      return z <= 0.5 ? 0.5 - scale * std::pow(0.5 - z, j_)
                      : 0.5 + scale * std::pow(z - 0.5, j_);
  }
  return 0.0;
}

double AlternativeModel::quantile(double u) const {
  require_open_unit(u);
  const double scale = std::pow(2.0, j_ - 1.0);
  const double inv = 1.0 / j_;
  switch (family_) {
    case AlternativeFamily::kA:
      return -std::expm1(std::log1p(-u) * inv);
    case AlternativeFamily::kB:
      return u <= 0.5 ? std::pow(u / scale, inv)
                      : 1.0 - std::pow((1.0 - u) / scale, inv);
    case AlternativeFamily::kC:
      return u <= 0.5 ? 0.5 - std::pow((0.5 - u) / scale, inv)
                      : 0.5 + std::pow((u - 0.5) / scale, inv);
  }
  return 0.0;
}

std::string AlternativeModel::label() const {
  const char* family = family_ == AlternativeFamily::kA   ? "A"
                       : family_ == AlternativeFamily::kB ? "B"
                                                          : "C";
  return std::string("alt:") + family + ",j=" + format_double(j_);
}

std::vector<AlternativeModel> AlternativeModel::standard_set() {
  using F = AlternativeFamily;
  return {{F::kA, 1.5}, {F::kA, 2.0}, {F::kB, 1.5}, {F::kB, 2.0},
          {F::kB, 3.0}, {F::kC, 1.5}, {F::kC, 2.0}};
}

// --- Model dispatch and sampling -------------------------------------------

double cdf(const Model& model, double x) {
  return std::visit([x](const auto& m) { return m.cdf(x); }, model);
}

double quantile(const Model& model, double u) {
  return std::visit([u](const auto& m) { return m.quantile(u); }, model);
}

std::string label(const Model& model) {
  return std::visit([](const auto& m) { return m.label(); }, model);
}

void draw_into(const Model& model, std::span<double> out,
               RandomStream& stream) {
  std::visit(
      [&](const auto& m) {
        for (double& x : out) x = m.quantile(stream.uniform());
      },
      model);
}

std::vector<double> draw(const Model& model, std::size_t n,
                         RandomStream& stream) {
  if (n < 1) throw DomainError("need n >= 1 draws");
  std::vector<double> out(n);
  draw_into(model, out, stream);
  return out;
}

Sample sample(const Model& model, std::size_t n, RandomStream& stream) {
  return Sample(draw(model, n, stream));
}

// --- Measures --------------------------------------------------------------

double closed_wcrte(const ParametricModel& model, const TsallisOrder& order) {
  if (order.is_wcre_limit()) return closed_wcre(model);
  const double alpha = order.alpha();
  const double a = model.first();
  const double b = model.second();
  switch (model.kind()) {
    case ModelKind::kUniform:
      return a * a * (alpha + 4.0) / (6.0 * (alpha + 1.0) * (alpha + 2.0));
    case ModelKind::kExponential:
      return (alpha + 1.0) / (alpha * a * a);
    case ModelKind::kRayleigh:
      return a * a / alpha;
    case ModelKind::kParetoI:
      if (!(alpha > 1.0) || !pareto_measure_finite(model, alpha)) {
        throw DomainError(
            "closed-form WCRTE of " + model.label() +
            " needs alpha > 1, delta > 2 and delta*alpha > 2 (alpha = " +
            format_double(alpha) + ")");
      }
      return b * a * a / ((b - 2.0) * (b * alpha - 2.0));
    case ModelKind::kWeibull:
      return std::tgamma(2.0 / b) * (1.0 - std::pow(alpha, -2.0 / b)) /
             (b * a * a * (alpha - 1.0));
  }
  return 0.0;
}

double closed_wcre(const ParametricModel& model) {
  if (model.kind() == ModelKind::kParetoI && !(model.second() > 2.0)) {
    throw DomainError("WCRE of " + model.label() +
                      " diverges (needs delta > 2)");
  }
  return integrate_over_tail(
      model, [&model](double x) { return wcre_integrand(model, x); },
      kMeasureTol);
}

double integrated_wcrte(const ParametricModel& model,
                        const TsallisOrder& order) {
  if (order.is_wcre_limit()) return closed_wcre(model);
  const double alpha = order.alpha();
  if (model.kind() == ModelKind::kParetoI &&
      !pareto_measure_finite(model, alpha)) {
    throw DomainError("WCRTE of " + model.label() + " diverges at alpha = " +
                      format_double(alpha));
  }
  return integrate_over_tail(
      model,
      [&model, alpha](double x) { return wcrte_integrand(model, alpha, x); },
      kMeasureTol);
}

double differential_entropy(const ParametricModel& model) {
  return log_density_integral(model, [&model](double x) {
    const double lf = model.log_pdf(x);
    if (lf == -kInf) return 0.0;
    return -std::exp(lf) * lf;
  });
}

double expected_log(const ParametricModel& model) {
  return log_density_integral(model, [&model](double x) {
    const double lf = model.log_pdf(x);
    if (lf == -kInf || x <= 0.0) return 0.0;
    return std::exp(lf) * std::log(x);
  });
}

double entropy_offset(const TsallisOrder& order) {
  Integrand integrand;
  if (order.is_wcre_limit()) {
    integrand = [](double u) {
      return std::log(std::max(-u * std::log(u), kLogArgFloor));
    };
  } else {
    const double alpha = order.alpha();
    // (u - u^alpha) / (alpha - 1) = -u expm1((alpha-1) log u) / (alpha - 1)
    integrand = [alpha](double u) {
      const double arg =
          -u * std::expm1((alpha - 1.0) * std::log(u)) / (alpha - 1.0);
      return std::log(std::max(arg, kLogArgFloor));
    };
  }
  return integrate_singular(integrand, 0.0, 0.5, kBoundTol) +
         integrate_singular(integrand, 0.5, 1.0, kBoundTol);
}

double wcrte_lower_bound(const ParametricModel& model,
                         const TsallisOrder& order) {
  return std::exp(differential_entropy(model) + expected_log(model) +
                  entropy_offset(order));
}

}  // namespace wcrte
