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

#include "wcrte/quadrature.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "wcrte/error.h"
#include "wcrte/text_io.h"

namespace wcrte {
namespace {

constexpr double kRelativeTarget = 1e-13;

void check(double value, double error, double l1, double abs_tol,
           const char* method) {
  if (!std::isfinite(value)) {
    throw NumericError(std::string(method) + " quadrature: non-finite result");
  }
  const double allowed = std::max(abs_tol, abs_tol * l1);
  if (!(error <= allowed)) {
    throw NumericError(std::string(method) + " quadrature: error estimate " +
                       format_double(error) + " exceeds tolerance " +
                       format_double(allowed));
  }
}

}  // namespace

double integrate_smooth(const Integrand& f, double a, double b,
                        double abs_tol) {
  if (a == b) return 0.0;
  double error = 0.0;
  double l1 = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
          f, a, b, 20, kRelativeTarget, &error, &l1);
  check(value, error, l1, abs_tol, "Gauss-Kronrod");
  return value;
}

double integrate_singular(const Integrand& f, double a, double b,
                          double abs_tol) {
  if (a == b) return 0.0;
  double error = 0.0;
  double l1 = 0.0;
  double value = 0.0;
  if (std::isinf(b)) {
    boost::math::quadrature::exp_sinh<double> integrator;
    value = integrator.integrate(f, a, b, kRelativeTarget, &error, &l1);
  } else {
    boost::math::quadrature::tanh_sinh<double> integrator;
    value = integrator.integrate(f, a, b, kRelativeTarget, &error, &l1);
  }
  check(value, error, l1, abs_tol, "double-exponential");
  return value;
}

}  // namespace wcrte
