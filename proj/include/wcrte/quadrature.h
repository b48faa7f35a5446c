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

#ifndef WCRTE_QUADRATURE_H_
#define WCRTE_QUADRATURE_H_

#include <functional>

namespace wcrte {

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod integration of a smooth integrand on [a, b]; b may be
// +infinity. Throws NumericError if the error estimate exceeds abs_tol (or
// abs_tol relative to the L1 norm of the integrand, whichever is larger).
double integrate_smooth(const Integrand& f, double a, double b,
                        double abs_tol);

// Double-exponential integration for integrands with integrable endpoint
// singularities (log terms). Finite [a, b] uses tanh-sinh, b = +infinity uses
// exp-sinh. Same error contract as integrate_smooth.
double integrate_singular(const Integrand& f, double a, double b,
                          double abs_tol);

}  // namespace wcrte

#endif  // WCRTE_QUADRATURE_H_
