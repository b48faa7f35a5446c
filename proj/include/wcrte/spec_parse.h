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

#ifndef WCRTE_SPEC_PARSE_H_
#define WCRTE_SPEC_PARSE_H_

#include <string_view>
#include <vector>

#include "wcrte/distributions.h"
#include "wcrte/estimators.h"
#include "wcrte/gof.h"
#include "wcrte/tsallis_order.h"

namespace wcrte {

// Model strings (keys case-insensitive, values decimal literals):
//   uniform:theta=1   exp:lambda=2   rayleigh:sigma=1
//   pareto1:k=1,delta=3   weibull:lambda=1,p=2   alt:A,j=1.5
// Missing parameters default to 1 (j has no default).
Model parse_model(std::string_view text);
// Same grammar, rejecting alternatives.
ParametricModel parse_parametric_model(std::string_view text);

// "wcre" or "1" -> WCRE limit, otherwise a finite order.
TsallisOrder parse_order(std::string_view text);

// Estimator strings: <measure>:<kind>[,alpha=<a>][,m=<m>][,plotting=n|n+1]
//   measure: wcrte | wcre
//   kind:    emp | v | e | n | l  (or empirical, vasicek, ebrahimi,
//            modified, lstat)
// Window and alpha may be omitted when the caller supplies defaults.
struct ParsedEstimator {
  EstimatorSpec spec;
  bool window_auto = false;
  bool has_alpha = false;
};
ParsedEstimator parse_estimator(std::string_view text);

EstimatorKind parse_estimator_kind(std::string_view text);

// Test strings: wcrte:alpha=2 | wcre | ks | cvm | ad | ent[:m=4]
gof::TestSpec parse_test(std::string_view text);

// Splits "a,b,c" into trimmed items.
std::vector<std::string_view> split_list(std::string_view text, char sep = ',');

}  // namespace wcrte

#endif  // WCRTE_SPEC_PARSE_H_
