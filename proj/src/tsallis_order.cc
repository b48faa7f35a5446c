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

#include "wcrte/tsallis_order.h"

#include <cmath>

#include "wcrte/error.h"
#include "wcrte/text_io.h"

namespace wcrte {

TsallisOrder TsallisOrder::finite(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw DomainError("Tsallis order must be finite and positive, got " +
                      format_double(alpha));
  }
  if (std::fabs(alpha - 1.0) <= kUnitTolerance) {
    throw DomainError(
        "Tsallis order 1 is the WCRE limit; use TsallisOrder::wcre_limit()");
  }
  return TsallisOrder(alpha);
}

TsallisOrder TsallisOrder::from_label(double alpha) {
  if (alpha == 1.0) return wcre_limit();
  return finite(alpha);
}

double TsallisOrder::alpha() const {
  if (!alpha_) throw DomainError("the WCRE limit has no finite order");
  return *alpha_;
}

std::string TsallisOrder::to_string() const {
  return alpha_ ? format_double(*alpha_) : std::string("1");
}

}  // namespace wcrte
