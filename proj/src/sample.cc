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

#include "wcrte/sample.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "wcrte/error.h"
#include "wcrte/text_io.h"

namespace wcrte {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw DomainError("need n >= 2 observations, got " +
                      std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("observations must be finite and nonnegative, got " +
                        format_double(v));
    }
  }
  sorted_ = values_;
  std::sort(sorted_.begin(), sorted_.end());
}

double Sample::order_stat(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(sorted_.size());
  return sorted_[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(i, 1, n) - 1)];
}

Sample Sample::scaled(double theta) const {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw DomainError("scale factor must be positive, got " +
                      format_double(theta));
  }
  std::vector<double> v(values_);
  for (double& x : v) x *= theta;
  return Sample(std::move(v));
}

}  // namespace wcrte
