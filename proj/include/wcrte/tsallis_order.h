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

#ifndef WCRTE_TSALLIS_ORDER_H_
#define WCRTE_TSALLIS_ORDER_H_

#include <optional>
#include <string>

namespace wcrte {

// Order of the Tsallis-type measure. A finite order satisfies alpha > 0 and
// |alpha - 1| > 1e-12; the alpha -> 1 limit (the WCRE measure) is a separate
// state rather than a float equal to one.
class TsallisOrder {
 public:
  static constexpr double kUnitTolerance = 1e-12;

  // Throws DomainError unless alpha is finite, positive and away from 1.
  static TsallisOrder finite(double alpha);
  static TsallisOrder wcre_limit() { return TsallisOrder(); }

  // Accepts 1 (exactly) as the WCRE limit, everything else as finite(alpha).
  static TsallisOrder from_label(double alpha);

  bool is_wcre_limit() const { return !alpha_.has_value(); }

  // Throws DomainError for the WCRE limit.
  double alpha() const;

  // Numeric label used in tables: the order itself, or 1 for the limit.
  double label() const { return alpha_.value_or(1.0); }
  std::string to_string() const;

  friend bool operator==(const TsallisOrder&, const TsallisOrder&) = default;

 private:
  TsallisOrder() = default;
  explicit TsallisOrder(double alpha) : alpha_(alpha) {}

  std::optional<double> alpha_;
};

}  // namespace wcrte

#endif  // WCRTE_TSALLIS_ORDER_H_
