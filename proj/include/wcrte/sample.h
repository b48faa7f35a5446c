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

#ifndef WCRTE_SAMPLE_H_
#define WCRTE_SAMPLE_H_

#include <cstddef>
#include <span>
#include <vector>

namespace wcrte {

// Immutable batch of n >= 2 finite, nonnegative observations together with
// its order statistics X_(1) <= ... <= X_(n).
class Sample {
 public:
  // Throws DomainError for n < 2, negative or non-finite values.
  explicit Sample(std::vector<double> values);

  std::size_t size() const { return sorted_.size(); }
  std::span<const double> values() const { return values_; }
  std::span<const double> sorted() const { return sorted_; }

  // X_(i) with 1-based i clamped into [1, n].
  double order_stat(std::ptrdiff_t i) const;

  // The sample theta * X for theta > 0.
  Sample scaled(double theta) const;

 private:
  std::vector<double> values_;
  std::vector<double> sorted_;
};

// X_(max(1, min(n, i))).
inline double clamp_order_stat(const Sample& sample, std::ptrdiff_t i) {
  return sample.order_stat(i);
}

}  // namespace wcrte

#endif  // WCRTE_SAMPLE_H_
