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

#ifndef WCRTE_DIAGNOSTICS_H_
#define WCRTE_DIAGNOSTICS_H_

#include <string>
#include <vector>

namespace wcrte {

// Non-fatal conditions raised while computing a value. The value is still
// returned; callers decide whether the flag matters.
enum class Diagnostic : unsigned {
  // p_i = i/n made the i = n term of the WCRE L-statistic log(0); dropped.
  kDroppedLogZeroTerm = 1u << 0,
  // Plug-in asymptotic variance came out negative.
  kNegativeVariance = 1u << 1,
  // Spacing estimator evaluated with 0 < alpha < 1, where the measure needs
  // moments beyond the variance to be finite.
  kAlphaBelowOne = 1u << 2,
  // An observation at 0 or 1 was moved into [1e-12, 1 - 1e-12] (AD test).
  kClampedToOpenInterval = 1u << 3,
  // A zero spacing hit the log floor (ENT test).
  kLogFloorApplied = 1u << 4,
};

class Diagnostics {
 public:
  void raise(Diagnostic d) { bits_ |= static_cast<unsigned>(d); }
  bool has(Diagnostic d) const {
    return (bits_ & static_cast<unsigned>(d)) != 0;
  }
  bool empty() const { return bits_ == 0; }
  void merge(const Diagnostics& other) { bits_ |= other.bits_; }
  std::vector<std::string> messages() const;

 private:
  unsigned bits_ = 0;
};

inline void raise_if(Diagnostics* diag, Diagnostic d) {
  if (diag != nullptr) diag->raise(d);
}

}  // namespace wcrte

#endif  // WCRTE_DIAGNOSTICS_H_
