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

#ifndef WCRTE_MC_H_
#define WCRTE_MC_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wcrte/distributions.h"
#include "wcrte/estimators.h"
#include "wcrte/parallel.h"
#include "wcrte/random.h"

namespace wcrte::mc {

// How windowed estimators choose m for each sample size.
enum class WindowMode {
  kSweep,      // every m in [1, ceil(n/2) - 1]
  kHeuristic,  // heuristic_window(kind, n)
  kList,       // the explicit list, entries with m >= n/2 skipped
};

struct EstimatorPattern {
  EstimatorKind kind = EstimatorKind::kEmpiricalPlugin;
  WindowMode window_mode = WindowMode::kSweep;
  std::vector<int> windows;
  std::optional<Plotting> plotting;
};

// Where the true value for bias/MSE comes from.
enum class TruthSource {
  kTable,       // closed_wcrte / closed_wcre
  kQuadrature,  // integrated_wcrte
};

struct McStudyConfig {
  std::vector<ParametricModel> models;
  std::vector<std::size_t> sample_sizes;
  std::vector<TsallisOrder> alphas;
  std::vector<EstimatorPattern> estimators;
  std::size_t replications = 10000;
  std::uint64_t seed = kDefaultSeed;
  TruthSource truth = TruthSource::kTable;

  // Throws DomainError on an empty grid, R < 1, n < 2, or a window list
  // with no admissible entry for some n.
  void validate() const;
};

struct McCell {
  std::string model;
  std::size_t n = 0;
  TsallisOrder alpha = TsallisOrder::wcre_limit();
  EstimatorKind kind = EstimatorKind::kEmpiricalPlugin;
  std::optional<int> m;
  double truth = 0.0;
  double bias = 0.0;
  double mse = 0.0;
  // Monte Carlo standard error of mse.
  double mse_se = 0.0;
  std::size_t replications = 0;
  std::uint64_t seed = 0;
};

struct SkippedCell {
  std::string model;
  TsallisOrder alpha = TsallisOrder::wcre_limit();
  std::string reason;
};

struct McStudyResult {
  std::vector<McCell> cells;
  std::vector<SkippedCell> skipped;
};

// For every (model, n) one sample per replication is drawn and every
// (alpha, estimator, m) column is evaluated on it. Replication r of the pair
// (model index k, n) uses RandomStream::derive(seed, {1, k, n, r}), and
// per-column sums are reduced in replication order, so the result is
// bit-identical for any thread count.
McStudyResult run_study(const McStudyConfig& config, Threads threads = {});

// Serial reference implementation of run_study.
McStudyResult run_study_serial(const McStudyConfig& config);

struct WindowKey {
  std::string model;
  std::size_t n;
  double alpha;
  EstimatorKind kind;
  auto operator<=>(const WindowKey&) const = default;
};

// argmin over m of mse for each (model, n, alpha, kind); ties go to the
// smaller m. Cells without a window are ignored. Throws DomainError when no
// windowed cell is present.
std::map<WindowKey, int> best_window(const std::vector<McCell>& cells);

// Window-size rule of thumb: Vasicek and Ebrahimi use floor(n/2) - 1 for
// n <= 20 and floor(n/3) above; ModifiedN uses floor(n/4) + 1. The result is
// clamped into [1, ceil(n/2) - 1]. Requires n >= 4 and a windowed kind.
int heuristic_window(EstimatorKind kind, std::size_t n);

// Largest admissible window, ceil(n/2) - 1.
int max_window(std::size_t n);

// JSON document mirroring McStudyConfig:
//   {"models": ["exp:lambda=1"], "sample_sizes": [10, 20],
//    "alphas": [2, "wcre"], "replications": 10000, "seed": 12648430,
//    "truth": "table",
//    "estimators": [{"kind": "vasicek", "windows": "sweep"},
//                   {"kind": "lstat", "plotting": "n+1"},
//                   {"kind": "modified", "windows": [2, 3]}]}
McStudyConfig parse_config_json(const std::string& text);

// CSV with header model,n,alpha,estimator,m,bias,mse,R,seed.
std::string cells_to_csv(const std::vector<McCell>& cells);
std::string cells_to_json(const std::vector<McCell>& cells);

}  // namespace wcrte::mc

#endif  // WCRTE_MC_H_
