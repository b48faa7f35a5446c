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

#ifndef WCRTE_GOF_H_
#define WCRTE_GOF_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wcrte/diagnostics.h"
#include "wcrte/distributions.h"
#include "wcrte/parallel.h"
#include "wcrte/sample.h"
#include "wcrte/tsallis_order.h"

namespace wcrte::gof {

// Tests of H0: X ~ U(0,1) for samples supported on [0,1].
//
// The WCRTE/WCRE statistics reject in both tails. KS, CvM and AD reject for
// large values, ENT for small values. All critical values are simulated under
// H0.

enum class TestKind { kWcrte, kWcre, kKs, kCvm, kAd, kEnt };
enum class Tail { kTwoSided, kUpper, kLower };

class TestSpec {
 public:
  // The WCRE limit order yields the kWcre test.
  static TestSpec wcrte(const TsallisOrder& order);
  static TestSpec wcre() { return TestSpec(TestKind::kWcre); }
  static TestSpec ks() { return TestSpec(TestKind::kKs); }
  static TestSpec cvm() { return TestSpec(TestKind::kCvm); }
  static TestSpec ad() { return TestSpec(TestKind::kAd); }
  // Unset window: default_ent_window(n).
  static TestSpec ent(std::optional<int> window = std::nullopt);

  TestKind kind() const { return kind_; }
  Tail tail() const;
  // Finite order for kWcrte, the WCRE limit for kWcre, empty otherwise.
  std::optional<TsallisOrder> order() const;
  std::optional<int> window() const { return window_; }
  int resolved_window(std::size_t n) const;

  // "wcrte", "wcre", "ks", "cvm", "ad" or "ent".
  std::string name() const;
  // Human-readable, e.g. "wcrte(alpha=2)" or "ent(m=auto)".
  std::string label() const;

  friend bool operator==(const TestSpec&, const TestSpec&) = default;

 private:
  explicit TestSpec(TestKind kind) : kind_(kind) {}

  TestKind kind_;
  std::optional<double> alpha_;
  std::optional<int> window_;
};

// The seven-alternative comparison set: WCRE, WCRTE at 2, 5, 7, 10, then
// ENT, KS, CvM, AD.
std::vector<TestSpec> standard_tests();

// floor(sqrt(n)) + 1.
int default_ent_window(std::size_t n);

// Sup of the WCRTE statistic over [0,1] samples: 1/(2 alpha^(alpha/(alpha-1))).
double wcrte_statistic_bound(double alpha);
inline const double kWcreStatisticBound = 1.0 / (2.0 * std::exp(1.0));

// Order at which the H0 value (alpha+4)/(6(alpha+1)(alpha+2)) sits at the
// midpoint of [0, wcrte_statistic_bound(alpha)].
inline constexpr double kAlphaCentered = 6.586487646790636;

// The empirical WCRTE estimator on a [0,1] sample. Throws DomainError if an
// observation exceeds 1.
double test_statistic_wcrte(const Sample& sample, const TsallisOrder& order);
double test_statistic_wcre(const Sample& sample);

// KS:  max_i max(i/n - X_(i), X_(i) - (i-1)/n)
// CvM: 1/(12n) + sum (X_(i) - (2i-1)/(2n))^2
// AD:  -n - (1/n) sum (2i-1) [log X_(i) + log(1 - X_(n+1-i))]
// ENT: (1/n) sum log[(n/(2m)) (X_(k+m) - X_(k-m))], clamped indices
// sorted must be nondecreasing, nonempty and inside [0,1]. AD clamps
// observations into [1e-12, 1-1e-12]; ENT floors each log at -745.
double competitor_statistic(const TestSpec& test,
                            std::span<const double> sorted,
                            Diagnostics* diag = nullptr);

// Any test's statistic.
double statistic(const TestSpec& test, const Sample& sample,
                 Diagnostics* diag = nullptr);

// Rejection region {s <= lower} U {s >= upper}. One-sided tests have the
// unused side at -inf / +inf.
struct CriticalPair {
  std::size_t n = 0;
  TestSpec test = TestSpec::ks();
  double gamma = 0.05;
  double lower = -INFINITY;
  double upper = INFINITY;
  std::size_t replications = 0;
  std::uint64_t seed = 0;
};

struct GofResult {
  double statistic = 0.0;
  CriticalPair pair;
  bool reject = false;
  Diagnostics diagnostics;
};

bool rejects(double statistic, const CriticalPair& pair);
GofResult run_test(const Sample& sample, const CriticalPair& pair);

// Type-7 quantile (linear interpolation between order statistics) of a
// sorted, nonempty range; 0 <= p <= 1.
double type7_quantile(std::span<const double> sorted, double p);

// Simulated critical values from R >= 1000 U(0,1) samples of size n. Two-sided
// tests use the gamma/2 and 1 - gamma/2 quantiles, one-sided tests gamma or
// 1 - gamma. Replication r draws from RandomStream::derive(seed, {2, n, r}),
// so all tests sharing (n, seed) see the same null samples.
CriticalPair critical_values(std::size_t n, const TestSpec& test, double gamma,
                             std::size_t replications, std::uint64_t seed,
                             Threads threads = {});
std::vector<CriticalPair> critical_values(std::size_t n,
                                          const std::vector<TestSpec>& tests,
                                          double gamma,
                                          std::size_t replications,
                                          std::uint64_t seed,
                                          Threads threads = {});
std::vector<CriticalPair> critical_values_serial(
    std::size_t n, const std::vector<TestSpec>& tests, double gamma,
    std::size_t replications, std::uint64_t seed);

struct PowerCell {
  std::string alternative;
  std::size_t n = 0;
  TestSpec test = TestSpec::ks();
  // Resolved ENT window; unset for other tests.
  std::optional<int> m;
  double power = 0.0;
  std::size_t replications = 0;
  std::uint64_t seed = 0;
};

// Fraction of R samples from each alternative rejected by each test, with
// critical values simulated from (n, gamma, R, seed). Alternative k,
// replication r draws from RandomStream::derive(seed, {3, k, n, r}).
std::vector<PowerCell> power_study(const std::vector<Model>& alternatives,
                                   std::size_t n,
                                   const std::vector<TestSpec>& tests,
                                   double gamma, std::size_t replications,
                                   std::uint64_t seed, Threads threads = {});
std::vector<PowerCell> power_study_serial(
    const std::vector<Model>& alternatives, std::size_t n,
    const std::vector<TestSpec>& tests, double gamma,
    std::size_t replications, std::uint64_t seed);

// test,n,alpha,m,gamma,lower,upper,statistic,reject. Pairs without a
// statistic leave the last two columns empty.
std::string critical_pairs_to_csv(const std::vector<CriticalPair>& pairs);
std::string results_to_csv(const std::vector<GofResult>& results);
std::string results_to_json(const std::vector<GofResult>& results);
std::string critical_pairs_to_json(const std::vector<CriticalPair>& pairs);
// alternative,n,test,alpha,m,power,R,seed.
std::string power_to_csv(const std::vector<PowerCell>& cells);
std::string power_to_json(const std::vector<PowerCell>& cells);

}  // namespace wcrte::gof

#endif  // WCRTE_GOF_H_
