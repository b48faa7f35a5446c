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

#include "wcrte/gof.h"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "summation.h"
#include "wcrte/error.h"
#include "wcrte/estimators.h"
#include "wcrte/random.h"
#include "wcrte/text_io.h"

namespace wcrte::gof {
namespace {

using internal::CompensatedSum;

constexpr double kOpenEps = 1e-12;
constexpr double kLogFloor = -745.0;

void check_unit_sample(std::span<const double> sorted) {
  if (sorted.empty()) throw DomainError("empty sample");
  if (!(sorted.front() >= 0.0) || !(sorted.back() <= 1.0)) {
    throw DomainError("uniformity tests need observations in [0, 1]");
  }
}

double ks(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    d = std::max({d, k / n - x[i], x[i] - (k - 1.0) / n});
  }
  return d;
}

double cvm(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  CompensatedSum s;
  s.add(1.0 / (12.0 * n));
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = x[i] - (2.0 * static_cast<double>(i + 1) - 1.0) / (2.0 * n);
    s.add(t * t);
  }
  return s.value();
}

double ad(std::span<const double> x, Diagnostics* diag) {
  const std::size_t n = x.size();
  const double nd = static_cast<double>(n);
  auto clamp = [&](double v) {
    if (v < kOpenEps || v > 1.0 - kOpenEps) {
      raise_if(diag, Diagnostic::kClampedToOpenInterval);
      return std::clamp(v, kOpenEps, 1.0 - kOpenEps);
    }
    return v;
  };
  CompensatedSum s;
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = clamp(x[i]);
    const double hi = clamp(x[n - 1 - i]);
    s.add((2.0 * static_cast<double>(i + 1) - 1.0) *
          (std::log(lo) + std::log1p(-hi)));
  }
  return -nd - s.value() / nd;
}

double ent(std::span<const double> x, int m, Diagnostics* diag) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  const double nd = static_cast<double>(n);
  auto at = [&](std::ptrdiff_t k) {
    return x[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(k, 1, n) - 1)];
  };
  CompensatedSum s;
  for (std::ptrdiff_t k = 1; k <= n; ++k) {
    const double gap = at(k + m) - at(k - m);
    double term = std::log(nd / (2.0 * m) * gap);
    if (!(term >= kLogFloor)) {
      raise_if(diag, Diagnostic::kLogFloorApplied);
      term = kLogFloor;
    }
    s.add(term);
  }
  return s.value() / nd;
}

double alpha_column(const TestSpec& test, bool& has) {
  const auto order = test.order();
  has = order.has_value();
  return has ? order->label() : 0.0;
}

std::string optional_number(bool has, double v) {
  return has ? format_double(v) : std::string();
}

// Statistics of every test on one sorted sample.
void all_statistics(const std::vector<TestSpec>& tests,
                    std::vector<double>& values, double* out) {
  std::sort(values.begin(), values.end());
  std::optional<Sample> s;
  for (std::size_t t = 0; t < tests.size(); ++t) {
    const TestKind kind = tests[t].kind();
    if (kind == TestKind::kWcrte || kind == TestKind::kWcre) {
      if (!s) s.emplace(values);
      out[t] = statistic(tests[t], *s);
    } else {
      out[t] = competitor_statistic(tests[t], values);
    }
  }
}

CriticalPair pair_from(std::vector<double>& stats, std::size_t n,
                       const TestSpec& test, double gamma, std::size_t reps,
                       std::uint64_t seed) {
  std::sort(stats.begin(), stats.end());
  CriticalPair pair;
  pair.n = n;
  pair.test = test;
  pair.gamma = gamma;
  pair.replications = reps;
  pair.seed = seed;
  switch (test.tail()) {
    case Tail::kTwoSided:
      pair.lower = type7_quantile(stats, gamma / 2.0);
      pair.upper = type7_quantile(stats, 1.0 - gamma / 2.0);
      break;
    case Tail::kUpper:
      pair.upper = type7_quantile(stats, 1.0 - gamma);
      break;
    case Tail::kLower:
      pair.lower = type7_quantile(stats, gamma);
      break;
  }
  return pair;
}

void check_study_args(std::size_t n, const std::vector<TestSpec>& tests,
                      double gamma, std::size_t reps) {
  if (n < 2) throw DomainError("uniformity tests need n >= 2");
  if (tests.empty()) throw DomainError("no tests requested");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw DomainError("significance level must lie in (0, 1)");
  }
  if (reps < 1000) {
    throw DomainError("critical values need at least 1000 replications");
  }
}

template <typename Loop>
std::vector<CriticalPair> critical_impl(std::size_t n,
                                        const std::vector<TestSpec>& tests,
                                        double gamma, std::size_t reps,
                                        std::uint64_t seed, Loop loop) {
  check_study_args(n, tests, gamma, reps);
  const std::size_t width = tests.size();
  std::vector<double> stats(reps * width);
  loop(reps, [&](std::size_t r) {
    auto stream = RandomStream::derive(seed, {2, n, r});
    std::vector<double> values(n);
    for (auto& v : values) v = stream.uniform();
    all_statistics(tests, values, stats.data() + r * width);
  });
  std::vector<CriticalPair> out;
  std::vector<double> column(reps);
  for (std::size_t t = 0; t < width; ++t) {
    for (std::size_t r = 0; r < reps; ++r) column[r] = stats[r * width + t];
    out.push_back(pair_from(column, n, tests[t], gamma, reps, seed));
  }
  return out;
}

template <typename Loop>
std::vector<PowerCell> power_impl(const std::vector<Model>& alternatives,
                                  std::size_t n,
                                  const std::vector<TestSpec>& tests,
                                  double gamma, std::size_t reps,
                                  std::uint64_t seed, Loop loop) {
  const auto pairs = critical_impl(n, tests, gamma, reps, seed, loop);
  const std::size_t width = tests.size();
  std::vector<PowerCell> out;
  for (std::size_t k = 0; k < alternatives.size(); ++k) {
    const Model& alt = alternatives[k];
    std::vector<unsigned char> hits(reps * width);
    loop(reps, [&](std::size_t r) {
      auto stream = RandomStream::derive(seed, {3, k, n, r});
      std::vector<double> values = draw(alt, n, stream);
      std::vector<double> row(width);
      all_statistics(tests, values, row.data());
      for (std::size_t t = 0; t < width; ++t) {
        hits[r * width + t] = rejects(row[t], pairs[t]) ? 1 : 0;
      }
    });
    for (std::size_t t = 0; t < width; ++t) {
      std::size_t count = 0;
      for (std::size_t r = 0; r < reps; ++r) count += hits[r * width + t];
      PowerCell cell;
      cell.alternative = label(alt);
      cell.n = n;
      cell.test = tests[t];
      if (tests[t].kind() == TestKind::kEnt) {
        cell.m = tests[t].resolved_window(n);
      }
      cell.power = static_cast<double>(count) / static_cast<double>(reps);
      cell.replications = reps;
      cell.seed = seed;
      out.push_back(std::move(cell));
    }
  }
  return out;
}

auto parallel_loop(Threads threads) {
  return [threads](std::size_t count, auto&& fn) {
    parallel_for(count, threads, fn);
  };
}

auto serial_loop() {
  return [](std::size_t count, auto&& fn) { serial_for(count, fn); };
}

std::string pair_csv_prefix(const CriticalPair& p) {
  bool has_alpha = false;
  const double a = alpha_column(p.test, has_alpha);
  const bool has_m = p.test.kind() == TestKind::kEnt;
  std::ostringstream os;
  os << p.test.name() << ',' << p.n << ',' << optional_number(has_alpha, a)
     << ',' << (has_m ? std::to_string(p.test.resolved_window(p.n)) : "")
     << ',' << format_double(p.gamma) << ',' << format_double(p.lower) << ','
     << format_double(p.upper);
  return os.str();
}

nlohmann::json pair_json(const CriticalPair& p) {
  bool has_alpha = false;
  const double a = alpha_column(p.test, has_alpha);
  nlohmann::json j{{"test", p.test.name()},
                   {"label", p.test.label()},
                   {"n", p.n},
                   {"alpha", nullptr},
                   {"m", nullptr},
                   {"gamma", p.gamma},
                   {"lower", nullptr},
                   {"upper", nullptr},
                   {"R", p.replications},
                   {"seed", p.seed}};
  if (has_alpha) j["alpha"] = a;
  if (p.test.kind() == TestKind::kEnt) j["m"] = p.test.resolved_window(p.n);
  if (std::isfinite(p.lower)) j["lower"] = p.lower;
  if (std::isfinite(p.upper)) j["upper"] = p.upper;
  return j;
}

}  // namespace

// --- TestSpec --------------------------------------------------------------

TestSpec TestSpec::wcrte(const TsallisOrder& order) {
  if (order.is_wcre_limit()) return wcre();
  TestSpec t(TestKind::kWcrte);
  t.alpha_ = order.alpha();
  return t;
}

TestSpec TestSpec::ent(std::optional<int> window) {
  if (window && *window < 1) throw DomainError("ENT window must be >= 1");
  TestSpec t(TestKind::kEnt);
  t.window_ = window;
  return t;
}

Tail TestSpec::tail() const {
  switch (kind_) {
    case TestKind::kWcrte:
    case TestKind::kWcre:
      return Tail::kTwoSided;
    case TestKind::kEnt:
      return Tail::kLower;
    default:
      return Tail::kUpper;
  }
}

std::optional<TsallisOrder> TestSpec::order() const {
  if (kind_ == TestKind::kWcrte) return TsallisOrder::finite(*alpha_);
  if (kind_ == TestKind::kWcre) return TsallisOrder::wcre_limit();
  return std::nullopt;
}

int TestSpec::resolved_window(std::size_t n) const {
  return window_ ? *window_ : default_ent_window(n);
}

std::string TestSpec::name() const {
  switch (kind_) {
    case TestKind::kWcrte:
      return "wcrte";
    case TestKind::kWcre:
      return "wcre";
    case TestKind::kKs:
      return "ks";
    case TestKind::kCvm:
      return "cvm";
    case TestKind::kAd:
      return "ad";
    case TestKind::kEnt:
      return "ent";
  }
  return {};
}

std::string TestSpec::label() const {
  if (kind_ == TestKind::kWcrte) {
    return "wcrte(alpha=" + format_double(*alpha_) + ")";
  }
  if (kind_ == TestKind::kEnt) {
    return "ent(m=" + (window_ ? std::to_string(*window_) : "auto") + ")";
  }
  return name();
}

std::vector<TestSpec> standard_tests() {
  return {TestSpec::wcre(),
          TestSpec::wcrte(TsallisOrder::finite(2)),
          TestSpec::wcrte(TsallisOrder::finite(5)),
          TestSpec::wcrte(TsallisOrder::finite(7)),
          TestSpec::wcrte(TsallisOrder::finite(10)),
          TestSpec::ent(),
          TestSpec::ks(),
          TestSpec::cvm(),
          TestSpec::ad()};
}

int default_ent_window(std::size_t n) {
  return static_cast<int>(std::floor(std::sqrt(static_cast<double>(n)))) + 1;
}

double wcrte_statistic_bound(double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha)) {
    throw DomainError("bound needs a finite alpha > 0, alpha != 1");
  }
  return 0.5 * std::pow(alpha, -alpha / (alpha - 1.0));
}

// --- Statistics ------------------------------------------------------------

double test_statistic_wcrte(const Sample& sample, const TsallisOrder& order) {
  check_unit_sample(sample.sorted());
  return wcrte_empirical(sample, order);
}

double test_statistic_wcre(const Sample& sample) {
  check_unit_sample(sample.sorted());
  return wcre_empirical(sample);
}

double competitor_statistic(const TestSpec& test,
                            std::span<const double> sorted,
                            Diagnostics* diag) {
  check_unit_sample(sorted);
  switch (test.kind()) {
    case TestKind::kKs:
      return ks(sorted);
    case TestKind::kCvm:
      return cvm(sorted);
    case TestKind::kAd:
      return ad(sorted, diag);
    case TestKind::kEnt:
      return ent(sorted, test.resolved_window(sorted.size()), diag);
    default:
      throw DomainError(test.name() + " is not a competitor statistic");
  }
}

double statistic(const TestSpec& test, const Sample& sample,
                 Diagnostics* diag) {
  switch (test.kind()) {
    case TestKind::kWcrte:
      return test_statistic_wcrte(sample, *test.order());
    case TestKind::kWcre:
      return test_statistic_wcre(sample);
    default:
      return competitor_statistic(test, sample.sorted(), diag);
  }
}

bool rejects(double statistic, const CriticalPair& pair) {
  return statistic <= pair.lower || statistic >= pair.upper;
}

GofResult run_test(const Sample& sample, const CriticalPair& pair) {
  GofResult res;
  res.pair = pair;
  res.statistic = statistic(pair.test, sample, &res.diagnostics);
  res.reject = rejects(res.statistic, pair);
  return res;
}

double type7_quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw DomainError("quantile of an empty range");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile level outside [0,1]");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

// --- Simulation drivers ----------------------------------------------------

CriticalPair critical_values(std::size_t n, const TestSpec& test, double gamma,
                             std::size_t replications, std::uint64_t seed,
                             Threads threads) {
  return critical_values(n, std::vector<TestSpec>{test}, gamma, replications,
                         seed, threads)
      .front();
}

std::vector<CriticalPair> critical_values(std::size_t n,
                                          const std::vector<TestSpec>& tests,
                                          double gamma,
                                          std::size_t replications,
                                          std::uint64_t seed,
                                          Threads threads) {
  return critical_impl(n, tests, gamma, replications, seed,
                       parallel_loop(threads));
}

std::vector<CriticalPair> critical_values_serial(
    std::size_t n, const std::vector<TestSpec>& tests, double gamma,
    std::size_t replications, std::uint64_t seed) {
  return critical_impl(n, tests, gamma, replications, seed, serial_loop());
}

std::vector<PowerCell> power_study(const std::vector<Model>& alternatives,
                                   std::size_t n,
                                   const std::vector<TestSpec>& tests,
                                   double gamma, std::size_t replications,
                                   std::uint64_t seed, Threads threads) {
  return power_impl(alternatives, n, tests, gamma, replications, seed,
                    parallel_loop(threads));
}

std::vector<PowerCell> power_study_serial(
    const std::vector<Model>& alternatives, std::size_t n,
    const std::vector<TestSpec>& tests, double gamma,
    std::size_t replications, std::uint64_t seed) {
  return power_impl(alternatives, n, tests, gamma, replications, seed,
                    serial_loop());
}

// --- Output ----------------------------------------------------------------

std::string critical_pairs_to_csv(const std::vector<CriticalPair>& pairs) {
  std::string out = "test,n,alpha,m,gamma,lower,upper,statistic,reject\n";
  for (const auto& p : pairs) out += pair_csv_prefix(p) + ",,\n";
  return out;
}

std::string results_to_csv(const std::vector<GofResult>& results) {
  std::string out = "test,n,alpha,m,gamma,lower,upper,statistic,reject\n";
  for (const auto& r : results) {
    out += pair_csv_prefix(r.pair) + ',' + format_double(r.statistic) + ',' +
           (r.reject ? "1" : "0") + '\n';
  }
  return out;
}

std::string results_to_json(const std::vector<GofResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    auto j = pair_json(r.pair);
    j["statistic"] = r.statistic;
    j["reject"] = r.reject;
    j["diagnostics"] = r.diagnostics.messages();
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string critical_pairs_to_json(const std::vector<CriticalPair>& pairs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : pairs) arr.push_back(pair_json(p));
  return arr.dump(2) + "\n";
}

std::string power_to_csv(const std::vector<PowerCell>& cells) {
  std::ostringstream os;
  os << "alternative,n,test,alpha,m,power,R,seed\n";
  for (const auto& c : cells) {
    bool has_alpha = false;
    const double a = alpha_column(c.test, has_alpha);
    os << '"' << c.alternative << "\"," << c.n << ',' << c.test.name() << ','
       << optional_number(has_alpha, a) << ','
       << (c.m ? std::to_string(*c.m) : "") << ',' << format_double(c.power)
       << ',' << c.replications << ',' << c.seed << '\n';
  }
  return os.str();
}

std::string power_to_json(const std::vector<PowerCell>& cells) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cells) {
    bool has_alpha = false;
    const double a = alpha_column(c.test, has_alpha);
    nlohmann::json j{{"alternative", c.alternative},
                     {"n", c.n},
                     {"test", c.test.name()},
                     {"alpha", nullptr},
                     {"m", nullptr},
                     {"power", c.power},
                     {"R", c.replications},
                     {"seed", c.seed}};
    if (has_alpha) j["alpha"] = a;
    if (c.m) j["m"] = *c.m;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace wcrte::gof
