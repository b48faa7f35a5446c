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

#include "wcrte/mc.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "summation.h"
#include "wcrte/error.h"
#include "wcrte/sample.h"
#include "wcrte/spec_parse.h"
#include "wcrte/text_io.h"

namespace wcrte::mc {
namespace {

using internal::CompensatedSum;

bool is_windowed(EstimatorKind kind) {
  return kind == EstimatorKind::kVasicek || kind == EstimatorKind::kEbrahimi ||
         kind == EstimatorKind::kModifiedN;
}

std::vector<int> windows_for(const EstimatorPattern& pattern, std::size_t n) {
  if (!is_windowed(pattern.kind)) return {0};
  std::vector<int> out;
  switch (pattern.window_mode) {
    case WindowMode::kSweep:
      for (int m = 1; m <= max_window(n); ++m) out.push_back(m);
      break;
    case WindowMode::kHeuristic:
      if (n >= 4) out.push_back(heuristic_window(pattern.kind, n));
      break;
    case WindowMode::kList:
      for (int m : pattern.windows) {
        if (m >= 1 && m <= max_window(n)) out.push_back(m);
      }
      break;
  }
  return out;
}

struct Column {
  TsallisOrder alpha;
  EstimatorSpec spec;
  double truth;
};

double truth_for(const ParametricModel& model, const TsallisOrder& alpha,
                 TruthSource source) {
  if (alpha.is_wcre_limit()) return closed_wcre(model);
  return source == TruthSource::kTable ? closed_wcrte(model, alpha)
                                       : integrated_wcrte(model, alpha);
}

template <typename Loop>
McStudyResult run(const McStudyConfig& config, Loop loop) {
  config.validate();
  McStudyResult result;
  for (std::size_t k = 0; k < config.models.size(); ++k) {
    const ParametricModel& model = config.models[k];
    const std::string name = model.label();

    std::vector<std::pair<TsallisOrder, double>> truths;
    for (const auto& alpha : config.alphas) {
      try {
        truths.emplace_back(alpha, truth_for(model, alpha, config.truth));
      } catch (const Error& e) {
        result.skipped.push_back({name, alpha, e.what()});
      }
    }

    for (std::size_t n : config.sample_sizes) {
      std::vector<Column> columns;
      for (const auto& [alpha, truth] : truths) {
        for (const auto& pattern : config.estimators) {
          for (int m : windows_for(pattern, n)) {
            EstimatorSpec spec{pattern.kind, alpha, std::nullopt,
                               pattern.plotting};
            if (m > 0) spec.window = m;
            try {
              spec.validate(n);
            } catch (const DomainError& e) {
              result.skipped.push_back({name, alpha, e.what()});
              continue;
            }
            columns.push_back({alpha, spec, truth});
          }
        }
      }
      if (columns.empty()) continue;

      const std::size_t reps = config.replications;
      const std::size_t width = columns.size();
      std::vector<double> errors(reps * width);
      loop(reps, [&](std::size_t r) {
        auto stream = RandomStream::derive(config.seed, {1, k, n, r});
        const Sample s = sample(Model(model), n, stream);
        double* row = errors.data() + r * width;
        for (std::size_t c = 0; c < width; ++c) {
          row[c] = evaluate(s, columns[c].spec) - columns[c].truth;
        }
      });

      for (std::size_t c = 0; c < width; ++c) {
        CompensatedSum sum_err;
        CompensatedSum sum_sq;
        for (std::size_t r = 0; r < reps; ++r) {
          const double e = errors[r * width + c];
          sum_err.add(e);
          sum_sq.add(e * e);
        }
        const double rd = static_cast<double>(reps);
        const double mse = sum_sq.value() / rd;
        CompensatedSum dev;
        for (std::size_t r = 0; r < reps; ++r) {
          const double e = errors[r * width + c];
          const double d = e * e - mse;
          dev.add(d * d);
        }
        McCell cell;
        cell.model = name;
        cell.n = n;
        cell.alpha = columns[c].alpha;
        cell.kind = columns[c].spec.kind;
        cell.m = columns[c].spec.window;
        cell.truth = columns[c].truth;
        cell.bias = sum_err.value() / rd;
        cell.mse = mse;
        cell.mse_se =
            reps > 1 ? std::sqrt(dev.value() / (rd - 1.0) / rd) : 0.0;
        cell.replications = reps;
        cell.seed = config.seed;
        result.cells.push_back(std::move(cell));
      }
    }
  }
  return result;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void McStudyConfig::validate() const {
  if (models.empty() || sample_sizes.empty() || alphas.empty() ||
      estimators.empty()) {
    throw DomainError("Monte Carlo grid is empty");
  }
  if (replications < 1) throw DomainError("replications must be >= 1");
  for (std::size_t n : sample_sizes) {
    if (n < 2) throw DomainError("sample sizes must be >= 2");
    for (const auto& pattern : estimators) {
      if (is_windowed(pattern.kind) && windows_for(pattern, n).empty()) {
        throw DomainError("no admissible window for " +
                          to_string(pattern.kind) +
                          " at n = " + std::to_string(n));
      }
    }
  }
}

McStudyResult run_study(const McStudyConfig& config, Threads threads) {
  return run(config, [&](std::size_t count, auto&& fn) {
    parallel_for(count, threads, fn);
  });
}

McStudyResult run_study_serial(const McStudyConfig& config) {
  return run(config,
             [](std::size_t count, auto&& fn) { serial_for(count, fn); });
}

std::map<WindowKey, int> best_window(const std::vector<McCell>& cells) {
  std::map<WindowKey, std::pair<double, int>> best;
  for (const auto& c : cells) {
    if (!c.m) continue;
    WindowKey key{c.model, c.n, c.alpha.label(), c.kind};
    auto it = best.find(key);
    if (it == best.end() || c.mse < it->second.first ||
        (c.mse == it->second.first && *c.m < it->second.second)) {
      best[key] = {c.mse, *c.m};
    }
  }
  if (best.empty()) throw DomainError("no windowed cells");
  std::map<WindowKey, int> out;
  for (const auto& [key, v] : best) out.emplace(key, v.second);
  return out;
}

int max_window(std::size_t n) {
  return static_cast<int>((n + 1) / 2) - 1;
}

int heuristic_window(EstimatorKind kind, std::size_t n) {
  if (!is_windowed(kind)) {
    throw DomainError(to_string(kind) + " estimator has no window");
  }
  if (n < 4) throw DomainError("heuristic window needs n >= 4");
  const int ni = static_cast<int>(n);
  int m = 0;
  if (kind == EstimatorKind::kModifiedN) {
    m = ni / 4 + 1;
  } else {
    m = n <= 20 ? ni / 2 - 1 : ni / 3;
  }
  return std::clamp(m, 1, max_window(n));
}

McStudyConfig parse_config_json(const std::string& text) {
  using nlohmann::json;
  McStudyConfig cfg;
  try {
    const json doc = json::parse(text);
    if (!doc.is_object()) throw ParseError("config must be a JSON object");
    for (const auto& m : doc.at("models")) {
      cfg.models.push_back(parse_parametric_model(m.get<std::string>()));
    }
    for (const auto& n : doc.at("sample_sizes")) {
      cfg.sample_sizes.push_back(n.get<std::size_t>());
    }
    for (const auto& a : doc.at("alphas")) {
      cfg.alphas.push_back(a.is_string()
                               ? parse_order(a.get<std::string>())
                               : TsallisOrder::from_label(a.get<double>()));
    }
    for (const auto& e : doc.at("estimators")) {
      EstimatorPattern p;
      p.kind = parse_estimator_kind(e.at("kind").get<std::string>());
      if (e.contains("windows")) {
        const auto& w = e.at("windows");
        if (w.is_string()) {
          const auto mode = w.get<std::string>();
          if (mode == "sweep") {
            p.window_mode = WindowMode::kSweep;
          } else if (mode == "heuristic" || mode == "auto") {
            p.window_mode = WindowMode::kHeuristic;
          } else {
            throw ParseError("unknown window mode '" + mode + "'");
          }
        } else {
          p.window_mode = WindowMode::kList;
          p.windows = w.get<std::vector<int>>();
        }
      }
      if (e.contains("plotting")) {
        const auto pl = e.at("plotting").get<std::string>();
        if (pl == "n") {
          p.plotting = Plotting::kOverN;
        } else if (pl == "n+1") {
          p.plotting = Plotting::kOverNPlusOne;
        } else {
          throw ParseError("plotting must be 'n' or 'n+1'");
        }
      }
      cfg.estimators.push_back(std::move(p));
    }
    if (doc.contains("replications")) {
      cfg.replications = doc.at("replications").get<std::size_t>();
    }
    if (doc.contains("seed")) cfg.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("truth")) {
      const auto t = doc.at("truth").get<std::string>();
      if (t == "table") {
        cfg.truth = TruthSource::kTable;
      } else if (t == "quadrature") {
        cfg.truth = TruthSource::kQuadrature;
      } else {
        throw ParseError("truth must be 'table' or 'quadrature'");
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  return cfg;
}

std::string cells_to_csv(const std::vector<McCell>& cells) {
  std::ostringstream os;
  os << "model,n,alpha,estimator,m,bias,mse,R,seed\n";
  for (const auto& c : cells) {
    os << csv_field(c.model) << ',' << c.n << ',' << c.alpha.to_string() << ','
       << to_string(c.kind) << ',' << (c.m ? std::to_string(*c.m) : "") << ','
       << format_double(c.bias) << ',' << format_double(c.mse) << ','
       << c.replications << ',' << c.seed << '\n';
  }
  return os.str();
}

std::string cells_to_json(const std::vector<McCell>& cells) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cells) {
    nlohmann::json j{{"model", c.model},
                     {"n", c.n},
                     {"alpha", c.alpha.label()},
                     {"estimator", to_string(c.kind)},
                     {"m", nullptr},
                     {"truth", c.truth},
                     {"bias", c.bias},
                     {"mse", c.mse},
                     {"mse_se", c.mse_se},
                     {"R", c.replications},
                     {"seed", c.seed}};
    if (c.m) j["m"] = *c.m;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace wcrte::mc
