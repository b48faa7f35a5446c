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

#include "wcrte/cli.h"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <boost/math/distributions/normal.hpp>
#include <json.hpp>

#include "wcrte/distributions.h"
#include "wcrte/error.h"
#include "wcrte/estimators.h"
#include "wcrte/gof.h"
#include "wcrte/mc.h"
#include "wcrte/random.h"
#include "wcrte/sample.h"
#include "wcrte/spec_parse.h"
#include "wcrte/text_io.h"

namespace wcrte::cli {
namespace {

using nlohmann::json;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::size_t reps = 10000;
  std::string alpha;
  std::string n;
  std::string m;
  double gamma = 0.05;
  std::string out;
  std::string format = "csv";
  int threads = 0;
  std::string config;
  std::vector<std::string> files;
  std::vector<std::string> estimators;
  std::vector<std::string> models;
  std::vector<std::string> tests;
  std::vector<std::string> alternatives;
  std::string data;
  std::string truth = "table";
  std::vector<int> tables;
  std::string reference = std::string(WCRTE_DATA_DIR) + "/reference_tables.json";
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  for (auto item : split_list(text)) {
    const double v = parse_double(item);
    if (v < 2 || v != std::floor(v) || v > 1e9) {
      throw ParseError("--n: '" + std::string(item) +
                       "' is not an integer >= 2");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<TsallisOrder> parse_orders(const std::string& text) {
  std::vector<TsallisOrder> out;
  for (auto item : split_list(text)) out.push_back(parse_order(item));
  return out;
}

// "auto", "sweep" or a list of integers.
struct WindowChoice {
  mc::WindowMode mode = mc::WindowMode::kHeuristic;
  std::vector<int> list;
};

WindowChoice parse_windows(const std::string& text, mc::WindowMode fallback) {
  WindowChoice w;
  w.mode = fallback;
  if (text.empty()) return w;
  if (text == "auto") {
    w.mode = mc::WindowMode::kHeuristic;
  } else if (text == "sweep") {
    w.mode = mc::WindowMode::kSweep;
  } else {
    w.mode = mc::WindowMode::kList;
    for (auto item : split_list(text)) {
      const double v = parse_double(item);
      if (v < 1 || v != std::floor(v) || v > 1e9) {
        throw ParseError("--m: '" + std::string(item) +
                         "' is not a positive integer");
      }
      w.list.push_back(static_cast<int>(v));
    }
  }
  return w;
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw ParseError("cannot open output file '" + opt.out + "'");
  f << text;
  if (!f) throw NumericError("failed writing '" + opt.out + "'");
}

bool want_json(const Options& opt) { return opt.format == "json"; }

// --- estimate ----------------------------------------------------------------

struct EstimateRow {
  std::string file;
  EstimatorSpec spec;
  std::size_t n = 0;
  Estimate est;
};

std::string estimate_rows_to_csv(const std::vector<EstimateRow>& rows,
                                 double gamma) {
  const double z =
      boost::math::quantile(boost::math::normal(), 1.0 - gamma / 2.0);
  std::ostringstream os;
  os << "file,estimator,n,estimate,variance,se,lower,upper,diagnostics\n";
  for (const auto& r : rows) {
    os << csv_field(r.file) << ',' << csv_field(r.spec.label()) << ',' << r.n
       << ',' << format_double(r.est.value) << ',';
    if (r.est.variance && *r.est.variance >= 0.0) {
      const double se =
          std::sqrt(*r.est.variance / static_cast<double>(r.n));
      os << format_double(*r.est.variance) << ',' << format_double(se) << ','
         << format_double(r.est.value - z * se) << ','
         << format_double(r.est.value + z * se);
    } else if (r.est.variance) {
      os << format_double(*r.est.variance) << ",,,";
    } else {
      os << ",,,";
    }
    std::string diag;
    for (const auto& m : r.est.diagnostics.messages()) {
      diag += (diag.empty() ? "" : "; ") + m;
    }
    os << ',' << csv_field(diag) << '\n';
  }
  return os.str();
}

std::string estimate_rows_to_json(const std::vector<EstimateRow>& rows,
                                  double gamma) {
  const double z =
      boost::math::quantile(boost::math::normal(), 1.0 - gamma / 2.0);
  json arr = json::array();
  for (const auto& r : rows) {
    json j{{"file", r.file},       {"estimator", r.spec.label()},
           {"n", r.n},             {"estimate", r.est.value},
           {"variance", nullptr},  {"se", nullptr},
           {"lower", nullptr},     {"upper", nullptr},
           {"diagnostics", r.est.diagnostics.messages()}};
    if (r.est.variance) {
      j["variance"] = *r.est.variance;
      if (*r.est.variance >= 0.0) {
        const double se =
            std::sqrt(*r.est.variance / static_cast<double>(r.n));
        j["se"] = se;
        j["lower"] = r.est.value - z * se;
        j["upper"] = r.est.value + z * se;
      }
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

int cmd_estimate(const Options& opt, std::ostream& out) {
  if (opt.files.empty()) throw ParseError("estimate: no data file given");
  if (opt.estimators.empty()) {
    throw ParseError("estimate: --estimator is required");
  }
  if (!(opt.gamma > 0.0 && opt.gamma < 1.0)) {
    throw DomainError("--gamma must lie in (0, 1)");
  }
  std::vector<ParsedEstimator> parsed;
  for (const auto& e : opt.estimators) parsed.push_back(parse_estimator(e));
  const auto alphas = opt.alpha.empty() ? std::vector<TsallisOrder>{}
                                        : parse_orders(opt.alpha);
  const WindowChoice windows = parse_windows(opt.m, mc::WindowMode::kHeuristic);

  std::vector<EstimateRow> rows;
  for (const auto& file : opt.files) {
    const Sample sample(read_values_file(file));
    const std::size_t n = sample.size();
    for (const auto& pe : parsed) {
      std::vector<TsallisOrder> orders;
      if (pe.has_alpha) {
        orders.push_back(pe.spec.order);
      } else if (!alphas.empty()) {
        orders = alphas;
      } else {
        throw ParseError("estimator '" + pe.spec.label() +
                         "' needs alpha (inline or via --alpha)");
      }
      std::vector<std::optional<int>> ms{pe.spec.window};
      if (pe.spec.needs_window() && (!pe.spec.window || pe.window_auto)) {
        ms.clear();
        if (windows.mode == mc::WindowMode::kList && !pe.window_auto) {
          for (int m : windows.list) ms.emplace_back(m);
        } else if (windows.mode == mc::WindowMode::kSweep && !pe.window_auto) {
          for (int m = 1; m <= mc::max_window(n); ++m) ms.emplace_back(m);
        } else {
          ms.emplace_back(mc::heuristic_window(pe.spec.kind, n));
        }
      }
      for (const auto& order : orders) {
        for (const auto& m : ms) {
          EstimateRow row;
          row.file = file;
          row.spec = pe.spec;
          row.spec.order = order;
          row.spec.window = m;
          row.n = n;
          row.est = estimate(sample, row.spec);
          rows.push_back(std::move(row));
        }
      }
    }
  }
  emit(opt,
       want_json(opt) ? estimate_rows_to_json(rows, opt.gamma)
                      : estimate_rows_to_csv(rows, opt.gamma),
       out);
  return kOk;
}

// --- mse-study ---------------------------------------------------------------

mc::McStudyConfig study_from_flags(const Options& opt) {
  mc::McStudyConfig cfg;
  for (const auto& m : opt.models) {
    cfg.models.push_back(parse_parametric_model(m));
  }
  if (opt.n.empty()) throw ParseError("mse-study: --n is required");
  cfg.sample_sizes = parse_sizes(opt.n);
  cfg.alphas = parse_orders(opt.alpha.empty() ? "2" : opt.alpha);
  const WindowChoice w = parse_windows(opt.m, mc::WindowMode::kSweep);
  std::vector<std::string> kinds = opt.estimators;
  if (kinds.empty()) kinds = {"empirical", "lstat"};
  for (const auto& k : kinds) {
    mc::EstimatorPattern p;
    const auto items = split_list(k);
    p.kind = parse_estimator_kind(items.front());
    if (items.size() > 1) {
      if (items[1] == "plotting=n") {
        p.plotting = Plotting::kOverN;
      } else if (items[1] == "plotting=n+1") {
        p.plotting = Plotting::kOverNPlusOne;
      } else {
        throw ParseError("mse-study: bad estimator option '" +
                         std::string(items[1]) + "'");
      }
    }
    p.window_mode = w.mode;
    p.windows = w.list;
    cfg.estimators.push_back(std::move(p));
  }
  if (opt.truth == "table") {
    cfg.truth = mc::TruthSource::kTable;
  } else if (opt.truth == "quadrature") {
    cfg.truth = mc::TruthSource::kQuadrature;
  } else {
    throw ParseError("--truth must be table or quadrature");
  }
  return cfg;
}

int cmd_mse_study(const Options& opt, const CLI::App& sub, std::ostream& out,
                  std::ostream& err) {
  mc::McStudyConfig cfg;
  if (!opt.config.empty()) {
    cfg = mc::parse_config_json(read_text_file(opt.config));
    if (sub.count("--seed")) cfg.seed = opt.seed;
    if (sub.count("--reps")) cfg.replications = opt.reps;
  } else {
    if (opt.models.empty()) {
      throw ParseError("mse-study: --model or --config is required");
    }
    cfg = study_from_flags(opt);
    cfg.seed = opt.seed;
    cfg.replications = opt.reps;
  }
  const auto result = mc::run_study(cfg, Threads{opt.threads});
  for (const auto& s : result.skipped) {
    err << "skipped " << s.model << " alpha=" << s.alpha.to_string() << ": "
        << s.reason << '\n';
  }
  emit(opt,
       want_json(opt) ? mc::cells_to_json(result.cells)
                      : mc::cells_to_csv(result.cells),
       out);
  return kOk;
}

// --- critical-values / power ----------------------------------------------------

std::vector<gof::TestSpec> tests_from(const Options& opt) {
  std::vector<gof::TestSpec> tests;
  for (const auto& t : opt.tests) tests.push_back(parse_test(t));
  if (!opt.alpha.empty()) {
    for (const auto& a : parse_orders(opt.alpha)) {
      tests.push_back(gof::TestSpec::wcrte(a));
    }
  }
  if (tests.empty()) tests = gof::standard_tests();
  return tests;
}

int cmd_critical_values(const Options& opt, std::ostream& out) {
  const auto tests = tests_from(opt);
  if (!opt.data.empty()) {
    const Sample sample(read_values_file(opt.data));
    std::vector<gof::GofResult> results;
    const auto pairs = gof::critical_values(
        sample.size(), tests, opt.gamma, opt.reps, opt.seed,
        Threads{opt.threads});
    for (const auto& p : pairs) results.push_back(gof::run_test(sample, p));
    emit(opt,
         want_json(opt) ? gof::results_to_json(results)
                        : gof::results_to_csv(results),
         out);
    return kOk;
  }
  if (opt.n.empty()) throw ParseError("critical-values: --n or --data required");
  std::vector<gof::CriticalPair> pairs;
  for (std::size_t n : parse_sizes(opt.n)) {
    auto p = gof::critical_values(n, tests, opt.gamma, opt.reps, opt.seed,
                                  Threads{opt.threads});
    pairs.insert(pairs.end(), p.begin(), p.end());
  }
  emit(opt,
       want_json(opt) ? gof::critical_pairs_to_json(pairs)
                      : gof::critical_pairs_to_csv(pairs),
       out);
  return kOk;
}

std::vector<Model> alternatives_from(const Options& opt) {
  std::vector<Model> alts;
  for (const auto& a : opt.alternatives) alts.push_back(parse_model(a));
  if (alts.empty()) {
    for (const auto& a : AlternativeModel::standard_set()) alts.emplace_back(a);
  }
  return alts;
}

int cmd_power(const Options& opt, std::ostream& out) {
  if (opt.n.empty()) throw ParseError("power: --n is required");
  const auto tests = tests_from(opt);
  const auto alts = alternatives_from(opt);
  std::vector<gof::PowerCell> cells;
  for (std::size_t n : parse_sizes(opt.n)) {
    auto c = gof::power_study(alts, n, tests, opt.gamma, opt.reps, opt.seed,
                              Threads{opt.threads});
    cells.insert(cells.end(), c.begin(), c.end());
  }
  emit(opt,
       want_json(opt) ? gof::power_to_json(cells) : gof::power_to_csv(cells),
       out);
  return kOk;
}

// --- verify-tables ---------------------------------------------------------------

struct Comparison {
  int table;
  std::string row;
  std::string quantity;
  double reference;
  double computed;
  std::string note;
};

std::string row_key(const std::string& model, std::size_t n,
                    const std::string& column) {
  return model + " n=" + std::to_string(n) + " " + column;
}

void verify_mc_table(int table, const json& ref, const Options& opt,
                     std::vector<Comparison>& out) {
  // Id 2 holds empirical and L-statistic cells, ids 3-6 window sweeps.
  std::map<std::string, std::vector<const json*>> by_model;
  std::vector<std::string> order;
  auto add = [&](const std::string& model, const json* e) {
    if (!by_model.count(model)) order.push_back(model);
    by_model[model].push_back(e);
  };
  if (table == 2) {
    for (const auto& e : ref.at("table2")) add(e.at("model"), &e);
  } else {
    const auto& t = ref.at("window_tables").at(std::to_string(table));
    for (const auto& e : t.at("cells")) add(t.at("model"), &e);
  }
  const std::optional<std::vector<std::size_t>> only_n =
      opt.n.empty() ? std::nullopt
                    : std::optional(parse_sizes(opt.n));
  for (const auto& model_label : order) {
    mc::McStudyConfig cfg;
    cfg.models = {parse_parametric_model(model_label)};
    cfg.alphas = {TsallisOrder::finite(2.0)};
    cfg.replications = opt.reps;
    cfg.seed = opt.seed;
    std::vector<int> windows;
    for (const json* e : by_model[model_label]) {
      const auto n = e->at("n").get<std::size_t>();
      if (only_n && std::find(only_n->begin(), only_n->end(), n) ==
                        only_n->end()) {
        continue;
      }
      if (std::find(cfg.sample_sizes.begin(), cfg.sample_sizes.end(), n) ==
          cfg.sample_sizes.end()) {
        cfg.sample_sizes.push_back(n);
      }
      if (e->contains("m")) windows.push_back(e->at("m").get<int>());
    }
    if (cfg.sample_sizes.empty()) continue;
    if (table == 2) {
      cfg.estimators = {{EstimatorKind::kEmpiricalPlugin, {}, {}, {}},
                        {EstimatorKind::kLStatistic, {}, {}, {}}};
    } else {
      for (auto kind : {EstimatorKind::kVasicek, EstimatorKind::kEbrahimi,
                        EstimatorKind::kModifiedN}) {
        cfg.estimators.push_back({kind, mc::WindowMode::kList, windows, {}});
      }
    }
    const auto result = mc::run_study(cfg, Threads{opt.threads});
    std::map<std::string, const mc::McCell*> cells;
    for (const auto& c : result.cells) {
      std::string col = to_string(c.kind);
      if (c.m) col += " m=" + std::to_string(*c.m);
      cells[row_key(c.model, c.n, col)] = &c;
    }
    std::map<mc::WindowKey, int> best;
    if (table != 2) best = mc::best_window(result.cells);
    for (const json* e : by_model[model_label]) {
      std::string col = e->at("estimator").get<std::string>();
      if (e->contains("m")) col += " m=" + std::to_string(e->at("m").get<int>());
      const auto key = row_key(model_label, e->at("n").get<std::size_t>(), col);
      const auto it = cells.find(key);
      if (it == cells.end()) continue;
      const mc::McCell& c = *it->second;
      std::string note;
      if (table != 2) {
        const int m_star = best.at({c.model, c.n, c.alpha.label(), c.kind});
        if (e->at("best").get<bool>()) {
          note = "reference minimum; computed minimum m=" +
                 std::to_string(m_star);
        } else if (m_star == *c.m) {
          note = "computed minimum";
        }
      }
      out.push_back({table, key, "bias", e->at("bias").get<double>(), c.bias,
                     note});
      out.push_back({table, key, "mse", e->at("mse").get<double>(), c.mse,
                     note});
    }
  }
}

void verify_table7(const json& ref, const Options& opt,
                   std::vector<Comparison>& out) {
  std::map<std::size_t, std::vector<const json*>> by_n;
  for (const auto& e : ref.at("table7")) by_n[e.at("n").get<std::size_t>()].push_back(&e);
  const auto only_n = opt.n.empty() ? std::vector<std::size_t>{}
                                    : parse_sizes(opt.n);
  for (const auto& [n, entries] : by_n) {
    if (!only_n.empty() &&
        std::find(only_n.begin(), only_n.end(), n) == only_n.end()) {
      continue;
    }
    std::vector<gof::TestSpec> tests;
    for (const json* e : entries) {
      tests.push_back(gof::TestSpec::wcrte(
          TsallisOrder::from_label(e->at("alpha").get<double>())));
    }
    const auto pairs = gof::critical_values(n, tests, 0.05, opt.reps, opt.seed,
                                            Threads{opt.threads});
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string key =
          "n=" + std::to_string(n) + " " + pairs[i].test.label();
      out.push_back({7, key, "lower", entries[i]->at("lower").get<double>(),
                     pairs[i].lower, ""});
      out.push_back({7, key, "upper", entries[i]->at("upper").get<double>(),
                     pairs[i].upper, ""});
    }
  }
}

void verify_table8(const json& ref, const Options& opt,
                   std::vector<Comparison>& out) {
  const auto tests = gof::standard_tests();
  std::vector<Model> alts;
  for (const auto& a : AlternativeModel::standard_set()) alts.emplace_back(a);
  std::map<std::string, double> reference;
  std::vector<std::size_t> sizes;
  for (const auto& e : ref.at("table8")) {
    const auto n = e.at("n").get<std::size_t>();
    if (std::find(sizes.begin(), sizes.end(), n) == sizes.end()) {
      sizes.push_back(n);
    }
    std::string test = e.at("test").get<std::string>();
    if (test == "wcrte") {
      test = gof::TestSpec::wcrte(TsallisOrder::from_label(
                                      e.at("alpha").get<double>()))
                 .label();
    } else if (test == "ent") {
      test = gof::TestSpec::ent().label();
    }
    reference[e.at("alternative").get<std::string>() + " n=" +
              std::to_string(n) + " " + test] = e.at("power").get<double>();
  }
  const auto only_n = opt.n.empty() ? std::vector<std::size_t>{}
                                    : parse_sizes(opt.n);
  for (std::size_t n : sizes) {
    if (!only_n.empty() &&
        std::find(only_n.begin(), only_n.end(), n) == only_n.end()) {
      continue;
    }
    const auto cells = gof::power_study(alts, n, tests, 0.05, opt.reps,
                                        opt.seed, Threads{opt.threads});
    for (const auto& c : cells) {
      const std::string key =
          c.alternative + " n=" + std::to_string(n) + " " + c.test.label();
      const auto it = reference.find(key);
      if (it == reference.end()) continue;
      std::string note;
      if (c.test.kind() == gof::TestKind::kEnt) {
        note = "reference window unknown; computed with m=" +
               std::to_string(*c.m);
      }
      out.push_back({8, key, "power", it->second, c.power, note});
    }
  }
}

std::string comparisons_to_csv(const std::vector<Comparison>& rows) {
  std::ostringstream os;
  os << "table,row,quantity,reference,computed,abs_diff,note\n";
  for (const auto& r : rows) {
    os << r.table << ',' << csv_field(r.row) << ',' << r.quantity << ','
       << format_double(r.reference) << ',' << format_double(r.computed) << ','
       << format_double(std::abs(r.computed - r.reference)) << ','
       << csv_field(r.note) << '\n';
  }
  return os.str();
}

std::string comparisons_to_json(const std::vector<Comparison>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"table", r.table},
                   {"row", r.row},
                   {"quantity", r.quantity},
                   {"reference", r.reference},
                   {"computed", r.computed},
                   {"abs_diff", std::abs(r.computed - r.reference)},
                   {"note", r.note}});
  }
  return arr.dump(2) + "\n";
}

int cmd_verify_tables(const Options& opt, std::ostream& out) {
  json ref;
  try {
    ref = json::parse(read_text_file(opt.reference));
  } catch (const json::exception& e) {
    throw ParseError("reference file '" + opt.reference + "': " + e.what());
  }
  std::vector<int> tables = opt.tables;
  if (tables.empty()) tables = {2, 3, 4, 5, 6, 7, 8};
  std::vector<Comparison> rows;
  try {
    for (int t : tables) {
      if (t >= 2 && t <= 6) {
        verify_mc_table(t, ref, opt, rows);
      } else if (t == 7) {
        verify_table7(ref, opt, rows);
      } else if (t == 8) {
        verify_table8(ref, opt, rows);
      } else {
        throw ParseError("--table must be between 2 and 8");
      }
    }
  } catch (const json::exception& e) {
    throw ParseError("reference file '" + opt.reference + "': " + e.what());
  }
  emit(opt, want_json(opt) ? comparisons_to_json(rows) : comparisons_to_csv(rows),
       out);
  return kOk;
}

void add_common(CLI::App* sub, Options& opt, bool random) {
  sub->add_option("--out", opt.out, "Write output to this path");
  sub->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  if (random) {
    sub->add_option("--seed", opt.seed, "Master seed (default 0xC0FFEE)");
    sub->add_option("--reps", opt.reps, "Monte Carlo replications")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", opt.threads, "Worker threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Estimation and uniformity testing with weighted cumulative "
               "residual (Tsallis) entropies"};
  app.require_subcommand(1);

  auto* est = app.add_subcommand("estimate", "Estimate a measure from data files");
  est->add_option("files", opt.files, "Data files, one value per line")
      ->required();
  est->add_option("-e,--estimator", opt.estimators,
                  "Estimator, e.g. wcrte:l,alpha=2 or wcre:v,m=auto")
      ->required();
  est->add_option("--alpha", opt.alpha, "Orders for estimators without alpha");
  est->add_option("--m", opt.m, "Windows: list, auto or sweep");
  est->add_option("--gamma", opt.gamma, "Confidence interval level 1-gamma");
  add_common(est, opt, false);

  auto* mse = app.add_subcommand("mse-study", "Monte Carlo bias and MSE");
  mse->add_option("--model", opt.models, "Model, e.g. exp:lambda=1 (repeatable)");
  mse->add_option("-e,--estimator", opt.estimators,
                  "Estimator kind: empirical, vasicek, ebrahimi, modified, "
                  "lstat[,plotting=n|n+1] (repeatable)");
  mse->add_option("--n", opt.n, "Sample sizes, comma separated");
  mse->add_option("--alpha", opt.alpha, "Orders, comma separated (1 = WCRE)");
  mse->add_option("--m", opt.m, "Windows: list, auto or sweep (default)");
  mse->add_option("--truth", opt.truth, "table or quadrature");
  mse->add_option("--config", opt.config, "JSON study configuration");
  add_common(mse, opt, true);

  auto* crit = app.add_subcommand("critical-values",
                                  "Simulated critical values under U(0,1)");
  crit->add_option("--n", opt.n, "Sample sizes, comma separated");
  crit->add_option("--test", opt.tests, "Test, e.g. wcrte:alpha=2, ks, ent:m=4");
  crit->add_option("--alpha", opt.alpha, "Add WCRTE tests at these orders");
  crit->add_option("--gamma", opt.gamma, "Significance level");
  crit->add_option("--data", opt.data, "Apply the tests to this data file");
  add_common(crit, opt, true);

  auto* pow = app.add_subcommand("power", "Power against alternatives");
  pow->add_option("--n", opt.n, "Sample sizes, comma separated");
  pow->add_option("--alternative", opt.alternatives,
                  "Alternative, e.g. alt:B,j=2 (default: all seven)");
  pow->add_option("--test", opt.tests, "Test (default: standard set)");
  pow->add_option("--alpha", opt.alpha, "Add WCRTE tests at these orders");
  pow->add_option("--gamma", opt.gamma, "Significance level");
  add_common(pow, opt, true);

  auto* ver = app.add_subcommand("verify-tables",
                                 "Recompute reference tables side by side");
  ver->add_option("--table", opt.tables, "Table id 2-8 (repeatable; default all)");
  ver->add_option("--n", opt.n, "Restrict to these sample sizes");
  ver->add_option("--reference", opt.reference, "Reference table file");
  add_common(ver, opt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseFailure;
  }

  try {
    if (*est) return cmd_estimate(opt, out);
    if (*mse) return cmd_mse_study(opt, *mse, out, err);
    if (*crit) return cmd_critical_values(opt, out);
    if (*pow) return cmd_power(opt, out);
    if (*ver) return cmd_verify_tables(opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kOk;
}

}  // namespace wcrte::cli
