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

#include "wcrte/spec_parse.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <string>

#include "wcrte/error.h"
#include "wcrte/text_io.h"

namespace wcrte {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// "head:rest" -> (lowercased head, rest). rest is empty without a colon.
std::pair<std::string, std::string_view> split_head(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return {lower(text), {}};
  return {lower(trim(text.substr(0, colon))), trim(text.substr(colon + 1))};
}

using KeyValues = std::map<std::string, std::string>;

// Parses "k=v,k=v" with lowercased keys. Bare items go to `positional`.
KeyValues parse_pairs(std::string_view text, std::string_view what,
                      std::vector<std::string>* positional = nullptr) {
  KeyValues out;
  if (trim(text).empty()) return out;
  for (auto item : split_list(text)) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      if (positional && !item.empty()) {
        positional->emplace_back(item);
        continue;
      }
      throw ParseError(std::string(what) + ": expected key=value, got '" +
                       std::string(item) + "'");
    }
    std::string key = lower(trim(item.substr(0, eq)));
    std::string value(trim(item.substr(eq + 1)));
    if (key.empty() || value.empty()) {
      throw ParseError(std::string(what) + ": malformed item '" +
                       std::string(item) + "'");
    }
    if (!out.emplace(std::move(key), std::move(value)).second) {
      throw ParseError(std::string(what) + ": duplicate key in '" +
                       std::string(text) + "'");
    }
  }
  return out;
}

// Removes and returns a numeric parameter, `fallback` when absent.
double take(KeyValues& kv, const std::string& key, std::optional<double> fallback,
            std::string_view what) {
  const auto it = kv.find(key);
  if (it == kv.end()) {
    if (!fallback) {
      throw ParseError(std::string(what) + ": missing parameter '" + key + "'");
    }
    return *fallback;
  }
  const double v = parse_double(it->second);
  kv.erase(it);
  return v;
}

void expect_consumed(const KeyValues& kv, std::string_view what) {
  if (!kv.empty()) {
    throw ParseError(std::string(what) + ": unknown parameter '" +
                     kv.begin()->first + "'");
  }
}

int parse_int(std::string_view text, std::string_view what) {
  const double v = parse_double(text);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw ParseError(std::string(what) + ": '" + std::string(text) +
                     "' is not an integer");
  }
  return static_cast<int>(v);
}

}  // namespace

std::vector<std::string_view> split_list(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Model parse_model(std::string_view text) {
  const auto [kind, rest] = split_head(text);
  const std::string what = "model '" + std::string(trim(text)) + "'";
  if (kind == "alt") {
    std::vector<std::string> positional;
    KeyValues kv = parse_pairs(rest, what, &positional);
    if (positional.size() != 1 || positional[0].size() != 1) {
      throw ParseError(what + ": expected family A, B or C");
    }
    const char fam = static_cast<char>(
        std::toupper(static_cast<unsigned char>(positional[0][0])));
    AlternativeFamily family;
    switch (fam) {
      case 'A':
        family = AlternativeFamily::kA;
        break;
      case 'B':
        family = AlternativeFamily::kB;
        break;
      case 'C':
        family = AlternativeFamily::kC;
        break;
      default:
        throw ParseError(what + ": expected family A, B or C");
    }
    const double j = take(kv, "j", std::nullopt, what);
    expect_consumed(kv, what);
    return AlternativeModel(family, j);
  }
  KeyValues kv = parse_pairs(rest, what);
  Model model = [&]() -> Model {
    if (kind == "uniform") {
      return ParametricModel::uniform(take(kv, "theta", 1.0, what));
    }
    if (kind == "exp" || kind == "exponential") {
      return ParametricModel::exponential(take(kv, "lambda", 1.0, what));
    }
    if (kind == "rayleigh") {
      return ParametricModel::rayleigh(take(kv, "sigma", 1.0, what));
    }
    if (kind == "pareto1" || kind == "pareto") {
      const double k = take(kv, "k", 1.0, what);
      return ParametricModel::pareto1(k, take(kv, "delta", 1.0, what));
    }
    if (kind == "weibull") {
      const double lambda = take(kv, "lambda", 1.0, what);
      return ParametricModel::weibull(lambda, take(kv, "p", 1.0, what));
    }
    throw ParseError(what + ": unknown family '" + kind + "'");
  }();
  expect_consumed(kv, what);
  return model;
}

ParametricModel parse_parametric_model(std::string_view text) {
  Model m = parse_model(text);
  if (const auto* p = std::get_if<ParametricModel>(&m)) return *p;
  throw ParseError("model '" + std::string(trim(text)) +
                   "': alternatives are only valid for uniformity tests");
}

TsallisOrder parse_order(std::string_view text) {
  const std::string t = lower(trim(text));
  if (t == "wcre") return TsallisOrder::wcre_limit();
  return TsallisOrder::from_label(parse_double(t));
}

EstimatorKind parse_estimator_kind(std::string_view text) {
  const std::string t = lower(trim(text));
  if (t == "emp" || t == "empirical") return EstimatorKind::kEmpiricalPlugin;
  if (t == "v" || t == "vasicek") return EstimatorKind::kVasicek;
  if (t == "e" || t == "ebrahimi") return EstimatorKind::kEbrahimi;
  if (t == "n" || t == "modified" || t == "modifiedn") {
    return EstimatorKind::kModifiedN;
  }
  if (t == "l" || t == "lstat") return EstimatorKind::kLStatistic;
  throw ParseError("unknown estimator kind '" + std::string(trim(text)) + "'");
}

ParsedEstimator parse_estimator(std::string_view text) {
  const auto [measure, rest] = split_head(text);
  const std::string what = "estimator '" + std::string(trim(text)) + "'";
  if (measure != "wcrte" && measure != "wcre") {
    throw ParseError(what + ": measure must be wcrte or wcre");
  }
  const auto items = split_list(rest);
  if (items.empty() || items.front().empty()) {
    throw ParseError(what + ": missing estimator kind");
  }
  ParsedEstimator out;
  out.spec.kind = parse_estimator_kind(items.front());
  const auto comma = rest.find(',');
  KeyValues kv = comma == std::string_view::npos
                     ? KeyValues{}
                     : parse_pairs(rest.substr(comma + 1), what);
  if (auto it = kv.find("alpha"); it != kv.end()) {
    const TsallisOrder order = parse_order(it->second);
    if (measure == "wcre" && !order.is_wcre_limit()) {
      throw ParseError(what + ": wcre takes no alpha other than 1");
    }
    out.spec.order = order;
    out.has_alpha = true;
    kv.erase(it);
  } else {
    out.spec.order = TsallisOrder::wcre_limit();
    out.has_alpha = measure == "wcre";
  }
  if (auto it = kv.find("m"); it != kv.end()) {
    if (lower(it->second) == "auto") {
      out.window_auto = true;
    } else {
      out.spec.window = parse_int(it->second, what);
    }
    kv.erase(it);
  }
  if (auto it = kv.find("plotting"); it != kv.end()) {
    const std::string p = lower(it->second);
    if (p == "n") {
      out.spec.plotting = Plotting::kOverN;
    } else if (p == "n+1") {
      out.spec.plotting = Plotting::kOverNPlusOne;
    } else {
      throw ParseError(what + ": plotting must be n or n+1");
    }
    kv.erase(it);
  }
  expect_consumed(kv, what);
  return out;
}

gof::TestSpec parse_test(std::string_view text) {
  const auto [name, rest] = split_head(text);
  const std::string what = "test '" + std::string(trim(text)) + "'";
  if (name == "wcrte") {
    if (rest.empty()) throw ParseError(what + ": needs alpha=<a>");
    KeyValues kv;
    if (rest.find('=') == std::string_view::npos) {
      kv["alpha"] = std::string(rest);
    } else {
      kv = parse_pairs(rest, what);
    }
    const auto it = kv.find("alpha");
    if (it == kv.end()) throw ParseError(what + ": needs alpha=<a>");
    const TsallisOrder order = parse_order(it->second);
    kv.erase(it);
    expect_consumed(kv, what);
    return gof::TestSpec::wcrte(order);
  }
  if (name == "ent") {
    KeyValues kv = parse_pairs(rest, what);
    std::optional<int> m;
    if (auto it = kv.find("m"); it != kv.end()) {
      if (lower(it->second) != "auto") m = parse_int(it->second, what);
      kv.erase(it);
    }
    expect_consumed(kv, what);
    return gof::TestSpec::ent(m);
  }
  if (!rest.empty()) throw ParseError(what + ": takes no parameters");
  if (name == "wcre") return gof::TestSpec::wcre();
  if (name == "ks") return gof::TestSpec::ks();
  if (name == "cvm") return gof::TestSpec::cvm();
  if (name == "ad") return gof::TestSpec::ad();
  throw ParseError(what + ": unknown test");
}

}  // namespace wcrte
