// Copyright 2026 The moglb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "moglb/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace moglb {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("config: bad value '" + std::string(value) + "' for " +
                      std::string(key));
  }
  return out;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string_view algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::kMoglb:
      return "moglb";
    case Algorithm::kPucb:
      return "pucb";
    case Algorithm::kSucb:
      return "sucb";
    case Algorithm::kPts:
      return "pts";
  }
  return "unknown";
}

std::vector<Algorithm> all_algorithms() {
  return {Algorithm::kMoglb, Algorithm::kPucb, Algorithm::kSucb, Algorithm::kPts};
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : all_algorithms()) {
    if (algorithm_name(a) == name) return a;
  }
  throw ConfigError("unknown algorithm '" + std::string(name) +
                    "' (valid: moglb, pucb, sucb, pts)");
}

std::vector<Algorithm> parse_roster(std::string_view list) {
  std::vector<Algorithm> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view item = trim(list.substr(0, comma));
    if (!item.empty()) out.push_back(parse_algorithm(item));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

void validate(const ExperimentConfig& config) {
  if (config.d < 2) throw ConfigError("d must be >= 2");
  if (config.m < 1) throw ConfigError("m must be >= 1");
  if (config.horizon < 1) throw ConfigError("T must be >= 1");
  if (config.trials < 1) throw ConfigError("trials must be >= 1");
  if (!(config.delta > 0.0 && config.delta < 1.0)) {
    throw ConfigError("delta must lie in (0, 1)");
  }
  if (config.gamma.kind == GammaMode::Kind::kTuned &&
      !(config.gamma.c >= 1e-3 && config.gamma.c <= 1.0)) {
    throw ConfigError("c must lie in [1e-3, 1]");
  }
  if (config.lambda && !(*config.lambda > 0.0 && std::isfinite(*config.lambda))) {
    throw ConfigError("lambda must be positive");
  }
  if (config.algorithms.empty()) throw ConfigError("no algorithms selected");
  if (config.jobs < 1) throw ConfigError("jobs must be >= 1");
  if (config.max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
}

std::string config_to_text(const ExperimentConfig& config) {
  std::ostringstream out;
  out << "# moglb experiment configuration\n";
  out << "format_version = " << kConfigFormatVersion << "\n";
  out << "d = " << config.d << "\n";
  out << "m = " << config.m << "\n";
  out << "T = " << config.horizon << "\n";
  out << "trials = " << config.trials << "\n";
  out << "base_seed = " << config.base_seed << "\n";
  out << "algorithms = ";
  for (std::size_t i = 0; i < config.algorithms.size(); ++i) {
    out << (i ? "," : "") << algorithm_name(config.algorithms[i]);
  }
  out << "\n";
  out << "gamma_mode = "
      << (config.gamma.kind == GammaMode::Kind::kTuned ? "tuned" : "theoretical")
      << "\n";
  out << "c = " << format_double(config.gamma.c) << "\n";
  out << "delta = " << format_double(config.delta) << "\n";
  out << "lambda = " << (config.lambda ? format_double(*config.lambda) : "auto") << "\n";
  out << "output = " << config.output << "\n";
  out << "instance = " << config.instance << "\n";
  out << "jobs = " << config.jobs << "\n";
  out << "max_attempts = " << config.max_attempts << "\n";
  return out.str();
}

ExperimentConfig config_from_text(std::string_view text) {
  ExperimentConfig cfg;
  bool saw_version = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "format_version") {
      if (parse_number<int>(key, value) != kConfigFormatVersion) {
        throw ConfigError("config: unsupported format_version " + std::string(value));
      }
      saw_version = true;
    } else if (key == "d") {
      cfg.d = parse_number<int>(key, value);
    } else if (key == "m") {
      cfg.m = parse_number<std::size_t>(key, value);
    } else if (key == "T") {
      cfg.horizon = parse_number<std::size_t>(key, value);
    } else if (key == "trials") {
      cfg.trials = parse_number<std::size_t>(key, value);
    } else if (key == "base_seed") {
      cfg.base_seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "algorithms") {
      cfg.algorithms = parse_roster(value);
    } else if (key == "gamma_mode") {
      if (value == "tuned") {
        cfg.gamma.kind = GammaMode::Kind::kTuned;
      } else if (value == "theoretical") {
        cfg.gamma.kind = GammaMode::Kind::kTheoretical;
      } else {
        throw ConfigError("config: gamma_mode must be tuned or theoretical");
      }
    } else if (key == "c") {
      cfg.gamma.c = parse_number<double>(key, value);
    } else if (key == "delta") {
      cfg.delta = parse_number<double>(key, value);
    } else if (key == "lambda") {
      if (value == "auto") {
        cfg.lambda.reset();
      } else {
        cfg.lambda = parse_number<double>(key, value);
      }
    } else if (key == "output") {
      cfg.output = std::string(value);
    } else if (key == "instance") {
      cfg.instance = std::string(value);
    } else if (key == "jobs") {
      cfg.jobs = parse_number<std::size_t>(key, value);
    } else if (key == "max_attempts") {
      cfg.max_attempts = parse_number<std::size_t>(key, value);
    } else {
      throw ConfigError("config: unknown key '" + std::string(key) + "'");
    }
  }
  if (!saw_version) throw ConfigError("config: missing format_version");
  return cfg;
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
  return a.d == b.d && a.m == b.m && a.horizon == b.horizon && a.trials == b.trials &&
         a.base_seed == b.base_seed && a.algorithms == b.algorithms &&
         a.gamma.kind == b.gamma.kind && a.gamma.c == b.gamma.c &&
         a.delta == b.delta && a.lambda == b.lambda && a.output == b.output &&
         a.instance == b.instance && a.jobs == b.jobs &&
         a.max_attempts == b.max_attempts;
}

}  // namespace moglb
