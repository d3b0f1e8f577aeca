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

#include "moglb/environment.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "moglb/errors.hpp"

namespace moglb {

namespace {

constexpr int kInstanceFormatVersion = 1;

using nlohmann::json;

json to_json_array(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Eigen::VectorXd from_json_array(const json& a) {
  if (!a.is_array()) throw std::invalid_argument("instance: expected an array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v(static_cast<Eigen::Index>(i)) = a[i].get<double>();
  return v;
}

}  // namespace

std::vector<LinkKind> ProblemInstance::links() const {
  std::vector<LinkKind> out;
  out.reserve(objectives.size());
  for (const auto& obj : objectives) out.push_back(obj.link);
  return out;
}

ProblemInstance build_instance(ArmSet arms, std::vector<GlmObjective> objectives,
                               std::optional<std::uint64_t> seed) {
  if (arms.size() == 0) throw std::invalid_argument("build_instance: no arms");
  if (objectives.empty()) throw std::invalid_argument("build_instance: no objectives");
  for (const auto& obj : objectives) {
    if (obj.theta.size() != arms.dim()) {
      throw std::invalid_argument("build_instance: coefficient dimension mismatch");
    }
  }
  ProblemInstance inst;
  inst.arms = std::move(arms);
  inst.objectives = std::move(objectives);
  inst.seed = seed;
  inst.expected_rewards.resize(static_cast<Eigen::Index>(inst.arms.size()),
                               static_cast<Eigen::Index>(inst.objectives.size()));
  for (std::size_t k = 0; k < inst.arms.size(); ++k) {
    for (std::size_t i = 0; i < inst.objectives.size(); ++i) {
      inst.expected_rewards(k, i) = inst.objectives[i].mean(inst.arms[k]);
    }
  }
  inst.true_front = pareto_front(inst.expected_rewards);
  inst.psg_table = psg_table(inst.expected_rewards);
  return inst;
}

Eigen::VectorXd sample_in_ball(int d, double radius, Rng& rng) {
  if (d < 1) throw std::invalid_argument("sample_in_ball: d must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::VectorXd dir(d);
  double norm = 0.0;
  do {
    for (int i = 0; i < d; ++i) dir(i) = gauss(rng);
    norm = dir.norm();
  } while (norm == 0.0);
  const double r = radius * std::pow(unif(rng), 1.0 / d);
  return dir * (r / norm);
}

Eigen::VectorXd sample_coefficients(int d, Rng& rng) {
  return sample_in_ball(d, 1.0, rng).cwiseAbs();
}

std::vector<LinkKind> default_links(std::size_t m) {
  if (m == 5) {
    return {LinkKind::kProbit, LinkKind::kProbit, LinkKind::kLogit,
            LinkKind::kLogit, LinkKind::kLogit};
  }
  std::vector<LinkKind> links(m);
  for (std::size_t i = 0; i < m; ++i) {
    links[i] = i % 2 == 0 ? LinkKind::kProbit : LinkKind::kLogit;
  }
  return links;
}

ProblemInstance generate_instance(int d, std::size_t m, std::uint64_t seed,
                                  const GenerateOptions& options) {
  if (d < 2) throw std::invalid_argument("generate_instance: d must be >= 2");
  if (m < 1) throw std::invalid_argument("generate_instance: m must be >= 1");
  if (options.max_attempts < 1) {
    throw std::invalid_argument("generate_instance: max_attempts must be >= 1");
  }
  const std::vector<LinkKind> links =
      options.links.empty() ? default_links(m) : options.links;
  if (links.size() != m) {
    throw std::invalid_argument("generate_instance: need one link per objective");
  }

  Rng rng = make_stream(seed);
  std::vector<GlmObjective> objectives;
  objectives.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    objectives.push_back(GlmObjective::make(links[i], sample_coefficients(d, rng)));
  }

  std::size_t smallest = std::numeric_limits<std::size_t>::max();
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::vector<Eigen::VectorXd> arms;
    arms.reserve(static_cast<std::size_t>(4 * d));
    for (int k = 0; k < 3 * d; ++k) arms.push_back(sample_in_ball(d, 0.5, rng));
    for (int k = 0; k < d; ++k) arms.push_back(sample_in_ball(d, 1.0, rng));

    ProblemInstance inst = build_instance(ArmSet(std::move(arms)), objectives, seed);
    if (inst.true_front.size() <= static_cast<std::size_t>(d)) return inst;
    smallest = std::min(smallest, inst.true_front.size());
  }
  throw GenerationFailure("generate_instance: no arm set with a front of at most " +
                              std::to_string(d) + " arms in " +
                              std::to_string(options.max_attempts) +
                              " attempts (smallest front " + std::to_string(smallest) + ")",
                          smallest);
}

std::string instance_to_json(const ProblemInstance& instance) {
  json doc;
  doc["format"] = "moglb-instance";
  doc["format_version"] = kInstanceFormatVersion;
  doc["seed"] = instance.seed ? json(*instance.seed) : json(nullptr);
  doc["dim"] = instance.dim();
  json objectives = json::array();
  for (const auto& obj : instance.objectives) {
    objectives.push_back({{"link", std::string(to_string(obj.link))},
                          {"radius", obj.radius},
                          {"identity_noise", obj.identity_noise},
                          {"theta", to_json_array(obj.theta)}});
  }
  doc["objectives"] = std::move(objectives);
  json arms = json::array();
  for (const auto& x : instance.arms.arms()) arms.push_back(to_json_array(x));
  doc["arms"] = std::move(arms);
  return doc.dump(2) + "\n";
}

ProblemInstance instance_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("instance: malformed JSON: ") + e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != "moglb-instance") {
      throw std::invalid_argument("instance: not a moglb instance file");
    }
    const int version = doc.at("format_version").get<int>();
    if (version != kInstanceFormatVersion) {
      throw std::invalid_argument("instance: unsupported format_version " +
                                  std::to_string(version));
    }
    std::optional<std::uint64_t> seed;
    if (!doc.at("seed").is_null()) seed = doc.at("seed").get<std::uint64_t>();

    std::vector<GlmObjective> objectives;
    for (const auto& o : doc.at("objectives")) {
      objectives.push_back(GlmObjective::make(
          parse_link(o.at("link").get<std::string>()), from_json_array(o.at("theta")),
          o.at("radius").get<double>(), o.at("identity_noise").get<double>()));
    }
    std::vector<Eigen::VectorXd> arms;
    for (const auto& a : doc.at("arms")) arms.push_back(from_json_array(a));
    ProblemInstance inst = build_instance(ArmSet(std::move(arms)), std::move(objectives), seed);
    if (inst.dim() != doc.at("dim").get<int>()) {
      throw std::invalid_argument("instance: dim does not match the arms");
    }
    return inst;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("instance: ") + e.what());
  }
}

void save_instance(const ProblemInstance& instance,
                   const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << instance_to_json(instance);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

ProblemInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

}  // namespace moglb
