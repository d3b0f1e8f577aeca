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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "moglb/config.hpp"
#include "moglb/environment.hpp"
#include "moglb/errors.hpp"
#include "moglb/harness.hpp"
#include "moglb/moglb_ucb.hpp"

namespace py = pybind11;
using namespace moglb;

namespace {

// Eigen's default dense matrix is column-major; pareto code wants row-major.
RewardMatrix to_rewards(const Eigen::Ref<const Eigen::MatrixXd>& m) { return m; }

Eigen::MatrixXd stack(const ArmSet& arms) {
  Eigen::MatrixXd out(arms.size(), arms.dim());
  for (std::size_t k = 0; k < arms.size(); ++k) out.row(k) = arms[k].transpose();
  return out;
}

ArmSet unstack(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  std::vector<Eigen::VectorXd> arms;
  for (Eigen::Index k = 0; k < m.rows(); ++k) arms.push_back(m.row(k).transpose());
  return ArmSet(std::move(arms));
}

// Column-wise view of the records, one list per CSV column.
py::dict records_to_columns(const std::vector<RoundRecord>& records) {
  py::list algo, trial, t, arm, psg_col, regret, front, ji;
  for (const auto& r : records) {
    algo.append(r.algo);
    trial.append(r.trial);
    t.append(r.t);
    arm.append(r.arm);
    psg_col.append(r.instant_psg);
    regret.append(r.cum_pareto_regret);
    front.append(r.front_size);
    ji.append(r.jaccard ? py::cast(*r.jaccard) : py::none());
  }
  py::dict out;
  out["algo"] = algo;
  out["trial"] = trial;
  out["t"] = t;
  out["arm"] = arm;
  out["instant_psg"] = psg_col;
  out["cum_pareto_regret"] = regret;
  out["front_size"] = front;
  out["jaccard"] = ji;
  return out;
}

py::dict summary_to_dict(const RunSummary& s) {
  py::dict out;
  for (const auto& a : s.algorithms) {
    py::list cps;
    for (const auto& c : a.checkpoints) {
      py::dict d;
      d["t"] = c.t;
      d["regret_mean"] = c.regret_mean;
      d["regret_std"] = c.regret_std;
      d["jaccard_mean"] = c.jaccard_mean;
      d["jaccard_std"] = c.jaccard_std;
      cps.append(d);
    }
    out[py::str(a.algo)] = cps;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multi-objective generalized linear bandits";

  py::register_exception<NumericalFailure>(m, "NumericalFailure", PyExc_ArithmeticError);
  py::register_exception<GenerationFailure>(m, "GenerationFailure", PyExc_RuntimeError);
  py::register_exception<ExperimentFailure>(m, "ExperimentFailure", PyExc_RuntimeError);

  py::class_<Rng>(m, "Rng")
      .def(py::init([](std::uint64_t seed) { return make_stream(seed); }), py::arg("seed"));

  // pareto
  m.def("dominates", [](std::vector<double> u, std::vector<double> v) {
    return dominates(u, v);
  });
  m.def("pareto_front", [](const Eigen::Ref<const Eigen::MatrixXd>& r) {
    return pareto_front(to_rewards(r));
  }, py::arg("rewards"));
  m.def("psg", [](const Eigen::Ref<const Eigen::MatrixXd>& r, std::size_t arm) {
    return psg(to_rewards(r), arm);
  }, py::arg("rewards"), py::arg("arm"));
  m.def("psg_table", [](const Eigen::Ref<const Eigen::MatrixXd>& r) {
    return psg_table(to_rewards(r));
  }, py::arg("rewards"));
  m.def("jaccard", &jaccard, py::arg("a"), py::arg("b"));

  // glm
  py::enum_<LinkKind>(m, "LinkKind")
      .value("identity", LinkKind::kIdentity)
      .value("logit", LinkKind::kLogit)
      .value("probit", LinkKind::kProbit);
  py::class_<LinkBounds>(m, "LinkBounds")
      .def(py::init<>())
      .def(py::init([](double kappa, double lipschitz, double max_abs_mean, double reward_bound) {
             return LinkBounds{kappa, lipschitz, max_abs_mean, reward_bound};
           }),
           py::arg("kappa"), py::arg("lipschitz"), py::arg("max_abs_mean"),
           py::arg("reward_bound"))
      .def_readwrite("kappa", &LinkBounds::kappa)
      .def_readwrite("lipschitz", &LinkBounds::lipschitz)
      .def_readwrite("max_abs_mean", &LinkBounds::max_abs_mean)
      .def_readwrite("reward_bound", &LinkBounds::reward_bound);
  m.def("link_value", &link_value, py::arg("kind"), py::arg("z"));
  m.def("derive_bounds", &derive_bounds, py::arg("kind"), py::arg("radius"),
        py::arg("identity_noise") = 0.1);

  // linear algebra
  py::class_<SpdState>(m, "SpdState")
      .def(py::init<int, double>(), py::arg("dim"), py::arg("lam"))
      .def("rank1_update", &SpdState::rank1_update, py::arg("x"), py::arg("weight"))
      .def("mahalanobis_sq", &SpdState::mahalanobis_sq, py::arg("v"),
           py::arg("use_inverse") = false)
      .def("refresh", &SpdState::refresh)
      .def_property_readonly("dim", &SpdState::dim)
      .def_property_readonly("matrix", &SpdState::matrix)
      .def_property_readonly("inverse", &SpdState::inverse)
      .def_property_readonly("logdet_ratio", &SpdState::logdet_ratio)
      .def_property_readonly("update_count", &SpdState::update_count);
  m.def("ball_project", &ball_project, py::arg("state"), py::arg("point"), py::arg("radius"));

  // environment
  py::class_<ProblemInstance>(m, "ProblemInstance")
      .def_property_readonly("arms", [](const ProblemInstance& p) { return stack(p.arms); })
      .def_property_readonly("thetas", [](const ProblemInstance& p) {
        Eigen::MatrixXd out(p.num_objectives(), p.dim());
        for (std::size_t i = 0; i < p.num_objectives(); ++i)
          out.row(i) = p.objectives[i].theta.transpose();
        return out;
      })
      .def_property_readonly("links", &ProblemInstance::links)
      .def_property_readonly("expected_rewards",
                             [](const ProblemInstance& p) -> Eigen::MatrixXd {
                               return p.expected_rewards;
                             })
      .def_readonly("true_front", &ProblemInstance::true_front)
      .def_readonly("psg_table", &ProblemInstance::psg_table)
      .def_readonly("seed", &ProblemInstance::seed)
      .def_property_readonly("num_arms", &ProblemInstance::num_arms)
      .def_property_readonly("num_objectives", &ProblemInstance::num_objectives)
      .def_property_readonly("dim", &ProblemInstance::dim)
      .def("to_json", &instance_to_json);
  m.def("generate_instance", [](int d, std::size_t m_obj, std::uint64_t seed,
                                std::size_t max_attempts) {
    GenerateOptions opts;
    opts.max_attempts = max_attempts;
    return generate_instance(d, m_obj, seed, opts);
  }, py::arg("d"), py::arg("m"), py::arg("seed"), py::arg("max_attempts") = 1000);
  m.def("instance_from_json", &instance_from_json, py::arg("text"));

  // policies
  m.def("theoretical_gamma", &theoretical_gamma, py::arg("bounds"), py::arg("lam"),
        py::arg("radius"), py::arg("num_objectives"), py::arg("delta"), py::arg("t"),
        py::arg("logdet_ratio"));
  py::class_<MoglbUcb>(m, "MoglbUcb")
      .def(py::init([](const Eigen::Ref<const Eigen::MatrixXd>& arms,
                       std::vector<LinkKind> links, std::string gamma_mode, double c,
                       double delta, std::optional<double> lam) {
             MoglbOptions opts;
             if (gamma_mode == "theoretical") {
               opts.gamma = GammaMode::theoretical();
             } else if (gamma_mode == "tuned") {
               opts.gamma = GammaMode::tuned(c);
             } else {
               throw std::invalid_argument("gamma_mode must be 'tuned' or 'theoretical'");
             }
             opts.delta = delta;
             opts.lambda = lam;
             return MoglbUcb(unstack(arms), std::move(links), opts);
           }),
           py::arg("arms"), py::arg("links"), py::arg("gamma_mode") = "tuned",
           py::arg("c") = 0.1, py::arg("delta") = 0.1, py::arg("lam") = py::none())
      .def("select_arm", &MoglbUcb::select_arm, py::arg("round"), py::arg("rng"))
      .def("update", [](MoglbUcb& p, std::size_t arm, std::vector<double> y) {
        p.update(arm, y);
      }, py::arg("arm"), py::arg("reward"))
      .def("gamma", &MoglbUcb::gamma, py::arg("t"))
      .def("ucb_matrix", [](const MoglbUcb& p, double g) -> Eigen::MatrixXd {
        return p.ucb_matrix(g);
      }, py::arg("gamma"))
      .def_property_readonly("current_front", &MoglbUcb::current_front)
      .def_property_readonly("current_gamma", &MoglbUcb::current_gamma)
      .def_property_readonly("estimates", &MoglbUcb::estimates)
      .def_property_readonly("spd", &MoglbUcb::spd, py::return_value_policy::reference_internal)
      .def_property_readonly("kappa", &MoglbUcb::kappa)
      .def_property_readonly("lam", &MoglbUcb::lambda);

  // harness
  py::enum_<Algorithm>(m, "Algorithm")
      .value("moglb", Algorithm::kMoglb)
      .value("pucb", Algorithm::kPucb)
      .value("sucb", Algorithm::kSucb)
      .value("pts", Algorithm::kPts);
  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("d", &ExperimentConfig::d)
      .def_readwrite("m", &ExperimentConfig::m)
      .def_readwrite("horizon", &ExperimentConfig::horizon)
      .def_readwrite("trials", &ExperimentConfig::trials)
      .def_readwrite("base_seed", &ExperimentConfig::base_seed)
      .def_readwrite("algorithms", &ExperimentConfig::algorithms)
      .def_property("gamma_mode",
                    [](const ExperimentConfig& c) {
                      return c.gamma.kind == GammaMode::Kind::kTuned ? "tuned" : "theoretical";
                    },
                    [](ExperimentConfig& c, const std::string& mode) {
                      if (mode == "tuned") {
                        c.gamma.kind = GammaMode::Kind::kTuned;
                      } else if (mode == "theoretical") {
                        c.gamma.kind = GammaMode::Kind::kTheoretical;
                      } else {
                        throw ConfigError("gamma_mode must be 'tuned' or 'theoretical'");
                      }
                    })
      .def_property("c", [](const ExperimentConfig& c) { return c.gamma.c; },
                    [](ExperimentConfig& c, double v) { c.gamma.c = v; })
      .def_readwrite("delta", &ExperimentConfig::delta)
      .def_readwrite("lam", &ExperimentConfig::lambda)
      .def_readwrite("jobs", &ExperimentConfig::jobs)
      .def_readwrite("max_attempts", &ExperimentConfig::max_attempts)
      .def("to_text", &config_to_text)
      .def_static("from_text", &config_from_text, py::arg("text"));

  m.def("checkpoints", &checkpoints, py::arg("horizon"));
  m.def("run_experiment", [](const ExperimentConfig& config,
                             const ProblemInstance* pinned) {
    ExperimentResult res;
    {
      py::gil_scoped_release release;
      res = run_experiment(config, pinned);
    }
    py::dict out;
    out["records"] = records_to_columns(res.records);
    out["summary"] = summary_to_dict(res.summary);
    std::ostringstream csv;
    write_csv(csv, res.records);
    out["csv"] = csv.str();
    return out;
  }, py::arg("config"), py::arg("instance") = nullptr);
  m.def("records_to_csv", [](const py::dict& columns) {
    std::vector<RoundRecord> recs;
    const auto algo = columns["algo"].cast<std::vector<std::string>>();
    const auto trial = columns["trial"].cast<std::vector<std::size_t>>();
    const auto t = columns["t"].cast<std::vector<std::size_t>>();
    const auto arm = columns["arm"].cast<std::vector<std::size_t>>();
    const auto ps = columns["instant_psg"].cast<std::vector<double>>();
    const auto reg = columns["cum_pareto_regret"].cast<std::vector<double>>();
    const auto fs = columns["front_size"].cast<std::vector<std::size_t>>();
    const auto ji = columns["jaccard"].cast<std::vector<std::optional<double>>>();
    for (std::size_t i = 0; i < algo.size(); ++i)
      recs.push_back({algo[i], trial[i], t[i], arm[i], ps[i], reg[i], fs[i], ji[i]});
    std::ostringstream csv;
    write_csv(csv, recs);
    return csv.str();
  }, py::arg("records"));
  m.def("tune_gamma", [](const ExperimentConfig& config, std::vector<double> grid) {
    TuneResult r;
    {
      py::gil_scoped_release release;
      r = tune_gamma(config, std::move(grid));
    }
    py::list rows;
    for (const auto& row : r.rows) {
      py::dict d;
      d["c"] = row.c;
      d["regret_mean"] = row.regret_mean;
      d["regret_std"] = row.regret_std;
      rows.append(d);
    }
    py::dict out;
    out["rows"] = rows;
    out["best_c"] = r.best_c;
    return out;
  }, py::arg("config"), py::arg("grid"));
}
