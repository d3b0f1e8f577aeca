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

// Drives the installed binary through std::system.

#include <sys/wait.h>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  static int n = 0;
  const fs::path log = fs::temp_directory_path() / ("moglb_cli_" + std::to_string(n++) + ".log");
  const std::string cmd = std::string(MOGLB_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(log);
  std::ostringstream text;
  text << in.rdbuf();
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, text.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

struct TempDir {
  TempDir() {
    path = fs::temp_directory_path() / "moglb_cli_test";
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path operator/(const std::string& name) const { return path / name; }
  fs::path path;
};

}  // namespace

TEST_CASE("generate") {
  TempDir dir;
  const auto a = dir / "a.json", b = dir / "b.json";
  const Result r = run("generate --d 5 --m 5 --seed 7 --out " + a.string());
  REQUIRE(r.code == 0);
  CHECK(r.out.find("arms: 20") != std::string::npos);
  CHECK(r.out.find("links: probit probit logit logit logit") != std::string::npos);
  REQUIRE(run("generate --d 5 --m 5 --seed 7 --out " + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));

  CHECK(run("generate --d 1 --out " + a.string()).code == 1);
  CHECK(run("generate --d 2 --m 12 --seed 24 --max-attempts 3 --out " + a.string()).code == 2);
  CHECK(run("bogus").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("run") {
  TempDir dir;
  const auto csv = dir / "one.csv";
  REQUIRE(run("run --d 3 --m 2 --T 1 --trials 1 --algos moglb --out " + csv.string()).code == 0);
  const std::string text = slurp(csv);
  CHECK(lines(text) == 2);
  CHECK(text.rfind("algo,trial,t,arm,instant_psg,cum_pareto_regret,front_size,jaccard\n", 0) == 0);
  CHECK(fs::exists(dir / "one.summary.json"));

  const Result bad = run("run --algos moglb,egreedy --out " + csv.string());
  CHECK(bad.code == 1);
  CHECK(bad.out.find("valid: moglb, pucb, sucb, pts") != std::string::npos);
  CHECK(run("run --c 3 --out " + csv.string()).code == 1);

  // Flags override the file; the effective config is written back.
  const auto cfg = dir / "cfg.txt";
  std::ofstream(cfg) << "format_version = 1\nd = 3\nm = 2\nT = 40\ntrials = 2\n";
  const auto x = dir / "x.csv", y = dir / "y.csv";
  REQUIRE(run("run --config " + cfg.string() + " --T 20 --jobs 2 --out " + x.string() +
              " --write-config " + (dir / "eff.txt").string()).code == 0);
  CHECK(lines(slurp(x)) == 1 + 4 * 2 * 20);
  CHECK(slurp(dir / "eff.txt").find("T = 20") != std::string::npos);
  REQUIRE(run("run --config " + (dir / "eff.txt").string() + " --jobs 1 --out " + y.string()).code == 0);
  CHECK(slurp(x) == slurp(y));
}

TEST_CASE("default output directory") {
  TempDir dir;
  const std::string env = "MOGLB_OUTPUT_DIR=" + dir.path.string() + " ";
  const std::string cmd = env + MOGLB_CLI_PATH + " generate --d 3 --m 2 > /dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(fs::exists(dir / "instance.json"));
}

TEST_CASE("tune-gamma") {
  TempDir dir;
  const std::string base = "tune-gamma --d 3 --m 2 --T 60 --trials 2 --report ";
  const Result r = run(base + (dir / "t.json").string() + " --grid 0.001,0.01,0.1,1");
  REQUIRE(r.code == 0);
  std::size_t rows = 0, best = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && std::isdigit(static_cast<unsigned char>(line[0]))) ++rows;
    if (line.find("  best") != std::string::npos) ++best;
  }
  CHECK(rows == 4);
  CHECK(best == 1);

  const Result dup = run(base + (dir / "d.json").string() + " --grid 0.1,0.1,0.01");
  REQUIRE(dup.code == 0);
  const std::string report = slurp(dir / "d.json");
  std::size_t entries = 0;
  for (auto pos = report.find("\"c\""); pos != std::string::npos;
       pos = report.find("\"c\"", pos + 1))
    ++entries;
  CHECK(entries == 2);
  const Result single = run(base + (dir / "s.json").string() + " --grid 0.05");
  CHECK(single.out.find("best c = 0.05") != std::string::npos);
  CHECK(run(base + (dir / "o.json").string() + " --grid 0.5,5").code == 1);
}
