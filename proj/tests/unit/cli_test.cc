// Copyright 2026 The Cardlab Authors
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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

#ifndef CARDLAB_CLI
#error "CARDLAB_CLI must name the cardlab binary"
#endif

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("cardlab_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& f) const { return (path / f).string(); }
};

int cli(const std::string& args) {
  const std::string cmd = std::string(CARDLAB_CLI) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::vector<Json> lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<Json> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(Json::parse(line));
  return out;
}

TEST_CASE("gen, filter, render, stats") {
  TempDir dir;
  REQUIRE(cli("gen --game leduc --games 30 --seed 4 --teacher rule --opponent random --out " +
              dir / "t.jsonl") == 0);
  REQUIRE(cli("filter --in " + dir / "t.jsonl" + " --out " + dir / "s.jsonl") == 0);
  REQUIRE(cli("render --in " + dir / "s.jsonl" + " --out " + dir / "r.jsonl") == 0);
  REQUIRE(cli("stats --json --in " + dir / "t.jsonl" + " --out " + dir / "st.json") == 0);
  const auto traj = lines(dir / "t.jsonl");
  REQUIRE_FALSE(traj.empty());
  CHECK(traj.front().contains("manifest"));
  const auto sft = lines(dir / "r.jsonl");
  REQUIRE(sft.size() >= 2);
  CHECK(sft[1].contains("instruction"));
  CHECK(lines(dir / "st.json").front()["games"] == 30);
}

TEST_CASE("workers do not change output") {
  TempDir dir;
  REQUIRE(cli("gen --game uno --games 20 --workers 1 --out " + dir / "a.jsonl") == 0);
  REQUIRE(cli("gen --game uno --games 20 --workers 3 --out " + dir / "b.jsonl") == 0);
  std::ifstream a(dir / "a.jsonl"), b(dir / "b.jsonl");
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
}

TEST_CASE("config file with flag override") {
  TempDir dir;
  {
    std::ofstream cfg(dir / "run.cfg");
    cfg << "game = limit\ngames = 50\np0 = rule\n";
  }
  REQUIRE(cli("eval --config " + dir / "run.cfg" + " --games 12 --out " + dir / "e.json") == 0);
  const auto rep = lines(dir / "e.json");
  REQUIRE(rep.size() == 1);
  CHECK(rep[0]["game"] == "limit");
  CHECK(rep[0]["games"] == 12);
  CHECK(rep[0]["p0"] == "rule");
}

TEST_CASE("mix with inline counts") {
  TempDir dir;
  REQUIRE(cli("gen --game leduc --games 200 --out " + dir / "t.jsonl") == 0);
  REQUIRE(cli("filter --in " + dir / "t.jsonl" + " --out " + dir / "s.jsonl") == 0);
  REQUIRE(cli("mix --counts leduc=25 --in " + dir / "s.jsonl" + " --out " + dir / "m.jsonl") == 0);
  const auto mixed = lines(dir / "m.jsonl");
  REQUIRE(mixed.size() == 26);  // manifest and records
  CHECK(mixed[0].contains("manifest"));
  CHECK(cli("mix --counts leduc=100000 --in " + dir / "s.jsonl" + " --out " + dir / "x.jsonl") == 1);
}

TEST_CASE("errors map to exit codes") {
  CHECK(cli("") == 2);
  CHECK(cli("gen") == 2);
  CHECK(cli("gen --game chess") != 0);
  CHECK(cli("filter --in /nonexistent/file") == 1);
  CHECK(cli("eval --game uno --p0 bogus") == 1);
}

}  // namespace
