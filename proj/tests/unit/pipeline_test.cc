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

#include <sstream>

#include "cardlab/agents.h"
#include "cardlab/errors.h"
#include "cardlab/pipeline.h"
#include "cardlab/prompts.h"
#include "doctest.h"

namespace cardlab {
namespace {

std::string run(Game game, std::uint64_t games, int workers, bool full = true) {
  RulePolicy rule;
  RandomPolicy random;
  MatchupSpec spec;
  spec.game = game;
  spec.games = games;
  spec.seed = 21;
  spec.guandan_full_match = full;
  std::vector<Policy*> seats;
  for (int s = 0; s < num_seats(game); ++s) {
    seats.push_back(s % 2 ? static_cast<Policy*>(&random) : &rule);
    spec.seats.push_back(s % 2 ? "random" : "rule");
  }
  std::ostringstream os;
  generate(spec, seats, os, workers);
  return os.str();
}

TEST_CASE("parallel generation is byte-identical to serial") {
  for (Game g : kEngineGames) {
    const std::uint64_t n = g == Game::kGuanDan ? 6 : 40;
    CHECK(run(g, n, 1) == run(g, n, 4));
  }
}

TEST_CASE("generation is reproducible") {
  CHECK(run(Game::kUno, 10, 1) == run(Game::kUno, 10, 1));
}

TEST_CASE("filter keeps winner steps with choices") {
  std::istringstream in(run(Game::kLeduc, 50, 1));
  std::ostringstream out;
  const auto counts = filter_samples(in, out);
  CHECK(counts.kept > 0);
  CHECK(counts.kept < counts.steps_in);
  std::istringstream back(out.str());
  std::string line;
  while (std::getline(back, line)) {
    const Json j = Json::parse(line);
    if (j.contains("manifest")) continue;
    CHECK(keep_step(j));
  }
}

TEST_CASE("filter rejects malformed lines") {
  std::istringstream in("{\"manifest\": {}}\nnot json\n");
  std::ostringstream out;
  CHECK_THROWS_AS(filter_samples(in, out), MalformedRecord);
}

TEST_CASE("sft records carry the rendered prompt") {
  std::istringstream traj(run(Game::kGinRummy, 5, 1));
  std::stringstream samples, sft;
  filter_samples(traj, samples);
  const auto n = emit_sft(samples, sft);
  CHECK(n > 0);
  std::string line;
  std::getline(sft, line);
  const Json r = Json::parse(line);
  CHECK(r.contains("instruction"));
  CHECK(r.contains("output"));
  CHECK(Json::parse(r["output"].get<std::string>()).contains("action"));
}

TEST_CASE("mix spec parsing") {
  const auto counts = parse_mix_spec("# comment\nuno = 3\n\nleduc=2\n");
  REQUIRE(counts.size() == 2);
  CHECK(counts[0] == std::pair<Game, std::uint64_t>{Game::kUno, 3});
  CHECK(counts[1] == std::pair<Game, std::uint64_t>{Game::kLeduc, 2});
  CHECK_THROWS(parse_mix_spec("uno: 3"));
  CHECK_THROWS_AS(parse_mix_spec("chess = 1"), UnsupportedGame);
}

TEST_CASE("mixing needs enough records") {
  std::map<Game, std::vector<std::string>> pools{{Game::kUno, {"{}", "{}"}}};
  CHECK_THROWS_AS(mix_records({{Game::kUno, 3}}, pools, 1), InsufficientPool);
  CHECK(mix_records({{Game::kUno, 2}}, pools, 1).size() == 2);
}

TEST_CASE("stats of a trajectory file") {
  const std::string text = run(Game::kLimit, 30, 1);
  std::istringstream in(text);
  const MatchStats st = stats(in);
  CHECK(st.games == 30);
  CHECK(st.avg_steps() > 1);
  CHECK(st.avg_legal() >= 1);
}

}  // namespace
}  // namespace cardlab
