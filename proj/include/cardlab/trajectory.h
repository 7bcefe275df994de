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

#ifndef CARDLAB_TRAJECTORY_H_
#define CARDLAB_TRAJECTORY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "cardlab/agents.h"
#include "cardlab/game.h"

namespace cardlab {

struct TrajectoryStep {
  int step = 0;
  int seat = 0;
  std::string role;
  Json obs;
  Json legal;
  Json action;
  bool is_winner = false;
};

struct MatchRecord {
  Game game = Game::kLeduc;
  std::uint64_t match_id = 0;
  Seed seed = 0;
  std::vector<double> payoffs;
  std::string winner_side;
  std::vector<TrajectoryStep> steps;  // empty unless recorded
  // Always filled, one entry per decision.
  std::vector<int> legal_sizes;
  std::vector<bool> winners;
  // GuanDan: winning team of each deal.
  std::vector<int> deal_winners;
};

// Seeds used for match `index` of a run seeded with `base`.
Seed match_seed(Seed base, std::uint64_t index);
Seed seat_seed(Seed match, int seat);

struct MatchOptions {
  bool record_steps = true;
  bool guandan_full_match = true;
};

// Plays one match with one policy per seat. Throws IllegalAction when a
// policy returns a non-member; the message names the match.
MatchRecord play_match(Game game, Seed base, std::uint64_t index,
                       const std::vector<Policy*>& seats,
                       const MatchOptions& options = {});

Json header_json(const MatchRecord& m);
Json step_json(const MatchRecord& m, const TrajectoryStep& s);

// Header line plus one line per step, each terminated by '\n'.
std::string match_lines(const MatchRecord& m);

}  // namespace cardlab

#endif  // CARDLAB_TRAJECTORY_H_
