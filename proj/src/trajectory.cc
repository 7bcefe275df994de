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

#include "cardlab/trajectory.h"

#include <algorithm>

#include "cardlab/action_codec.h"
#include "cardlab/guandan.h"

namespace cardlab {

Seed match_seed(Seed base, std::uint64_t index) {
  return derive_seed(base, index);
}

Seed seat_seed(Seed match, int seat) {
  return derive_seed(match, 0x5ea70000ULL + static_cast<std::uint64_t>(seat));
}

MatchRecord play_match(Game game, Seed base, std::uint64_t index,
                       const std::vector<Policy*>& seats,
                       const MatchOptions& options) {
  MatchRecord rec;
  rec.game = game;
  rec.match_id = index;
  rec.seed = match_seed(base, index);
  auto state = reset(game, rec.seed, GameOptions{index, options.guandan_full_match});
  if (static_cast<int>(seats.size()) != state->num_seats()) {
    throw UsageError(std::string(game_name(game)) + " needs " +
                     std::to_string(state->num_seats()) + " policies");
  }
  std::vector<Rng> rngs;
  for (int s = 0; s < state->num_seats(); ++s) rngs.emplace_back(seat_seed(rec.seed, s));

  int step = 0;
  while (!state->is_terminal()) {
    const int seat = state->current_seat();
    const bool observe = options.record_steps || seats[seat]->needs_observation();
    const Observation obs = observe ? state->observe(seat) : Observation{};
    const std::vector<Action> legal = state->legal_actions();
    PolicyRequest req{game, obs, legal, index, step};
    const Action action = seats[seat]->act(req, rngs[seat]);
    if (std::find(legal.begin(), legal.end(), action) == legal.end()) {
      throw IllegalAction("match " + std::to_string(index) + ": policy " +
                          seats[seat]->name() + " chose illegal " +
                          describe_action(game, action) + " at seat " +
                          std::to_string(seat));
    }
    rec.legal_sizes.push_back(static_cast<int>(legal.size()));
    if (options.record_steps) {
      TrajectoryStep ts;
      ts.step = step;
      ts.seat = seat;
      ts.role = obs.role;
      ts.obs = obs.fields;
      ts.legal = obs.fields["legal_actions"];
      ts.action = action_value(game, action);
      rec.steps.push_back(std::move(ts));
    }
    state->apply(action);
    ++step;
  }
  rec.payoffs = state->payoffs();
  rec.winner_side = state->winner_side();
  rec.winners = state->winning_steps();
  for (std::size_t i = 0; i < rec.steps.size(); ++i) {
    rec.steps[i].is_winner = rec.winners[i];
  }
  if (game == Game::kGuanDan) {
    rec.deal_winners = static_cast<const GuanDanState&>(*state).deal_winners();
  }
  return rec;
}

Json header_json(const MatchRecord& m) {
  Json h{{"game", std::string(game_name(m.game))},
         {"match_id", m.match_id},
         {"seed", m.seed},
         {"payoffs", m.payoffs},
         {"winner_side", m.winner_side}};
  if (!m.deal_winners.empty()) h["deal_winners"] = m.deal_winners;
  return h;
}

Json step_json(const MatchRecord& m, const TrajectoryStep& s) {
  return Json{{"game", std::string(game_name(m.game))},
              {"match_id", m.match_id},
              {"step", s.step},
              {"seat", s.seat},
              {"role", s.role},
              {"obs", s.obs},
              {"legal", s.legal},
              {"action", s.action},
              {"is_winner", s.is_winner}};
}

std::string match_lines(const MatchRecord& m) {
  std::string out = header_json(m).dump();
  out += '\n';
  for (const auto& s : m.steps) {
    out += step_json(m, s).dump();
    out += '\n';
  }
  return out;
}

}  // namespace cardlab
