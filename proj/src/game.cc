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

#include "cardlab/game.h"

#include <algorithm>
#include <numeric>

#include "cardlab/action_codec.h"
#include "cardlab/doudizhu.h"
#include "cardlab/gin_rummy.h"
#include "cardlab/guandan.h"
#include "cardlab/poker.h"
#include "cardlab/uno.h"

namespace cardlab {

std::string State::role(int seat) const {
  return "player_" + std::to_string(seat);
}

std::vector<bool> State::winning_steps() const {
  const std::vector<double> p = payoffs();
  std::vector<bool> out;
  out.reserve(history_.size());
  for (const auto& h : history_) out.push_back(p[h.seat] > 0.0);
  return out;
}

std::string State::winner_side() const {
  const std::vector<double> p = payoffs();
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (p[s] > 0.0) return "seat_" + std::to_string(s);
  }
  return "draw";
}

std::unique_ptr<State> reset(Game game, Seed seed, const GameOptions& options) {
  switch (game) {
    case Game::kDouDizhu: return new_doudizhu(seed, options);
    case Game::kGuanDan: return new_guandan(seed, options);
    case Game::kUno: return new_uno(seed, options);
    case Game::kGinRummy: return new_gin_rummy(seed, options);
    case Game::kLeduc: return new_leduc(seed, options);
    case Game::kLimit: return new_limit(seed, options);
    case Game::kNoLimit: return new_nolimit(seed, options);
    case Game::kMahjong: break;
  }
  throw UnsupportedGame("no engine for " + std::string(game_name(game)));
}

std::unique_ptr<State> step(const State& state, const Action& action) {
  auto next = state.clone();
  next->apply(action);
  return next;
}

std::string describe_action(Game game, const Action& action) {
  try {
    return py_dump(action_value(game, action));
  } catch (const std::exception&) {
    return "<action of another game>";
  }
}

LegalSet::LegalSet(std::vector<Action> list) : list_(std::move(list)) {
  if (list_.size() <= 32) return;
  order_.resize(list_.size());
  std::iota(order_.begin(), order_.end(), 0u);
  std::sort(order_.begin(), order_.end(),
            [&](std::uint32_t a, std::uint32_t b) { return list_[a] < list_[b]; });
}

bool LegalSet::contains(const Action& action) const {
  if (order_.empty()) return std::find(list_.begin(), list_.end(), action) != list_.end();
  const auto it = std::lower_bound(order_.begin(), order_.end(), action,
                                   [&](std::uint32_t i, const Action& a) { return list_[i] < a; });
  return it != order_.end() && list_[*it] == action;
}

bool State::is_legal(const Action& action) const {
  const auto legal = legal_actions();
  return std::find(legal.begin(), legal.end(), action) != legal.end();
}

void require_legal(const State& state, const Action& action) {
  if (state.is_terminal()) {
    throw IllegalAction("action " + describe_action(state.game(), action) +
                        " applied to a terminal state");
  }
  if (!state.is_legal(action)) {
    throw IllegalAction("illegal action " +
                        describe_action(state.game(), action) + " by seat " +
                        std::to_string(state.current_seat()));
  }
}

}  // namespace cardlab
