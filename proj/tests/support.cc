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

#include "support.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace cardlab::testing {

NaiveRank naive_five(const std::array<Card, 5>& cards) {
  std::vector<int> ranks;
  std::set<Suit> suits;
  for (const Card& c : cards) {
    ranks.push_back(rank_value(c.rank()));
    suits.insert(c.suit());
  }
  std::sort(ranks.rbegin(), ranks.rend());
  const bool flush = suits.size() == 1;

  // Straights by explicit windows, the wheel last.
  int straight_high = 0;
  const std::set<int> distinct(ranks.begin(), ranks.end());
  for (int high = 14; high >= 6 && !straight_high; --high) {
    bool all = true;
    for (int r = high - 4; r <= high; ++r) all = all && distinct.count(r);
    if (all) straight_high = high;
  }
  if (!straight_high && distinct == std::set<int>{14, 2, 3, 4, 5}) straight_high = 5;

  // Multiplicity pattern and key ranks.
  std::map<int, int> count;
  for (int r : ranks) ++count[r];
  std::vector<std::pair<int, int>> groups;  // (count, rank)
  for (auto [r, n] : count) groups.push_back({n, r});
  std::sort(groups.rbegin(), groups.rend());
  std::vector<int> pattern, key;
  for (auto [n, r] : groups) {
    pattern.push_back(n);
    key.push_back(r);
  }

  NaiveRank out;
  if (straight_high && flush) {
    out.category = straight_high == 14 ? 9 : 8;
    out.key = {straight_high};
  } else if (pattern == std::vector<int>{4, 1}) {
    out = {7, key};
  } else if (pattern == std::vector<int>{3, 2}) {
    out = {6, key};
  } else if (flush) {
    out = {5, ranks};
  } else if (straight_high) {
    out = {4, {straight_high}};
  } else if (pattern == std::vector<int>{3, 1, 1}) {
    out = {3, key};
  } else if (pattern == std::vector<int>{2, 2, 1}) {
    out = {2, key};
  } else if (pattern == std::vector<int>{2, 1, 1, 1}) {
    out = {1, key};
  } else {
    out = {0, ranks};
  }
  return out;
}

// ---- Leduc ----------------------------------------------------------------------

namespace {

int leduc_strength(char hole, char board) {
  const std::string order = "JQK";
  return (hole == board ? 10 : 0) + static_cast<int>(order.find(hole));
}

struct LeducBuilder {
  char hole[2];
  char board;
  int dealer;

  // Betting state of one round: who acts, chips, raises so far, actions so
  // far this round.
  LeducNode build(int round, int actor, std::array<int, 2> chips, int raises,
                  int acted) const {
    LeducNode node;
    node.actor = actor;
    node.chips = chips;
    const bool facing = chips[actor] < chips[1 - actor];
    node.legal.push_back("fold");
    if (facing) node.legal.push_back("call");
    if (!facing) node.legal.push_back("check");
    if (raises < 2) node.legal.push_back("raise");
    std::sort(node.legal.begin(), node.legal.end());
    for (const std::string& a : node.legal) {
      if (a == "fold") {
        node.children[a] = finish(chips, 1 - actor);
      } else if (a == "call") {
        std::array<int, 2> c = chips;
        c[actor] = c[1 - actor];
        node.children[a] = next_round(round, c);
      } else if (a == "check") {
        node.children[a] = acted + 1 >= 2 ? next_round(round, chips)
                                          : build(round, 1 - actor, chips, raises, acted + 1);
      } else {
        std::array<int, 2> c = chips;
        c[actor] = c[1 - actor] + (round == 0 ? 2 : 4);
        node.children[a] = build(round, 1 - actor, c, raises + 1, acted + 1);
      }
    }
    return node;
  }

  LeducNode next_round(int round, std::array<int, 2> chips) const {
    if (round == 0) return build(1, 1 - dealer, chips, 0, 0);
    const int s0 = leduc_strength(hole[0], board);
    const int s1 = leduc_strength(hole[1], board);
    if (s0 == s1) return finish(chips, -1);
    return finish(chips, s0 > s1 ? 0 : 1);
  }

  static LeducNode finish(std::array<int, 2> chips, int winner) {
    LeducNode node;
    node.terminal = true;
    node.chips = chips;
    if (winner >= 0) {
      const double won = chips[1 - winner] / 2.0;
      node.payoff[winner] = won;
      node.payoff[1 - winner] = -won;
    }
    return node;
  }
};

}  // namespace

LeducNode leduc_oracle(char hole0, char hole1, char board, int dealer) {
  LeducBuilder b{{hole0, hole1}, board, dealer};
  return b.build(0, 1 - dealer, {1, 1}, 0, 0);
}

std::size_t count_nodes(const LeducNode& node) {
  std::size_t n = 1;
  for (const auto& [a, child] : node.children) n += count_nodes(child);
  return n;
}

// ---- random play ----------------------------------------------------------------------

std::vector<Card> sorted(std::vector<Card> cards) {
  std::sort(cards.begin(), cards.end());
  return cards;
}

std::unique_ptr<State> random_playout(Game game, Seed seed, std::uint64_t index,
                                      bool guandan_full_match) {
  auto state = reset(game, derive_seed(seed, index), GameOptions{index, guandan_full_match});
  Rng rng(derive_seed(seed, index + 0x9e37));
  while (!state->is_terminal()) {
    const auto legal = state->legal_actions();
    state->apply(legal[rng.uniform(legal.size())]);
  }
  return state;
}

// ---- synthetic trajectory file ------------------------------------------------------

namespace {

std::string step_line(const std::string& game, int match, int step, int seat,
                      const std::string& role, int legal, bool winner) {
  Json legal_list = Json::array();
  for (int i = 0; i < legal; ++i) legal_list.push_back("a" + std::to_string(i));
  Json j{{"game", game},   {"match_id", match},     {"step", step},
         {"seat", seat},   {"role", role},          {"obs", Json::object()},
         {"legal", legal_list}, {"action", "a0"},   {"is_winner", winner}};
  return j.dump() + "\n";
}

}  // namespace

std::string filter_fixture() {
  std::ostringstream os;
  os << R"({"manifest": {"kind": "trajectory", "tool": "fixture", "game": "mixed"}})" << '\n';
  // Match 0, uno: the winner (seat 0) has 5 steps, 2 of them forced.
  os << R"({"game": "uno", "match_id": 0, "seed": 1, "payoffs": [1, -1], "winner_side": "seat_0"})" << '\n';
  const int uno_legal[5] = {3, 1, 2, 1, 4};
  for (int i = 0; i < 5; ++i) {
    os << step_line("uno", 0, 2 * i, 0, "player", uno_legal[i], true);
    os << step_line("uno", 0, 2 * i + 1, 1, "player", 3, false);
  }
  // Match 1, doudizhu: farmers win; 3 steps each, one forced pass each.
  os << R"({"game": "doudizhu", "match_id": 1, "seed": 2, "payoffs": [-1, 1, 1], "winner_side": "farmers"})" << '\n';
  for (int i = 0; i < 3; ++i) {
    os << step_line("doudizhu", 1, 3 * i, 0, "landlord", 5, false);
    os << step_line("doudizhu", 1, 3 * i + 1, 1, "landlord_down", i == 0 ? 1 : 6, true);
    os << step_line("doudizhu", 1, 3 * i + 2, 2, "landlord_up", i == 1 ? 1 : 2, true);
  }
  // Match 2, gin rummy: a dead hand keeps nothing.
  os << R"({"game": "gin_rummy", "match_id": 2, "seed": 3, "payoffs": [0, 0], "winner_side": "draw"})" << '\n';
  for (int i = 0; i < 4; ++i) os << step_line("gin_rummy", 2, i, i % 2, "player", 11, false);
  return os.str();
}

// ---- prompt goldens -----------------------------------------------------------------

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"doudizhu", Game::kDouDizhu, 11, 7},
      {"guandan", Game::kGuanDan, 12, 9},
      {"uno", Game::kUno, 13, 6},
      {"gin_rummy", Game::kGinRummy, 14, 5},
      {"leduc", Game::kLeduc, 15, 1},
      {"leduc_round2", Game::kLeduc, 16, 0},
      {"limit", Game::kLimit, 17, 3},
      {"nolimit", Game::kNoLimit, 18, 2},
  };
  return cases;
}

Observation golden_observation(const GoldenCase& c) {
  auto state = reset(c.game, c.seed, GameOptions{0, true});
  Rng rng(c.seed);
  // Folds are skipped so that poker hands stay open.
  for (int i = 0; i < c.steps; ++i) {
    auto legal = state->legal_actions();
    std::erase_if(legal, [](const Action& a) {
      return a == Action{BetAction::kFold} || a == Action{NlAction::kFold};
    });
    state->apply(legal[rng.uniform(legal.size())]);
  }
  if (c.name == "leduc_round2") {
    // Raise, call: the board card is out and the first player of round 2
    // acts.
    state->apply(Action{BetAction::kRaise});
    state->apply(Action{BetAction::kCall});
  }
  return state->observe(state->current_seat());
}

}  // namespace cardlab::testing
