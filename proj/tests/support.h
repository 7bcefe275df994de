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

// Independent reference implementations used as test oracles. None of
// these share code with the library beyond the card and action types.

#ifndef CARDLAB_TESTS_SUPPORT_H_
#define CARDLAB_TESTS_SUPPORT_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cardlab/cards.h"
#include "cardlab/game.h"

namespace cardlab::testing {

// ---- five-card hands ----------------------------------------------------------

// Category index (0 = high card ... 9 = royal flush) and comparison key,
// most significant rank first.
struct NaiveRank {
  int category = 0;
  std::vector<int> key;
};

NaiveRank naive_five(const std::array<Card, 5>& cards);

// Standard counts of the ten categories over all C(52,5) hands.
inline constexpr std::array<std::uint64_t, 10> kFiveCardFrequencies = {
    1302540, 1098240, 123552, 54912, 10200, 5108, 3744, 624, 36, 4};

// ---- Leduc ----------------------------------------------------------------------

// One node of a Leduc betting tree built by a recursive model of the rules.
struct LeducNode {
  bool terminal = false;
  int actor = -1;
  std::vector<std::string> legal;  // sorted action names
  std::array<int, 2> chips{};
  std::array<double, 2> payoff{};
  std::map<std::string, LeducNode> children;
};

// Ranks are 'J' < 'Q' < 'K'.
LeducNode leduc_oracle(char hole0, char hole1, char board, int dealer);

std::size_t count_nodes(const LeducNode& node);

// ---- random play ----------------------------------------------------------------------

// Sorted copy of a card multiset, for conservation checks.
std::vector<Card> sorted(std::vector<Card> cards);

// Plays uniformly random legal actions from a fresh state; returns the final
// state.
std::unique_ptr<State> random_playout(Game game, Seed seed, std::uint64_t index,
                                      bool guandan_full_match = true);

// ---- synthetic trajectory file ------------------------------------------------------

// A three-match corpus whose filter output is known: 7 samples.
std::string filter_fixture();
inline constexpr std::uint64_t kFilterFixtureKept = 7;

// ---- prompt goldens -----------------------------------------------------------------

// A seeded state advanced by a fixed number of uniformly random actions,
// observed by the seat to act.
struct GoldenCase {
  std::string name;  // file stem under tests/golden
  Game game;
  Seed seed;
  int steps;
};

const std::vector<GoldenCase>& golden_cases();
Observation golden_observation(const GoldenCase& c);

}  // namespace cardlab::testing

#endif  // CARDLAB_TESTS_SUPPORT_H_
