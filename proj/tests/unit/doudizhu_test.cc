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

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

#include "cardlab/doudizhu.h"
#include "cardlab/errors.h"
#include "cardlab/rng.h"
#include "doctest.h"

namespace cardlab {
namespace {

// A random hand of n numeric values drawn from a DouDizhu deck.
std::vector<int> random_hand(Rng& rng, int n) {
  std::vector<int> deck;
  for (int v = 3; v <= 14; ++v)
    for (int k = 0; k < 4; ++k) deck.push_back(v);
  for (int k = 0; k < 4; ++k) deck.push_back(17);
  deck.push_back(20);
  deck.push_back(30);
  rng.shuffle(std::span<int>(deck));
  std::vector<int> hand(deck.begin(), deck.begin() + n);
  std::sort(hand.begin(), hand.end());
  return hand;
}

// Every combination that classifies out of some sub-multiset of the hand.
std::set<DouCombo> subset_oracle(const std::vector<int>& hand) {
  std::map<int, int> counts;
  for (int v : hand) ++counts[v];
  std::vector<std::pair<int, int>> ranks(counts.begin(), counts.end());
  std::set<DouCombo> out;
  // Sub-multisets are built in ascending order.
  std::function<void(std::size_t, std::vector<int>&)> walk =
      [&](std::size_t i, std::vector<int>& cur) {
        if (i == ranks.size()) {
          if (!cur.empty())
            for (auto& c : classify_dou(cur)) out.insert(c);
          return;
        }
        const std::size_t base = cur.size();
        for (int k = 0; k <= ranks[i].second; ++k) {
          walk(i + 1, cur);
          cur.push_back(ranks[i].first);
        }
        cur.resize(base);
      };
  std::vector<int> cur;
  walk(0, cur);
  return out;
}

TEST_CASE("classification of common shapes") {
  auto first = [](std::vector<int> cards) {
    const auto c = classify_dou(cards);
    REQUIRE_FALSE(c.empty());
    return c.front().category;
  };
  CHECK(first({5}) == DouCategory::kSolo);
  CHECK(first({5, 5}) == DouCategory::kPair);
  CHECK(first({3, 4, 5, 6, 7}) == DouCategory::kSoloChain);
  CHECK(first({3, 3, 4, 4, 5, 5}) == DouCategory::kPairChain);
  CHECK(first({9, 9, 9, 4}) == DouCategory::kTrioWithSolo);
  CHECK(first({9, 9, 9, 4, 4}) == DouCategory::kTrioWithPair);
  CHECK(first({8, 8, 8, 8}) == DouCategory::kBomb);
  CHECK(first({20, 30}) == DouCategory::kRocket);
  CHECK(first({6, 6, 6, 6, 3, 4}) == DouCategory::kFourWithDualSolo);
  CHECK(classify_dou(std::vector<int>{3, 4, 5, 6}).empty());
  // A two never joins a chain.
  CHECK(classify_dou(std::vector<int>{11, 12, 13, 14, 17}).empty());
}

TEST_CASE("bombs and rockets") {
  const DouCombo bomb = classify_dou(std::vector<int>{4, 4, 4, 4}).front();
  const DouCombo rocket = classify_dou(std::vector<int>{20, 30}).front();
  const DouCombo chain = classify_dou(std::vector<int>{10, 11, 12, 13, 14}).front();
  CHECK(compare_dou(bomb, chain));
  CHECK(compare_dou(rocket, bomb));
  CHECK_FALSE(compare_dou(bomb, rocket));
  const DouCombo chain6 = classify_dou(std::vector<int>{3, 4, 5, 6, 7, 8}).front();
  CHECK_FALSE(compare_dou(chain6, chain));  // lengths differ
}

TEST_CASE("move generation matches a sub-multiset oracle") {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    const auto hand = random_hand(rng, 6 + t % 7);
    const auto oracle = subset_oracle(hand);
    const auto moves = enumerate_dou_moves(hand, std::nullopt);
    const std::set<DouCombo> got(moves.begin(), moves.end());
    CHECK(moves.size() == got.size());
    CHECK(got == oracle);

    // Responses to each lead: exactly the oracle combos that beat it, plus
    // a pass.
    for (int k = 0; k < 5 && !oracle.empty(); ++k) {
      auto it = oracle.begin();
      std::advance(it, rng.uniform(oracle.size()));
      const auto replies = enumerate_dou_moves(hand, *it);
      std::set<DouCombo> beat;
      for (const auto& c : oracle)
        if (compare_dou(c, *it)) beat.insert(c);
      std::set<DouCombo> got_replies;
      int passes = 0;
      for (const auto& r : replies) {
        if (r.category == DouCategory::kPass) {
          ++passes;
        } else {
          got_replies.insert(r);
        }
      }
      CHECK(passes == 1);
      CHECK(got_replies == beat);
    }
  }
}

TEST_CASE("landlord gets the bottom cards") {
  DouDizhuState s(3, GameOptions{});
  CHECK(s.current_seat() == kDouLandlord);
  CHECK(s.observe(0).role == "landlord");
}

}  // namespace
}  // namespace cardlab
