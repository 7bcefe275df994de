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
#include <vector>

#include "cardlab/errors.h"
#include "cardlab/gin_rummy.h"
#include "cardlab/rng.h"
#include "doctest.h"

namespace cardlab {
namespace {

bool is_meld(std::vector<Card> cs) {
  if (cs.size() < 3) return false;
  const bool same_rank = std::all_of(cs.begin(), cs.end(),
                                     [&](const Card& c) { return c.rank() == cs[0].rank(); });
  if (same_rank) return cs.size() <= 4;
  if (!std::all_of(cs.begin(), cs.end(), [&](const Card& c) { return c.suit() == cs[0].suit(); }))
    return false;
  std::sort(cs.begin(), cs.end(), [](const Card& a, const Card& b) {
    return gin_rank_index(a.rank()) < gin_rank_index(b.rank());
  });
  for (std::size_t i = 1; i < cs.size(); ++i)
    if (gin_rank_index(cs[i].rank()) != gin_rank_index(cs[i - 1].rank()) + 1) return false;
  return true;
}

// Exhaustive: every card subset that forms a meld, then the best disjoint
// cover by bitmask dynamic programming.
int oracle_deadwood(const std::vector<Card>& hand) {
  const int n = static_cast<int>(hand.size());
  std::vector<int> melds;
  for (int m = 1; m < (1 << n); ++m) {
    std::vector<Card> cs;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) cs.push_back(hand[i]);
    if (is_meld(cs)) melds.push_back(m);
  }
  std::vector<int> value(1 << n, 0);
  for (int m = 0; m < (1 << n); ++m)
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) value[m] += gin_card_value(hand[i]);
  // best[m]: least deadwood among the cards in m.
  std::vector<int> best(value);
  for (int m = 1; m < (1 << n); ++m)
    for (int meld : melds)
      if ((meld & m) == meld) best[m] = std::min(best[m], best[m ^ meld]);
  return best[(1 << n) - 1];
}

TEST_CASE("card values") {
  CHECK(gin_card_value(Card::french(Suit::kSpade, Rank::kAce)) == 1);
  CHECK(gin_card_value(Card::french(Suit::kSpade, Rank::kSeven)) == 7);
  CHECK(gin_card_value(Card::french(Suit::kSpade, Rank::kKing)) == 10);
}

TEST_CASE("deadwood matches an exhaustive meld oracle") {
  Rng rng(77);
  auto deck = build_deck(Game::kGinRummy).cards;
  for (int t = 0; t < 300; ++t) {
    rng.shuffle(std::span<Card>(deck));
    const std::vector<Card> hand(deck.begin(), deck.begin() + (t % 2 ? 10 : 11));
    const auto got = min_deadwood(hand);
    CHECK(got.count == oracle_deadwood(hand));
    int sum = 0;
    for (const Card& c : got.deadwood) sum += gin_card_value(c);
    CHECK(sum == got.count);
  }
}

TEST_CASE("dense hands exercise overlapping melds") {
  // Suited runs crossing sets, built from few ranks.
  Rng rng(78);
  std::vector<Card> pool;
  for (Suit s : kSuits)
    for (Rank r : {Rank::kThree, Rank::kFour, Rank::kFive, Rank::kSix})
      pool.push_back(Card::french(s, r));
  for (int t = 0; t < 200; ++t) {
    rng.shuffle(std::span<Card>(pool));
    const std::vector<Card> hand(pool.begin(), pool.begin() + 10);
    CHECK(min_deadwood(hand).count == oracle_deadwood(hand));
  }
}

TEST_CASE("deadwood after each discard matches the full search") {
  Rng rng(79);
  auto deck = build_deck(Game::kGinRummy).cards;
  for (int t = 0; t < 300; ++t) {
    rng.shuffle(std::span<Card>(deck));
    const std::vector<Card> hand(deck.begin(), deck.begin() + 11);
    const auto after = deadwood_after_discards(hand);
    for (std::size_t i = 0; i < hand.size(); ++i) {
      std::vector<Card> rest = hand;
      rest.erase(rest.begin() + static_cast<long>(i));
      CHECK(after[i] == oracle_deadwood(rest));
    }
  }
}

TEST_CASE("hand size is checked") {
  const auto deck = build_deck(Game::kGinRummy).cards;
  CHECK_THROWS_AS(min_deadwood(std::vector<Card>(deck.begin(), deck.begin() + 9)), BadHandSize);
}

TEST_CASE("scoring") {
  CHECK(gin_score(0, 30, true) == std::array<int, 2>{55, 0});
  CHECK(gin_score(5, 20, false) == std::array<int, 2>{15, 0});
  // Undercut.
  CHECK(gin_score(8, 6, false) == std::array<int, 2>{0, 27});
}

}  // namespace
}  // namespace cardlab
