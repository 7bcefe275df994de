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
#include <map>
#include <set>

#include "cardlab/cards.h"
#include "cardlab/errors.h"
#include "cardlab/game.h"
#include "cardlab/rng.h"
#include "doctest.h"

namespace cardlab {
namespace {

TEST_CASE("deck sizes") {
  CHECK(build_deck(Game::kDouDizhu).cards.size() == 54);
  CHECK(build_deck(Game::kGuanDan).cards.size() == 108);
  CHECK(build_deck(Game::kUno).cards.size() == 108);
  CHECK(build_deck(Game::kGinRummy).cards.size() == 52);
  CHECK(build_deck(Game::kLeduc).cards.size() == 6);
  CHECK(build_deck(Game::kLimit).cards.size() == 52);
  CHECK(build_deck(Game::kNoLimit).cards.size() == 52);
  CHECK_THROWS_AS(build_deck(Game::kMahjong), UnsupportedGame);
}

TEST_CASE("card notation round trips") {
  for (Game g : kEngineGames) {
    for (const Card& c : build_deck(g).cards) {
      CHECK(parse_card(format_card(c)) == c);
      if (c.is_french()) CHECK(parse_card_rank_first(format_card_rank_first(c)) == c);
    }
  }
  CHECK(format_card(Card::red_joker()) == "HR");
  CHECK(format_card(Card::uno(UnoColor::kGreen, UnoFace::kSkip)) == "g-skip");
  CHECK_THROWS_AS(parse_card("Z9"), UnknownNotation);
}

TEST_CASE("doudizhu numeric encoding") {
  CHECK(dou_value(Card::french(Suit::kSpade, Rank::kThree)) == 3);
  CHECK(dou_value(Card::french(Suit::kHeart, Rank::kAce)) == 14);
  CHECK(dou_value(Card::french(Suit::kClub, Rank::kTwo)) == 17);
  CHECK(dou_value(Card::black_joker()) == 20);
  CHECK(dou_value(Card::red_joker()) == 30);
  CHECK_FALSE(is_dou_value(15));
}

TEST_CASE("game names") {
  for (Game g : kAllGames) CHECK(parse_game(game_name(g)) == g);
  CHECK_THROWS_AS(parse_game("bridge"), UnsupportedGame);
}

TEST_CASE("rng is reproducible") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    differs = differs || x != c.next();
  }
  CHECK(differs);
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(2, 1));
}

TEST_CASE("rng uniform passes a chi-square test") {
  // Six cells, 60000 draws; 20.52 is the 0.999 quantile for 5 degrees.
  Rng rng(2026);
  std::array<int, 6> cells{};
  for (int i = 0; i < 60000; ++i) ++cells[rng.uniform(6)];
  double chi2 = 0;
  for (int c : cells) chi2 += (c - 10000.0) * (c - 10000.0) / 10000.0;
  CHECK(chi2 < 20.52);
}

TEST_CASE("shuffle is a permutation with uniform positions") {
  Rng rng(7);
  std::array<std::array<int, 4>, 4> seen{};
  for (int t = 0; t < 40000; ++t) {
    std::array<int, 4> v = {0, 1, 2, 3};
    rng.shuffle(std::span<int>(v));
    for (int p = 0; p < 4; ++p) ++seen[v[p]][p];
  }
  // 9 degrees per value row is loose; 27.88 is the 0.999 quantile.
  for (const auto& row : seen) {
    double chi2 = 0;
    for (int n : row) chi2 += (n - 10000.0) * (n - 10000.0) / 10000.0;
    CHECK(chi2 < 27.88);
  }
}

TEST_CASE("reset and step") {
  for (Game g : kEngineGames) {
    auto s = reset(g, 5);
    const auto legal = s->legal_actions();
    REQUIRE_FALSE(legal.empty());
    auto next = step(*s, legal.front());
    CHECK(next->history().size() == 1);
    CHECK(s->history().empty());
    CHECK_THROWS_AS(s->payoffs(), NonTerminal);
  }
}

}  // namespace
}  // namespace cardlab
