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

#include "cardlab/errors.h"
#include "cardlab/poker.h"
#include "doctest.h"

namespace cardlab {
namespace {

Card c(const char* s) { return parse_card(s); }

HandRank five(const char* a, const char* b, const char* d, const char* e, const char* f) {
  return evaluate_five({c(a), c(b), c(d), c(e), c(f)});
}

TEST_CASE("five-card categories") {
  CHECK(five("SA", "SK", "SQ", "SJ", "ST").category == HandCategory::kRoyalFlush);
  CHECK(five("S9", "SK", "SQ", "SJ", "ST").category == HandCategory::kStraightFlush);
  CHECK(five("SA", "S2", "S3", "S4", "S5").category == HandCategory::kStraightFlush);
  CHECK(five("HA", "S2", "C3", "D4", "S5").category == HandCategory::kStraight);
  CHECK(five("H9", "S9", "C9", "D9", "S5").category == HandCategory::kFourOfAKind);
  CHECK(five("H9", "S9", "C9", "D5", "S5").category == HandCategory::kFullHouse);
  CHECK(five("H2", "H9", "HJ", "H4", "H5").category == HandCategory::kFlush);
}

TEST_CASE("ordering and ties") {
  // The wheel is the lowest straight.
  CHECK(five("HA", "S2", "C3", "D4", "S5") < five("H2", "S3", "C4", "D5", "S6"));
  CHECK(five("HA", "SA", "C3", "D4", "S5") > five("HK", "SK", "CQ", "DJ", "S9"));
  CHECK(five("HA", "SA", "C3", "D4", "S5") == five("CA", "DA", "H3", "S4", "D5"));
}

TEST_CASE("best of seven") {
  const std::vector<Card> seven = {c("SA"), c("SK"), c("H2"), c("SQ"), c("SJ"), c("D3"), c("ST")};
  CHECK(evaluate_hand(seven).category == HandCategory::kRoyalFlush);
  CHECK_THROWS_AS(evaluate_hand(std::vector<Card>{c("SA")}), BadCardCount);
  CHECK_THROWS_AS(evaluate_hand(std::vector<Card>{c("SA"), c("SA"), c("H2"), c("H3"), c("H4")}),
                  DuplicateCard);
}

TEST_CASE("leduc raises are capped") {
  LeducState s(c("SJ"), c("HQ"), c("SK"), 1);
  CHECK(s.current_seat() == 0);
  s.apply(BetAction::kRaise);
  s.apply(BetAction::kRaise);
  const auto legal = s.legal_actions();
  CHECK(std::find(legal.begin(), legal.end(), Action{BetAction::kRaise}) == legal.end());
  s.apply(BetAction::kCall);
  CHECK(s.round() == 1);
  CHECK(s.committed(0) == 5);
  CHECK(s.committed(1) == 5);
}

TEST_CASE("leduc pair with the board wins") {
  LeducState s(c("SJ"), c("HK"), c("HJ"), 1);
  for (int i = 0; i < 4; ++i) s.apply(BetAction::kCheck);
  REQUIRE(s.is_terminal());
  CHECK(s.payoffs()[0] > 0);
}

TEST_CASE("limit hold'em showdown splits ties") {
  HoldemState s(Game::kLimit, {{{c("S2"), c("H3")}, {c("C2"), c("D3")}}},
                {c("SA"), c("SK"), c("SQ"), c("SJ"), c("ST")}, 0);
  while (!s.is_terminal()) {
    const auto legal = s.legal_actions();
    const Action check = BetAction::kCheck;
    s.apply(std::find(legal.begin(), legal.end(), check) != legal.end() ? check
                                                                        : Action{BetAction::kCall});
  }
  CHECK(s.payoffs()[0] == 0.0);
  CHECK(s.payoffs()[1] == 0.0);
}

TEST_CASE("no-limit all-in caps at the stack") {
  HoldemState s(Game::kNoLimit, {{{c("SA"), c("HA")}, {c("C2"), c("D7")}}},
                {c("S3"), c("H8"), c("DJ"), c("CQ"), c("S9")}, 0);
  s.apply(NlAction::kAllIn);
  s.apply(NlAction::kCheckCall);
  REQUIRE(s.is_terminal());
  CHECK(s.committed(0) == kNlStack);
  CHECK(s.committed(1) == kNlStack);
  CHECK(s.payoffs()[0] + s.payoffs()[1] == doctest::Approx(0.0));
  CHECK(s.payoffs()[0] > 0);
}

}  // namespace
}  // namespace cardlab
