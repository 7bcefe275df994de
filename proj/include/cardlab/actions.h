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

#ifndef CARDLAB_ACTIONS_H_
#define CARDLAB_ACTIONS_H_

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "cardlab/cards.h"

namespace cardlab {

// DouDizhu: the played cards in numeric encoding, ascending; empty is pass.
struct DouAction {
  std::vector<int> cards;
  bool is_pass() const { return cards.empty(); }
  friend auto operator<=>(const DouAction&, const DouAction&) = default;
};

enum class GuanType {
  kSingle,
  kPair,
  kTrips,
  kThreePair,
  kThreeWithTwo,
  kTripsPair,
  kStraight,
  kBoom,
  kPass,
  kTribute,
  kBack,
};

// GuanDan [Type, Rank, Cards]. rank is one character of "23456789TJQKABR"
// or "PASS". cards are kept in canonical (sorted) order.
struct GuanAction {
  GuanType type = GuanType::kPass;
  std::string rank = "PASS";
  std::vector<Card> cards;
  bool is_pass() const { return type == GuanType::kPass; }
  friend auto operator<=>(const GuanAction&, const GuanAction&) = default;
};

// Uno: either "draw" or a play of `card`; played wilds carry the declared
// color.
struct UnoAction {
  bool draw = false;
  Card card;
  friend auto operator<=>(const UnoAction&, const UnoAction&) = default;
};

enum class GinKind {
  kDrawCard,
  kPickUpDiscard,
  kGin,
  kDiscard,
  kKnock,
  kDeclareDead,
  kScoreN,
  kScoreS,
};

// Gin Rummy; `card` is meaningful for discard and knock only.
struct GinAction {
  GinKind kind = GinKind::kDrawCard;
  Card card;
  friend auto operator<=>(const GinAction&, const GinAction&) = default;
};

// Leduc and Limit Hold'em.
enum class BetAction { kFold, kCall, kRaise, kCheck };

// No-limit Hold'em abstraction.
enum class NlAction { kFold, kCheckCall, kRaiseHalfPot, kRaisePot, kAllIn };

using Action =
    std::variant<DouAction, GuanAction, UnoAction, GinAction, BetAction,
                 NlAction>;

}  // namespace cardlab

#endif  // CARDLAB_ACTIONS_H_
