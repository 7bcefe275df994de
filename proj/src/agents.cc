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

#include "cardlab/agents.h"

#include <algorithm>
#include <climits>
#include <map>

#include "cardlab/doudizhu.h"
#include "cardlab/gin_rummy.h"
#include "cardlab/guandan.h"

namespace cardlab {

Action RandomPolicy::act(const PolicyRequest& req, Rng& rng) {
  return req.legal[rng.uniform(req.legal.size())];
}

Action ScriptedPolicy::act(const PolicyRequest& req, Rng& /*rng*/) {
  for (const Action& a : req.legal)
    if (a == preferred_) return a;
  return req.legal.front();
}

Action RulePolicy::act(const PolicyRequest& req, Rng& /*rng*/) {
  if (req.legal.size() == 1) return req.legal.front();
  switch (req.game) {
    case Game::kDouDizhu: return rule_doudizhu(req);
    case Game::kGuanDan: return rule_guandan(req);
    case Game::kUno: return rule_uno(req);
    case Game::kGinRummy: return rule_gin_rummy(req);
    case Game::kLeduc:
    case Game::kLimit:
    case Game::kNoLimit: return rule_poker(req);
    case Game::kMahjong: break;
  }
  throw UnsupportedGame("no rule policy for " + std::string(game_name(req.game)));
}

// ---- DouDizhu ---------------------------------------------------------------

namespace {

// The seat that made the last non-pass move, from the history field.
int last_player(const Json& history) {
  for (auto it = history.rbegin(); it != history.rend(); ++it) {
    if (!(*it)[1].empty()) return (*it)[0].get<int>();
  }
  return -1;
}

}  // namespace

Action rule_doudizhu(const PolicyRequest& req) {
  const int seat = req.obs.seat;
  bool following = false;
  for (const Action& a : req.legal)
    if (std::get<DouAction>(a).is_pass()) following = true;
  if (following && seat != kDouLandlord) {
    const int last = last_player(req.obs.fields["history"]);
    if (last != kDouLandlord && last >= 0) return DouAction{};  // partner leads
  }
  const Action* best = nullptr;
  std::tuple<int, int, int> best_key;
  for (const Action& a : req.legal) {
    const auto& cards = std::get<DouAction>(a).cards;
    if (cards.empty()) continue;
    const auto readings = classify_dou(cards);
    if (readings.empty()) continue;
    const DouCombo& c = readings.front();
    const bool bomb = c.category == DouCategory::kBomb ||
                      c.category == DouCategory::kRocket;
    const int primal = dou_ordinal(c.primal);
    const int size = static_cast<int>(cards.size());
    // Leading: most cards, then lowest rank. Following: lowest rank.
    std::tuple<int, int, int> key =
        following ? std::tuple(bomb ? 1 : 0, primal, size)
                  : std::tuple(bomb ? 1 : 0, -size, primal);
    if (!best || key < best_key) {
      best = &a;
      best_key = key;
    }
  }
  if (!best) return DouAction{};
  if (following && std::get<0>(best_key) == 1) return DouAction{};
  return *best;
}

// ---- GuanDan ----------------------------------------------------------------

Action rule_guandan(const PolicyRequest& req) {
  const auto& f = req.obs.fields;
  const Rank level = parse_rank_char(f["current_rank"].get<std::string>()[0]);
  const LevelContext ctx{level};
  const auto& first = std::get<GuanAction>(req.legal.front());
  if (first.type == GuanType::kTribute) return req.legal.front();
  if (first.type == GuanType::kBack) {
    const Action* low = &req.legal.front();
    for (const Action& a : req.legal) {
      const Rank r = std::get<GuanAction>(a).cards[0].rank();
      if (r < std::get<GuanAction>(*low).cards[0].rank()) low = &a;
    }
    return *low;
  }
  bool following = first.is_pass();
  if (following && !f["last_action_teammate"].is_null()) {
    // Do not overtake a partner whose play is still on the table.
    const Json& mate = f["last_action_teammate"];
    const Json& up = f["last_action_others"]["up"];
    const bool up_passed = up.is_null() || up[0] == "PASS";
    if (mate[0] != "PASS" && up_passed) return req.legal.front();
  }
  const Action* best = nullptr;
  std::tuple<int, int, int, int> best_key;
  for (const Action& a : req.legal) {
    const auto& g = std::get<GuanAction>(a);
    if (g.is_pass()) continue;
    const bool bomb = g.type == GuanType::kBoom;
    const int wilds = guan_wilds_used(g, ctx);
    int order = 0;
    switch (g.type) {
      case GuanType::kStraight:
      case GuanType::kThreePair:
      case GuanType::kTripsPair:
        order = guan_sequence_start(g.rank[0]);
        break;
      default:
        order = guan_order(parse_rank_char(g.rank[0]), level);
    }
    const int size = static_cast<int>(g.cards.size());
    std::tuple<int, int, int, int> key =
        following ? std::tuple(bomb ? 1 : 0, wilds, order, size)
                  : std::tuple(bomb ? 1 : 0, wilds, -size, order);
    if (!best || key < best_key) {
      best = &a;
      best_key = key;
    }
  }
  if (!best || (following && std::get<0>(best_key) == 1)) {
    return req.legal.front();
  }
  return *best;
}

// ---- Uno --------------------------------------------------------------------

Action rule_uno(const PolicyRequest& req) {
  const auto& f = req.obs.fields;
  const Card top = parse_card(f["top_card"].get<std::string>());
  std::map<UnoColor, int> colors;
  for (const auto& s : f["hand"]) {
    const Card c = parse_card(s.get<std::string>());
    if (!c.is_uno_wild()) ++colors[c.color()];
  }
  UnoColor favourite = UnoColor::kRed;
  int most = -1;
  for (UnoColor c : kUnoColors) {
    if (colors[c] > most) {
      most = colors[c];
      favourite = c;
    }
  }
  auto tier = [&](const UnoAction& a) {
    if (a.draw) return 9;
    const Card c = a.card;
    if (c.face() == UnoFace::kWild) return c.color() == favourite ? 4 : 8;
    if (c.face() == UnoFace::kWildDrawFour) return c.color() == favourite ? 5 : 8;
    const bool action = c.face() >= UnoFace::kSkip;
    if (c.color() == top.color()) return action ? 1 : 2;
    return 3;
  };
  const Action* best = &req.legal.front();
  int best_tier = INT_MAX;
  for (const Action& a : req.legal) {
    const int t = tier(std::get<UnoAction>(a));
    if (t < best_tier) {
      best_tier = t;
      best = &a;
    }
  }
  return *best;
}

// ---- Gin Rummy --------------------------------------------------------------

namespace {

std::vector<Card> gin_cards(const Json& list) {
  std::vector<Card> out;
  for (const auto& s : list) out.push_back(parse_card_rank_first(s.get<std::string>()));
  return out;
}

int deadwood_without(std::vector<Card> hand, const Card& drop) {
  hand.erase(std::find(hand.begin(), hand.end(), drop));
  return min_deadwood_any(hand).count;
}

}  // namespace

Action rule_gin_rummy(const PolicyRequest& req) {
  const std::vector<Card> hand = gin_cards(req.obs.fields["hand"]);
  const Action* knock = nullptr;
  const Action* discard = nullptr;
  std::pair<int, int> knock_key{INT_MAX, 0}, discard_key{INT_MAX, 0};
  bool can_pick = false;
  for (const Action& a : req.legal) {
    const auto& g = std::get<GinAction>(a);
    switch (g.kind) {
      case GinKind::kGin: return a;
      case GinKind::kPickUpDiscard: can_pick = true; break;
      case GinKind::kKnock:
      case GinKind::kDiscard: {
        const std::pair<int, int> key{deadwood_without(hand, g.card),
                                      -gin_card_value(g.card)};
        auto& slot = g.kind == GinKind::kKnock ? knock : discard;
        auto& slot_key = g.kind == GinKind::kKnock ? knock_key : discard_key;
        if (key < slot_key) {
          slot = &a;
          slot_key = key;
        }
        break;
      }
      default: break;
    }
  }
  if (knock) return *knock;
  if (discard) return *discard;
  // Novice strength: the discard pile is never taken.
  if (can_pick) return GinAction{GinKind::kDrawCard, Card()};
  return req.legal.front();
}

// ---- poker ------------------------------------------------------------------

Action rule_poker(const PolicyRequest& req) {
  const auto& f = req.obs.fields;
  // Strength 0..2 from pairs and high cards.
  int strength = 0;
  std::vector<Card> mine, board;
  if (req.game == Game::kLeduc) {
    mine.push_back(parse_card(f["hand"].get<std::string>()));
    if (!f["public_card"].is_null())
      board.push_back(parse_card(f["public_card"].get<std::string>()));
  } else {
    for (const auto& s : f["hole_cards"]) mine.push_back(parse_card(s.get<std::string>()));
    for (const auto& s : f["community_cards"]) board.push_back(parse_card(s.get<std::string>()));
  }
  const Rank top = req.game == Game::kLeduc ? Rank::kKing : Rank::kAce;
  for (const Card& c : mine) {
    for (const Card& b : board)
      if (b.rank() == c.rank()) strength = 2;
    if (c.rank() == top) strength = std::max(strength, 1);
  }
  if (mine.size() == 2 && mine[0].rank() == mine[1].rank()) strength = 2;

  auto has = [&](const Action& a) {
    return std::find(req.legal.begin(), req.legal.end(), a) != req.legal.end();
  };
  if (req.game == Game::kNoLimit) {
    if (strength == 2 && has(NlAction::kRaisePot)) return NlAction::kRaisePot;
    if (strength == 2 && has(NlAction::kRaiseHalfPot)) return NlAction::kRaiseHalfPot;
    return NlAction::kCheckCall;
  }
  if (strength == 2 && has(BetAction::kRaise)) return BetAction::kRaise;
  if (has(BetAction::kCheck)) return BetAction::kCheck;
  if (strength >= 1) return BetAction::kCall;
  return BetAction::kFold;
}

}  // namespace cardlab
