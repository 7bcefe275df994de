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

#include "cardlab/doudizhu.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "cardlab/action_codec.h"

namespace cardlab {
namespace {

constexpr int kTwoOrd = 12;
constexpr int kBlackJokerOrd = 13;
constexpr int kRedJokerOrd = 14;

using Counts = std::array<int, kDouNumOrdinals>;

Counts count_ordinals(std::span<const int> cards) {
  Counts c{};
  for (int v : cards) ++c[dou_ordinal(v)];
  return c;
}

// Ordinals [start, start+len) are all chainable (below 2) and have exactly
// `need` cards each.
bool is_run(const Counts& c, int start, int len, int need, bool exact) {
  if (start < 0 || start + len > kTwoOrd) return false;
  for (int o = start; o < start + len; ++o) {
    if (exact ? c[o] != need : c[o] < need) return false;
  }
  return true;
}

std::vector<int> expand(const Counts& c) {
  std::vector<int> out;
  for (int o = 0; o < kDouNumOrdinals; ++o)
    for (int k = 0; k < c[o]; ++k) out.push_back(dou_value_of_ordinal(o));
  std::sort(out.begin(), out.end());
  return out;
}

DouCombo make(DouCategory cat, int primal_ord, int len, std::vector<int> cards) {
  std::sort(cards.begin(), cards.end());
  return DouCombo{cat, dou_value_of_ordinal(primal_ord), len, std::move(cards)};
}

int min_chain(DouCategory cat) {
  switch (cat) {
    case DouCategory::kSoloChain: return 5;
    case DouCategory::kPairChain: return 3;
    default: return 2;
  }
}

}  // namespace

std::string_view dou_category_name(DouCategory c) {
  static constexpr std::string_view kNames[] = {
      "Pass",  "Solo",       "SoloChain",         "Pair",
      "PairChain", "Trio",   "TrioChain",         "TrioWithSolo",
      "TrioChainWithSolo", "TrioWithPair", "TrioChainWithPair", "Bomb",
      "Rocket", "FourWithDualSolo", "FourWithDualPair"};
  return kNames[static_cast<int>(c)];
}

int dou_ordinal(int value) {
  if (value >= 3 && value <= 14) return value - 3;
  if (value == 17) return kTwoOrd;
  if (value == 20) return kBlackJokerOrd;
  if (value == 30) return kRedJokerOrd;
  throw UnknownNotation("bad doudizhu card value " + std::to_string(value));
}

int dou_value_of_ordinal(int ordinal) {
  if (ordinal < kTwoOrd) return ordinal + 3;
  if (ordinal == kTwoOrd) return 17;
  if (ordinal == kBlackJokerOrd) return 20;
  return 30;
}

std::vector<DouCombo> classify_dou(std::span<const int> cards) {
  std::vector<DouCombo> out;
  std::vector<int> sorted(cards.begin(), cards.end());
  std::sort(sorted.begin(), sorted.end());
  const int n = static_cast<int>(sorted.size());
  if (n == 0) return {DouCombo{DouCategory::kPass, 0, 0, {}}};
  const Counts c = count_ordinals(sorted);
  std::vector<int> present;
  for (int o = 0; o < kDouNumOrdinals; ++o)
    if (c[o] > 0) present.push_back(o);
  const int lo = present.front();
  const int distinct = static_cast<int>(present.size());
  auto add = [&](DouCategory cat, int primal_ord, int len) {
    out.push_back(DouCombo{cat, dou_value_of_ordinal(primal_ord), len, sorted});
  };

  if (distinct == 1) {
    switch (n) {
      case 1: add(DouCategory::kSolo, lo, 1); break;
      case 2: add(DouCategory::kPair, lo, 1); break;
      case 3: add(DouCategory::kTrio, lo, 1); break;
      case 4: add(DouCategory::kBomb, lo, 1); break;
      default: break;
    }
    return out;
  }
  if (n == 2 && c[kBlackJokerOrd] == 1 && c[kRedJokerOrd] == 1) {
    add(DouCategory::kRocket, kRedJokerOrd, 1);
    return out;
  }
  // Plain chains.
  for (auto [cat, per] : {std::pair{DouCategory::kSoloChain, 1},
                          std::pair{DouCategory::kPairChain, 2},
                          std::pair{DouCategory::kTrioChain, 3}}) {
    if (n % per == 0 && n / per == distinct && distinct >= min_chain(cat) &&
        is_run(c, lo, distinct, per, true)) {
      add(cat, lo, distinct);
    }
  }
  // Trio with kicker(s).
  if (n == 4 && distinct == 2) {
    for (int o : present)
      if (c[o] == 3) add(DouCategory::kTrioWithSolo, o, 1);
  }
  if (n == 5 && distinct == 2) {
    for (int o : present)
      if (c[o] == 3) add(DouCategory::kTrioWithPair, o, 1);
  }
  // Four with two.
  if (n == 6) {
    for (int o : present) {
      if (c[o] != 4) continue;
      if (c[kBlackJokerOrd] == 1 && c[kRedJokerOrd] == 1) continue;
      add(DouCategory::kFourWithDualSolo, o, 1);
    }
  }
  if (n == 8 && distinct == 3) {
    for (int o : present) {
      if (c[o] != 4) continue;
      bool pairs = true;
      for (int p : present)
        if (p != o && c[p] != 2) pairs = false;
      if (pairs) add(DouCategory::kFourWithDualPair, o, 1);
    }
  }
  // Airplanes with wings: chain ranks hold exactly three cards.
  if (n % 4 == 0 && n / 4 >= 2) {
    const int len = n / 4;
    for (int start = 0; start + len <= kTwoOrd; ++start) {
      if (is_run(c, start, len, 3, true)) {
        add(DouCategory::kTrioChainWithSolo, start, len);
      }
    }
  }
  if (n % 5 == 0 && n / 5 >= 2) {
    const int len = n / 5;
    for (int start = 0; start + len <= kTwoOrd; ++start) {
      if (!is_run(c, start, len, 3, true)) continue;
      int pairs = 0;
      bool ok = true;
      for (int o : present) {
        if (o >= start && o < start + len) continue;
        if (c[o] == 2) {
          ++pairs;
        } else {
          ok = false;
        }
      }
      if (ok && pairs == len) add(DouCategory::kTrioChainWithPair, start, len);
    }
  }
  return out;
}

bool compare_dou(const DouCombo& a, const DouCombo& b) {
  using C = DouCategory;
  if (a.category == C::kPass) return false;
  if (a.category == C::kRocket) return b.category != C::kRocket;
  if (b.category == C::kRocket) return false;
  if (a.category == C::kBomb) {
    if (b.category == C::kBomb)
      return dou_ordinal(a.primal) > dou_ordinal(b.primal);
    return true;
  }
  if (b.category == C::kBomb) return false;
  return a.category == b.category && a.length == b.length &&
         a.cards.size() == b.cards.size() &&
         dou_ordinal(a.primal) > dou_ordinal(b.primal);
}

std::vector<DouCombo> enumerate_dou_moves(
    std::span<const int> hand, const std::optional<DouCombo>& last_move) {
  using C = DouCategory;
  const Counts c = count_ordinals(hand);
  std::vector<DouCombo> all;

  for (int o = 0; o < kDouNumOrdinals; ++o) {
    const int v = dou_value_of_ordinal(o);
    if (c[o] >= 1) all.push_back(make(C::kSolo, o, 1, {v}));
    if (c[o] >= 2) all.push_back(make(C::kPair, o, 1, {v, v}));
    if (c[o] >= 3) all.push_back(make(C::kTrio, o, 1, {v, v, v}));
    if (c[o] == 4) all.push_back(make(C::kBomb, o, 1, {v, v, v, v}));
  }
  if (c[kBlackJokerOrd] && c[kRedJokerOrd]) {
    all.push_back(make(C::kRocket, kRedJokerOrd, 1, {20, 30}));
  }

  // Chains of solos, pairs and trios.
  for (auto [cat, per] : {std::pair{C::kSoloChain, 1}, std::pair{C::kPairChain, 2},
                          std::pair{C::kTrioChain, 3}}) {
    for (int start = 0; start < kTwoOrd; ++start) {
      for (int len = min_chain(cat); start + len <= kTwoOrd; ++len) {
        if (!is_run(c, start, len, per, false)) break;
        if (len * per > static_cast<int>(hand.size())) break;
        std::vector<int> cards;
        for (int o = start; o < start + len; ++o)
          for (int k = 0; k < per; ++k) cards.push_back(dou_value_of_ordinal(o));
        all.push_back(make(cat, start, len, std::move(cards)));
      }
    }
  }

  // Multisets of `k` kicker cards drawn from `avail`, ordinals ascending.
  auto for_each_solo_kickers = [](const Counts& avail, int k,
                                  const std::function<void(const Counts&)>& fn) {
    Counts pick{};
    std::function<void(int, int)> rec = [&](int o, int left) {
      if (left == 0) {
        fn(pick);
        return;
      }
      if (o >= kDouNumOrdinals) return;
      for (int take = std::min(left, avail[o]); take >= 0; --take) {
        pick[o] = take;
        rec(o + 1, left - take);
      }
      pick[o] = 0;
    };
    rec(0, k);
  };
  auto for_each_pair_kickers = [](const Counts& avail, int k,
                                  const std::function<void(const Counts&)>& fn) {
    Counts pick{};
    std::function<void(int, int)> rec = [&](int o, int left) {
      if (left == 0) {
        fn(pick);
        return;
      }
      if (o >= kDouNumOrdinals) return;
      if (avail[o] >= 2) {
        pick[o] = 2;
        rec(o + 1, left - 1);
        pick[o] = 0;
      }
      rec(o + 1, left);
    };
    rec(0, k);
  };

  // Trio with a kicker, trio with a pair.
  for (int t = 0; t < kDouNumOrdinals; ++t) {
    if (c[t] < 3) continue;
    const int tv = dou_value_of_ordinal(t);
    for (int o = 0; o < kDouNumOrdinals; ++o) {
      if (o == t) continue;
      const int ov = dou_value_of_ordinal(o);
      if (c[o] >= 1) all.push_back(make(C::kTrioWithSolo, t, 1, {tv, tv, tv, ov}));
      if (c[o] >= 2)
        all.push_back(make(C::kTrioWithPair, t, 1, {tv, tv, tv, ov, ov}));
    }
  }

  // Four with two solos / two pairs.
  for (int q = 0; q < kDouNumOrdinals; ++q) {
    if (c[q] != 4) continue;
    Counts avail = c;
    avail[q] = 0;
    const int qv = dou_value_of_ordinal(q);
    for_each_solo_kickers(avail, 2, [&](const Counts& pick) {
      if (pick[kBlackJokerOrd] && pick[kRedJokerOrd]) return;
      std::vector<int> cards = expand(pick);
      cards.insert(cards.end(), {qv, qv, qv, qv});
      all.push_back(make(C::kFourWithDualSolo, q, 1, std::move(cards)));
    });
    for_each_pair_kickers(avail, 2, [&](const Counts& pick) {
      std::vector<int> cards = expand(pick);
      cards.insert(cards.end(), {qv, qv, qv, qv});
      all.push_back(make(C::kFourWithDualPair, q, 1, std::move(cards)));
    });
  }

  // Airplanes with wings; kickers never share a chain rank.
  for (int start = 0; start < kTwoOrd; ++start) {
    for (int len = 2; start + len <= kTwoOrd; ++len) {
      if (!is_run(c, start, len, 3, false)) break;
      Counts avail = c;
      std::vector<int> body;
      for (int o = start; o < start + len; ++o) {
        avail[o] = 0;
        for (int k = 0; k < 3; ++k) body.push_back(dou_value_of_ordinal(o));
      }
      if (len * 4 <= static_cast<int>(hand.size())) {
        for_each_solo_kickers(avail, len, [&](const Counts& pick) {
          std::vector<int> cards = expand(pick);
          cards.insert(cards.end(), body.begin(), body.end());
          all.push_back(make(C::kTrioChainWithSolo, start, len, std::move(cards)));
        });
      }
      if (len * 5 <= static_cast<int>(hand.size())) {
        for_each_pair_kickers(avail, len, [&](const Counts& pick) {
          std::vector<int> cards = expand(pick);
          cards.insert(cards.end(), body.begin(), body.end());
          all.push_back(make(C::kTrioChainWithPair, start, len, std::move(cards)));
        });
      }
    }
  }

  std::vector<DouCombo> out;
  if (last_move && last_move->category != C::kPass) {
    out.push_back(DouCombo{C::kPass, 0, 0, {}});
    for (auto& m : all)
      if (compare_dou(m, *last_move)) out.push_back(std::move(m));
  } else {
    out = std::move(all);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string_view dou_role_name(int seat) {
  static constexpr std::string_view kRoles[] = {"landlord", "landlord_down",
                                                "landlord_up"};
  return kRoles[seat];
}

DouDizhuState::DouDizhuState(Seed seed, const GameOptions& /*options*/) {
  Deck deck = build_deck(Game::kDouDizhu);
  Rng rng(seed);
  rng.shuffle(std::span<Card>(deck.cards));
  auto it = deck.cards.begin();
  hands_[0].assign(it, it + 20);
  hands_[1].assign(it + 20, it + 37);
  hands_[2].assign(it + 37, it + 54);
  for (auto& h : hands_) std::sort(h.begin(), h.end(), [](Card a, Card b) {
    return std::pair(dou_ordinal(dou_value(a)), a) <
           std::pair(dou_ordinal(dou_value(b)), b);
  });
}

DouDizhuState::DouDizhuState(const std::array<std::vector<Card>, 3>& hands)
    : hands_(hands) {}

std::vector<int> DouDizhuState::hand_values(int seat) const {
  std::vector<int> v;
  v.reserve(hands_[seat].size());
  for (const Card& c : hands_[seat]) v.push_back(dou_value(c));
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Action> DouDizhuState::legal_actions() const {
  if (is_terminal()) throw TerminalState("doudizhu game is over");
  return legal_set().list();
}

bool DouDizhuState::is_legal(const Action& action) const {
  return !is_terminal() && legal_set().contains(action);
}

const LegalSet& DouDizhuState::legal_set() const {
  if (!legal_cache_) {
    const auto hand = hand_values(current_);
    const auto moves = enumerate_dou_moves(hand, last_move_);
    std::set<std::vector<int>> seen;
    for (const auto& m : moves) seen.insert(m.cards);
    std::vector<Action> out;
    out.reserve(seen.size());
    for (const auto& cards : seen) out.push_back(DouAction{cards});
    legal_cache_ = std::make_shared<const LegalSet>(std::move(out));
  }
  return *legal_cache_;
}

void DouDizhuState::apply(const Action& action) {
  require_legal(*this, action);
  const auto& move = std::get<DouAction>(action);
  const int seat = current_;
  history_.push_back({seat, action});
  legal_cache_.reset();

  if (move.is_pass()) {
    if (++passes_ == 2) {
      passes_ = 0;
      last_move_.reset();
      current_ = last_mover_;
    } else {
      current_ = (seat + 1) % 3;
    }
    return;
  }

  // Pick the reading of the cards that is legal here.
  auto readings = classify_dou(move.cards);
  DouCombo chosen = readings.front();
  if (last_move_) {
    for (const auto& r : readings) {
      if (compare_dou(r, *last_move_)) {
        chosen = r;
        break;
      }
    }
  }
  for (int v : move.cards) {
    auto& hand = hands_[seat];
    auto it = std::find_if(hand.begin(), hand.end(),
                           [v](const Card& c) { return dou_value(c) == v; });
    played_[seat].push_back(*it);
    hand.erase(it);
  }
  if (chosen.category == DouCategory::kBomb ||
      chosen.category == DouCategory::kRocket) {
    ++bombs_;
  }
  last_move_ = std::move(chosen);
  last_mover_ = seat;
  passes_ = 0;
  if (hands_[seat].empty()) {
    winner_ = seat;
    return;
  }
  current_ = (seat + 1) % 3;
}

std::vector<double> DouDizhuState::payoffs() const {
  if (!is_terminal()) throw NonTerminal("doudizhu game is not over");
  const bool landlord_won = winner_ == kDouLandlord;
  return {landlord_won ? 1.0 : 0.0, landlord_won ? 0.0 : 1.0,
          landlord_won ? 0.0 : 1.0};
}

std::string DouDizhuState::winner_side() const {
  if (!is_terminal()) throw NonTerminal("doudizhu game is not over");
  return winner_ == kDouLandlord ? "landlord" : "farmers";
}

Observation DouDizhuState::observe(int seat) const {
  Observation obs{Game::kDouDizhu, seat, role(seat), Json::object()};
  auto values = [](const std::vector<Card>& cards) {
    std::vector<int> v;
    for (const Card& c : cards) v.push_back(dou_value(c));
    std::sort(v.begin(), v.end());
    return Json(v);
  };
  std::vector<Card> others;
  for (int s = 0; s < 3; ++s)
    if (s != seat) others.insert(others.end(), hands_[s].begin(), hands_[s].end());
  Json played = Json::object();
  Json left = Json::object();
  for (int s = 0; s < 3; ++s) {
    played[std::string(dou_role_name(s))] = values(played_[s]);
    left[std::string(dou_role_name(s))] = hands_[s].size();
  }
  Json history = Json::array();
  for (const auto& h : history_) {
    history.push_back(
        Json::array({h.seat, action_value(Game::kDouDizhu, h.action)}));
  }
  auto& f = obs.fields;
  f["turn_number"] = history_.size() + 1;
  f["role"] = role(seat);
  f["hand"] = values(hands_[seat]);
  f["others_hand"] = values(others);
  f["last_move"] = last_move_ ? Json(last_move_->cards) : Json::array();
  f["played_cards"] = std::move(played);
  f["num_cards_left"] = std::move(left);
  f["bomb_num"] = bombs_;
  f["history"] = std::move(history);
  Json legal = Json::array();
  if (!is_terminal() && seat == current_) {
    for (const auto& a : legal_actions())
      legal.push_back(action_value(Game::kDouDizhu, a));
  }
  f["legal_actions"] = std::move(legal);
  return obs;
}

std::vector<Card> DouDizhuState::all_cards() const {
  std::vector<Card> out;
  for (int s = 0; s < 3; ++s) {
    out.insert(out.end(), hands_[s].begin(), hands_[s].end());
    out.insert(out.end(), played_[s].begin(), played_[s].end());
  }
  return out;
}

std::string DouDizhuState::serialize() const {
  std::ostringstream os;
  for (int s = 0; s < 3; ++s) {
    os << "hand" << s << ':';
    for (const Card& c : hands_[s]) os << format_card(c) << ' ';
    os << "|played" << s << ':';
    for (const Card& c : played_[s]) os << format_card(c) << ' ';
    os << '\n';
  }
  os << "cur:" << current_ << " last_mover:" << last_mover_
     << " passes:" << passes_ << " bombs:" << bombs_ << " winner:" << winner_;
  if (last_move_) {
    os << " last:" << dou_category_name(last_move_->category) << '/'
       << last_move_->primal << '/' << last_move_->length;
  }
  os << "\nhistory:";
  for (const auto& h : history_)
    os << h.seat << '=' << describe_action(Game::kDouDizhu, h.action) << ';';
  return os.str();
}

std::unique_ptr<State> new_doudizhu(Seed seed, const GameOptions& options) {
  return std::make_unique<DouDizhuState>(seed, options);
}

}  // namespace cardlab
