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

#include "cardlab/gin_rummy.h"

#include <algorithm>
#include <bit>
#include <climits>
#include <functional>
#include <sstream>

#include "cardlab/action_codec.h"

namespace cardlab {

int gin_rank_index(Rank r) {
  return r == Rank::kAce ? 1 : rank_value(r);
}

int gin_card_value(const Card& c) {
  return std::min(10, gin_rank_index(c.rank()));
}

std::vector<Meld> candidate_melds(const std::vector<Card>& cards) {
  std::vector<Meld> out;
  // Sets.
  for (int r = 1; r <= 13; ++r) {
    std::vector<Card> same;
    for (const Card& c : cards)
      if (gin_rank_index(c.rank()) == r) same.push_back(c);
    std::sort(same.begin(), same.end());
    if (same.size() >= 3) {
      if (same.size() == 4) out.push_back({MeldKind::kSet, same});
      for (std::size_t skip = 0; skip < same.size(); ++skip) {
        if (same.size() == 3 && skip > 0) break;
        std::vector<Card> three;
        for (std::size_t i = 0; i < same.size(); ++i)
          if (same.size() == 3 || i != skip) three.push_back(same[i]);
        out.push_back({MeldKind::kSet, three});
      }
    }
  }
  // Runs.
  for (Suit s : kSuits) {
    std::array<bool, 14> has{};
    for (const Card& c : cards)
      if (c.suit() == s) has[gin_rank_index(c.rank())] = true;
    for (int lo = 1; lo <= 11; ++lo) {
      for (int hi = lo + 2; hi <= 13; ++hi) {
        bool ok = true;
        for (int r = lo; r <= hi && ok; ++r) ok = has[r];
        if (!ok) break;
        std::vector<Card> run;
        for (int r = lo; r <= hi; ++r)
          run.push_back(Card::french(s, r == 1 ? Rank::kAce : rank_from_value(r)));
        out.push_back({MeldKind::kRun, run});
      }
    }
  }
  return out;
}

namespace {

// Calls fn(chosen melds, used mask) for every maximal-or-not selection of
// disjoint melds; the deadwood is the complement.
void for_each_packing(const std::vector<Card>& hand,
                      const std::function<void(const std::vector<const Meld*>&,
                                               unsigned)>& fn,
                      const std::vector<Meld>& melds) {
  std::vector<unsigned> masks;
  for (const Meld& m : melds) {
    unsigned mask = 0;
    for (const Card& c : m.cards) {
      const auto it = std::find(hand.begin(), hand.end(), c);
      mask |= 1u << (it - hand.begin());
    }
    masks.push_back(mask);
  }
  std::vector<const Meld*> chosen;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i,
                                                      unsigned used) {
    if (i == melds.size()) {
      fn(chosen, used);
      return;
    }
    rec(i + 1, used);
    if ((masks[i] & used) == 0) {
      chosen.push_back(&melds[i]);
      rec(i + 1, used | masks[i]);
      chosen.pop_back();
    }
  };
  rec(0, 0);
}

}  // namespace

std::vector<int> deadwood_after_discards(const std::vector<Card>& hand) {
  const int n = static_cast<int>(hand.size());
  int total = 0;
  std::vector<int> value(n);
  for (int i = 0; i < n; ++i) total += value[i] = gin_card_value(hand[i]);
  std::vector<std::pair<unsigned, int>> melds;  // mask, covered value
  for (const Meld& m : candidate_melds(hand)) {
    unsigned mask = 0;
    int v = 0;
    for (const Card& c : m.cards) {
      const int i = static_cast<int>(std::find(hand.begin(), hand.end(), c) - hand.begin());
      mask |= 1u << i;
      v += value[i];
    }
    melds.push_back({mask, v});
  }
  // best[i]: most value covered by a packing that leaves card i free.
  std::vector<int> best(n, 0);
  std::function<void(std::size_t, unsigned, int)> rec = [&](std::size_t k, unsigned used,
                                                            int cover) {
    for (int i = 0; i < n; ++i)
      if (!(used >> i & 1u)) best[i] = std::max(best[i], cover);
    for (; k < melds.size(); ++k)
      if (!(melds[k].first & used)) rec(k + 1, used | melds[k].first, cover + melds[k].second);
  };
  rec(0, 0, 0);
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = total - value[i] - best[i];
  return out;
}

DeadwoodResult min_deadwood_any(const std::vector<Card>& hand) {
  const std::vector<Meld> melds = candidate_melds(hand);
  const int n = static_cast<int>(hand.size());
  std::vector<int> value(n);
  for (int i = 0; i < n; ++i) value[i] = gin_card_value(hand[i]);

  // Branch on the lowest undecided card: deadwood, or in one meld with it.
  std::vector<std::vector<std::pair<unsigned, int>>> by_card(n);
  for (std::size_t m = 0; m < melds.size(); ++m) {
    unsigned mask = 0;
    for (const Card& c : melds[m].cards)
      mask |= 1u << (std::find(hand.begin(), hand.end(), c) - hand.begin());
    by_card[std::countr_zero(mask)].push_back({mask, static_cast<int>(m)});
  }
  int best = INT_MAX;
  std::vector<int> cur;
  std::vector<int> best_melds;
  std::function<void(int, unsigned, int)> rec = [&](int i, unsigned used,
                                                   int dead) {
    if (dead >= best) return;
    while (i < n && (used >> i & 1u)) ++i;
    if (i == n) {
      best = dead;
      best_melds = cur;
      return;
    }
    for (auto [mask, id] : by_card[i]) {
      if (mask & used) continue;
      cur.push_back(id);
      rec(i + 1, used | mask, dead);
      cur.pop_back();
    }
    rec(i + 1, used | (1u << i), dead + value[i]);
  };
  rec(0, 0, 0);

  DeadwoodResult r;
  unsigned used = 0;
  for (int id : best_melds) {
    r.melds.push_back(melds[id]);
    for (const Card& c : melds[id].cards)
      used |= 1u << (std::find(hand.begin(), hand.end(), c) - hand.begin());
  }
  for (int i = 0; i < n; ++i)
    if (!(used >> i & 1u)) r.deadwood.push_back(hand[i]);
  std::sort(r.deadwood.begin(), r.deadwood.end());
  r.count = best;
  return r;
}

DeadwoodResult min_deadwood(const std::vector<Card>& hand) {
  if (hand.size() != 10 && hand.size() != 11) {
    throw BadHandSize("deadwood needs 10 or 11 cards, got " +
                      std::to_string(hand.size()));
  }
  return min_deadwood_any(hand);
}

namespace {

bool extends(const Meld& m, const Card& c) {
  if (m.kind == MeldKind::kSet) {
    return m.cards.size() < 4 && c.rank() == m.cards[0].rank();
  }
  if (c.suit() != m.cards[0].suit()) return false;
  int lo = 14, hi = 0;
  for (const Card& x : m.cards) {
    lo = std::min(lo, gin_rank_index(x.rank()));
    hi = std::max(hi, gin_rank_index(x.rank()));
  }
  const int r = gin_rank_index(c.rank());
  return r == lo - 1 || r == hi + 1;
}

int greedy_layoff(std::vector<Card> dead, std::vector<Meld> melds) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (auto it = dead.begin(); it != dead.end() && !moved; ++it) {
      for (Meld& m : melds) {
        if (extends(m, *it)) {
          m.cards.push_back(*it);
          dead.erase(it);
          moved = true;
          break;
        }
      }
    }
  }
  int sum = 0;
  for (const Card& c : dead) sum += gin_card_value(c);
  return sum;
}

}  // namespace

int deadwood_after_layoff(const std::vector<Card>& defender,
                          const std::vector<Meld>& knocker_melds) {
  const std::vector<Meld> melds = candidate_melds(defender);
  int best = INT_MAX;
  for_each_packing(
      defender,
      [&](const std::vector<const Meld*>&, unsigned used) {
        std::vector<Card> dead;
        for (std::size_t i = 0; i < defender.size(); ++i)
          if (!(used >> i & 1u)) dead.push_back(defender[i]);
        best = std::min(best, greedy_layoff(dead, knocker_melds));
      },
      melds);
  return best;
}

std::array<int, 2> gin_score(int knocker_deadwood, int defender_deadwood,
                             bool gin) {
  if (gin) return {defender_deadwood + 25, 0};
  const int diff = defender_deadwood - knocker_deadwood;
  if (diff > 0) return {diff, 0};
  return {0, -diff + 25};
}

// ---------------------------------------------------------------------------

GinRummyState::GinRummyState(Seed seed, const GameOptions& options) {
  Deck deck = build_deck(Game::kGinRummy);
  Rng rng(seed);
  rng.shuffle(std::span<Card>(deck.cards));
  const int dealer = static_cast<int>(options.match_index % 2);
  current_ = 1 - dealer;
  stock_ = std::move(deck.cards);
  for (int k = 0; k < 11; ++k) {
    hands_[current_].push_back(stock_.back());
    stock_.pop_back();
    if (k < 10) {
      hands_[dealer].push_back(stock_.back());
      stock_.pop_back();
    }
  }
  for (auto& h : hands_) std::sort(h.begin(), h.end());
}

GinRummyState::GinRummyState(const std::array<std::vector<Card>, 2>& hands,
                             std::vector<Card> stock, int first)
    : hands_(hands), stock_(std::move(stock)), current_(first) {
  for (auto& h : hands_) std::sort(h.begin(), h.end());
}

std::vector<Action> GinRummyState::legal_actions() const {
  if (is_terminal()) throw TerminalState("gin rummy hand is over");
  if (legal_cache_) return *legal_cache_;
  std::vector<Action> out;
  switch (phase_) {
    case GinPhase::kDraw:
      if (stock_.size() <= 2 || turns_ >= kGinMaxTurns) {
        out.push_back(GinAction{GinKind::kDeclareDead, Card()});
      } else {
        out.push_back(GinAction{GinKind::kDrawCard, Card()});
        if (!discard_.empty())
          out.push_back(GinAction{GinKind::kPickUpDiscard, Card()});
      }
      break;
    case GinPhase::kDiscard: {
      const auto& hand = hands_[current_];
      const std::vector<int> after = deadwood_after_discards(hand);
      bool gin = false;
      for (std::size_t i = 0; i < hand.size(); ++i) {
        if (i > 0 && hand[i] == hand[i - 1]) continue;
        const int dw = after[i];
        out.push_back(GinAction{GinKind::kDiscard, hand[i]});
        if (dw <= 10) out.push_back(GinAction{GinKind::kKnock, hand[i]});
        if (dw == 0) gin = true;
      }
      if (gin) out.push_back(GinAction{GinKind::kGin, Card()});
      std::sort(out.begin(), out.end());
      break;
    }
    case GinPhase::kScoreN:
      out.push_back(GinAction{GinKind::kScoreN, Card()});
      break;
    case GinPhase::kScoreS:
      out.push_back(GinAction{GinKind::kScoreS, Card()});
      break;
    case GinPhase::kOver:
      break;
  }
  legal_cache_ = out;
  return out;
}

void GinRummyState::end_hand(int seat, GinKind how) {
  if (how != GinKind::kDeclareDead) {
    const DeadwoodResult mine = min_deadwood_any(hands_[seat]);
    const bool gin = how == GinKind::kGin;
    const int defender = gin ? min_deadwood_any(hands_[1 - seat]).count
                             : deadwood_after_layoff(hands_[1 - seat], mine.melds);
    const auto pts = gin_score(mine.count, defender, gin);
    points_[seat] = pts[0];
    points_[1 - seat] = pts[1];
  }
  phase_ = GinPhase::kScoreN;
  current_ = 0;
}

void GinRummyState::apply(const Action& action) {
  require_legal(*this, action);
  const auto& a = std::get<GinAction>(action);
  const int seat = current_;
  history_.push_back({seat, action});
  legal_cache_.reset();
  auto& hand = hands_[seat];
  auto discard_card = [&](Card c) {  // by value: c may alias hand
    hand.erase(std::find(hand.begin(), hand.end(), c));
    auto& k = known_[seat];
    const auto it = std::find(k.begin(), k.end(), c);
    if (it != k.end()) k.erase(it);
    discard_.push_back(c);
  };

  switch (a.kind) {
    case GinKind::kDrawCard:
      hand.push_back(stock_.back());
      stock_.pop_back();
      std::sort(hand.begin(), hand.end());
      phase_ = GinPhase::kDiscard;
      break;
    case GinKind::kPickUpDiscard:
      hand.push_back(discard_.back());
      known_[seat].push_back(discard_.back());
      discard_.pop_back();
      std::sort(hand.begin(), hand.end());
      phase_ = GinPhase::kDiscard;
      break;
    case GinKind::kDiscard:
      discard_card(a.card);
      ++turns_;
      current_ = 1 - seat;
      phase_ = GinPhase::kDraw;
      break;
    case GinKind::kKnock:
      discard_card(a.card);
      end_hand(seat, GinKind::kKnock);
      break;
    case GinKind::kGin: {
      // Discard the highest card that leaves the hand fully melded.
      for (auto it = hand.rbegin(); it != hand.rend(); ++it) {
        std::vector<Card> rest = hand;
        rest.erase(std::find(rest.begin(), rest.end(), *it));
        if (min_deadwood_any(rest).count == 0) {
          discard_card(*it);
          break;
        }
      }
      end_hand(seat, GinKind::kGin);
      break;
    }
    case GinKind::kDeclareDead:
      end_hand(seat, GinKind::kDeclareDead);
      break;
    case GinKind::kScoreN:
      phase_ = GinPhase::kScoreS;
      current_ = 1;
      break;
    case GinKind::kScoreS:
      phase_ = GinPhase::kOver;
      break;
  }
}

std::vector<double> GinRummyState::payoffs() const {
  if (!is_terminal()) throw NonTerminal("gin rummy hand is not over");
  const double net =
      std::clamp((points_[0] - points_[1]) / 100.0, -1.0, 1.0);
  return {net, -net};
}

Observation GinRummyState::observe(int seat) const {
  Observation obs{Game::kGinRummy, seat, role(seat), Json::object()};
  auto names = [](std::vector<Card> cards) {
    std::sort(cards.begin(), cards.end());
    Json out = Json::array();
    for (const Card& c : cards) out.push_back(format_card_rank_first(c));
    return out;
  };
  Json history = Json::array();
  for (const auto& h : history_)
    history.push_back(
        Json::array({h.seat, action_value(Game::kGinRummy, h.action)}));
  auto& f = obs.fields;
  f["step"] = history_.size();
  f["id"] = seat;
  f["hand"] = names(hands_[seat]);
  f["top_discard"] =
      discard_.empty() ? Json(nullptr) : Json(format_card_rank_first(discard_.back()));
  Json others = Json::array();
  for (std::size_t i = 0; i + 1 < discard_.size(); ++i)
    others.push_back(format_card_rank_first(discard_[i]));
  f["other_discards"] = std::move(others);
  f["opponent_known_cards"] = names(known_[1 - seat]);
  f["stock_count"] = stock_.size();
  f["history"] = std::move(history);
  Json legal = Json::array();
  if (!is_terminal() && seat == current_) {
    for (const auto& a : legal_actions())
      legal.push_back(action_value(Game::kGinRummy, a));
  }
  f["legal_actions"] = std::move(legal);
  return obs;
}

std::vector<Card> GinRummyState::all_cards() const {
  std::vector<Card> out = stock_;
  out.insert(out.end(), discard_.begin(), discard_.end());
  for (const auto& h : hands_) out.insert(out.end(), h.begin(), h.end());
  return out;
}

std::string GinRummyState::serialize() const {
  std::ostringstream os;
  for (int s = 0; s < 2; ++s) {
    os << "hand" << s << ':';
    for (const Card& c : hands_[s]) os << format_card_rank_first(c) << ' ';
    os << "|known:";
    for (const Card& c : known_[s]) os << format_card_rank_first(c) << ' ';
    os << '\n';
  }
  os << "stock:";
  for (const Card& c : stock_) os << format_card_rank_first(c) << ' ';
  os << "\ndiscard:";
  for (const Card& c : discard_) os << format_card_rank_first(c) << ' ';
  os << "\ncur:" << current_ << " phase:" << static_cast<int>(phase_)
     << " turns:" << turns_ << " points:" << points_[0] << ',' << points_[1]
     << "\nhistory:";
  for (const auto& h : history_)
    os << h.seat << '=' << describe_action(Game::kGinRummy, h.action) << ';';
  return os.str();
}

std::unique_ptr<State> new_gin_rummy(Seed seed, const GameOptions& options) {
  return std::make_unique<GinRummyState>(seed, options);
}

}  // namespace cardlab
