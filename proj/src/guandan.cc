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

#include "cardlab/guandan.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "cardlab/action_codec.h"

namespace cardlab {
namespace {

constexpr std::string_view kSeqRanks = "A23456789TJQKA";

// Rank at sequence position p (0 = ace-low, 13 = ace-high).
Rank seq_rank(int p) { return parse_rank_char(kSeqRanks[p]); }

// Per-rank, per-suit counts of the natural (non-wild) French cards.
struct Pool {
  std::array<std::array<int, 4>, 15> n{};
  int black = 0;
  int red = 0;
  int wilds = 0;

  int total(Rank r) const {
    const auto& s = n[rank_value(r)];
    return s[0] + s[1] + s[2] + s[3];
  }
};

Pool make_pool(std::span<const Card> hand, const LevelContext& ctx) {
  Pool p;
  for (const Card& c : hand) {
    if (c.rank() == Rank::kBlackJoker) {
      ++p.black;
    } else if (c.rank() == Rank::kRedJoker) {
      ++p.red;
    } else if (ctx.is_wild(c)) {
      ++p.wilds;
    } else {
      ++p.n[rank_value(c.rank())][static_cast<int>(c.suit())];
    }
  }
  return p;
}

struct Slot {
  Rank rank;
  int need;
};

// Calls fn(cards) for every distinct way of filling `slots` from the pool,
// wild cards standing in for missing naturals. In non-sequence patterns a
// slot made only of wilds must be the level rank itself.
template <typename Fn>
class SlotFiller {
 public:
  SlotFiller(const Pool& pool, std::span<const Slot> slots,
             std::optional<Suit> flush, bool sequence, const LevelContext& ctx,
             Fn& fn)
      : pool_(pool), slots_(slots), flush_(flush), sequence_(sequence),
        ctx_(ctx), fn_(fn) {
    chosen_.reserve(32);
  }

  void run() { slot(0, pool_.wilds); }

 private:
  int usable(std::size_t i) const {
    const auto& avail = pool_.n[rank_value(slots_[i].rank)];
    int a = 0;
    for (int s = 0; s < 4; ++s)
      if (!flush_ || kSuits[s] == *flush_) a += avail[s];
    return a;
  }

  void slot(std::size_t i, int wilds_left) {
    if (i == slots_.size()) {
      std::vector<Card> cards;
      cards.reserve(chosen_.size() + pool_.wilds);
      cards = chosen_;
      for (int w = wilds_left; w < pool_.wilds; ++w) cards.push_back(ctx_.wild());
      std::sort(cards.begin(), cards.end());
      fn_(std::move(cards));
      return;
    }
    const Slot& sl = slots_[i];
    const int min_nat = std::max(0, sl.need - wilds_left);
    const int max_nat = std::min(sl.need, usable(i));
    for (int k = max_nat; k >= min_nat; --k) {
      if (k == 0 && !sequence_ && sl.rank != ctx_.level) continue;
      take_ = {};
      pick(i, 0, k, wilds_left - (sl.need - k));
    }
  }

  // Suit-count vectors summing to `left`, drawn from the slot's naturals.
  void pick(std::size_t i, int s, int left, int wilds_after) {
    const Slot& sl = slots_[i];
    if (s == 4) {
      if (left != 0) return;
      const std::size_t mark = chosen_.size();
      for (int t = 0; t < 4; ++t)
        for (int j = 0; j < take_[t]; ++j)
          chosen_.push_back(Card::french(kSuits[t], sl.rank));
      const auto saved = take_;
      slot(i + 1, wilds_after);
      take_ = saved;
      chosen_.resize(mark);
      return;
    }
    const auto& avail = pool_.n[rank_value(sl.rank)];
    const bool allowed = !flush_ || kSuits[s] == *flush_;
    const int hi = allowed ? std::min(left, avail[s]) : 0;
    for (int c = hi; c >= 0; --c) {
      take_[s] = c;
      pick(i, s + 1, left - c, wilds_after);
    }
    take_[s] = 0;
  }

  const Pool& pool_;
  std::span<const Slot> slots_;
  std::optional<Suit> flush_;
  bool sequence_;
  const LevelContext& ctx_;
  Fn& fn_;
  std::vector<Card> chosen_;
  std::array<int, 4> take_{};
};

template <typename Fn>
void fill_slots(const Pool& pool, std::span<const Slot> slots,
                std::optional<Suit> flush, bool sequence,
                const LevelContext& ctx, Fn&& fn) {
  // Cheap rejection: the wilds cannot cover the shortfall.
  int deficit = 0;
  for (const Slot& slot : slots) {
    const auto& avail = pool.n[rank_value(slot.rank)];
    int have = 0;
    for (int s = 0; s < 4; ++s)
      if (!flush || kSuits[s] == *flush) have += avail[s];
    deficit += std::max(0, slot.need - have);
  }
  if (deficit > pool.wilds) return;
  SlotFiller<std::remove_reference_t<Fn>> filler(pool, slots, flush, sequence, ctx, fn);
  filler.run();
}

template <typename Fn>
void fill_slots(const Pool& pool, std::initializer_list<Slot> slots,
                std::optional<Suit> flush, bool sequence,
                const LevelContext& ctx, Fn&& fn) {
  fill_slots(pool, std::span<const Slot>(slots.begin(), slots.size()), flush,
             sequence, ctx, std::forward<Fn>(fn));
}

std::string rank_str(Rank r) { return std::string(1, rank_char(r)); }

using Emit = std::function<void(GuanType, Rank, std::vector<Card>)>;

void gen_same_rank(const Pool& pool, const LevelContext& ctx, GuanType type,
                   int need, const Emit& emit) {
  for (int v = 2; v <= 14; ++v) {
    const Rank r = rank_from_value(v);
    fill_slots(pool, {{r, need}}, std::nullopt, false, ctx,
               [&](std::vector<Card> cards) { emit(type, r, std::move(cards)); });
  }
}

void gen_singles(std::span<const Card> hand, const Emit& emit) {
  std::set<Card> seen(hand.begin(), hand.end());
  for (const Card& c : seen) emit(GuanType::kSingle, c.rank(), {c});
}

void gen_pairs(const Pool& pool, const LevelContext& ctx, const Emit& emit) {
  gen_same_rank(pool, ctx, GuanType::kPair, 2, emit);
  if (pool.black >= 2)
    emit(GuanType::kPair, Rank::kBlackJoker,
         {Card::black_joker(), Card::black_joker()});
  if (pool.red >= 2)
    emit(GuanType::kPair, Rank::kRedJoker, {Card::red_joker(), Card::red_joker()});
}

void gen_full_houses(const Pool& pool, const LevelContext& ctx,
                     const Emit& emit) {
  for (int tv = 2; tv <= 14; ++tv) {
    const Rank t = rank_from_value(tv);
    for (int pv = 2; pv <= 14; ++pv) {
      if (pv == tv) continue;
      const Rank p = rank_from_value(pv);
      fill_slots(pool, {{t, 3}, {p, 2}}, std::nullopt, false, ctx,
                 [&](std::vector<Card> cards) {
                   emit(GuanType::kThreeWithTwo, t, std::move(cards));
                 });
    }
    // Joker pairs as the pair part.
    for (auto [count, joker] : {std::pair{pool.black, Card::black_joker()},
                                std::pair{pool.red, Card::red_joker()}}) {
      if (count < 2) continue;
      fill_slots(pool, {{t, 3}}, std::nullopt, false, ctx,
                 [&](std::vector<Card> cards) {
                   cards.push_back(joker);
                   cards.push_back(joker);
                   std::sort(cards.begin(), cards.end());
                   emit(GuanType::kThreeWithTwo, t, std::move(cards));
                 });
    }
  }
}

void gen_sequences(const Pool& pool, const LevelContext& ctx, GuanType type,
                   int length, int per, std::optional<Suit> flush,
                   const Emit& emit) {
  for (int start = 0; start + length <= 14; ++start) {
    std::array<Slot, 5> buf{};
    for (int p = start; p < start + length; ++p)
      buf[p - start] = {seq_rank(p), per};
    fill_slots(pool, std::span<const Slot>(buf.data(), length), flush, true, ctx, [&](std::vector<Card> cards) {
      emit(type, seq_rank(start), std::move(cards));
    });
  }
}

void gen_bombs(const Pool& pool, const LevelContext& ctx, const Emit& emit) {
  for (int size = 4; size <= 8; ++size)
    gen_same_rank(pool, ctx, GuanType::kBoom, size, emit);
  for (Suit s : kSuits)
    gen_sequences(pool, ctx, GuanType::kBoom, 5, 1, s, emit);
  if (pool.black == 2 && pool.red == 2) {
    emit(GuanType::kBoom, Rank::kRedJoker,
         {Card::black_joker(), Card::black_joker(), Card::red_joker(),
          Card::red_joker()});
  }
}

}  // namespace

int guan_order(Rank rank, Rank level) {
  if (rank == Rank::kBlackJoker) return 13;
  if (rank == Rank::kRedJoker) return 14;
  if (rank == level) return 12;
  int base = rank_value(rank) - 2;
  if (rank_value(rank) > rank_value(level)) --base;
  return base;
}

int guan_sequence_start(char rank) {
  if (rank == 'A') return 0;
  return rank_value(parse_rank_char(rank)) - 1;
}

int guan_wilds_used(const GuanCombo& combo, const LevelContext& ctx) {
  if (combo.type == GuanType::kSingle) return 0;
  return static_cast<int>(
      std::count(combo.cards.begin(), combo.cards.end(), ctx.wild()));
}

GuanBombClass guan_bomb_class(const GuanCombo& combo, const LevelContext& ctx) {
  if (combo.type != GuanType::kBoom) return {};
  const int size = static_cast<int>(combo.cards.size());
  if (combo.rank == "R" || combo.rank == "B") return {GuanBomb::kJokers, size};
  const Rank r = parse_rank_char(combo.rank[0]);
  const bool same = std::all_of(combo.cards.begin(), combo.cards.end(),
                                [&](const Card& c) {
                                  return c.rank() == r || ctx.is_wild(c);
                                });
  if (same) return {GuanBomb::kSameRank, size};
  return {GuanBomb::kStraightFlush, size};
}

bool compare_guan(const GuanCombo& a, const GuanCombo& b,
                  const LevelContext& ctx) {
  if (a.type == GuanType::kPass || a.type == GuanType::kTribute ||
      a.type == GuanType::kBack) {
    return false;
  }
  if (b.type == GuanType::kPass) return true;
  const auto ab = guan_bomb_class(a, ctx);
  const auto bb = guan_bomb_class(b, ctx);
  // Bomb tiers: 4 < 5 < straight flush < 6 < 7 < 8 < jokers.
  auto tier = [](const GuanBombClass& k) {
    switch (k.kind) {
      case GuanBomb::kNone: return 0;
      case GuanBomb::kSameRank: return k.size * 10;
      case GuanBomb::kStraightFlush: return 55;
      case GuanBomb::kJokers: return 1000;
    }
    return 0;
  };
  const int ta = tier(ab);
  const int tb = tier(bb);
  if (ta != tb) return ta > tb;
  if (ta == 1000) return false;
  if (ab.kind == GuanBomb::kStraightFlush) {
    return guan_sequence_start(a.rank[0]) > guan_sequence_start(b.rank[0]);
  }
  if (ta > 0) {
    return guan_order(parse_rank_char(a.rank[0]), ctx.level) >
           guan_order(parse_rank_char(b.rank[0]), ctx.level);
  }
  if (a.type != b.type || a.cards.size() != b.cards.size()) return false;
  switch (a.type) {
    case GuanType::kStraight:
    case GuanType::kThreePair:
    case GuanType::kTripsPair:
      return guan_sequence_start(a.rank[0]) > guan_sequence_start(b.rank[0]);
    default:
      return guan_order(parse_rank_char(a.rank[0]), ctx.level) >
             guan_order(parse_rank_char(b.rank[0]), ctx.level);
  }
}

std::vector<GuanCombo> enumerate_guan_moves(
    std::span<const Card> hand, const std::optional<GuanCombo>& last_move,
    const LevelContext& ctx) {
  const Pool pool = make_pool(hand, ctx);
  std::vector<GuanCombo> out;
  const bool following = last_move && !last_move->is_pass();
  Emit emit = [&](GuanType type, Rank r, std::vector<Card> cards) {
    GuanCombo combo{type, rank_str(r), std::move(cards)};
    if (following && !compare_guan(combo, *last_move, ctx)) return;
    out.push_back(std::move(combo));
  };

  const GuanType want = following ? last_move->type : GuanType::kPass;
  const bool last_is_bomb = following && last_move->type == GuanType::kBoom;
  auto wanted = [&](GuanType t) {
    return !following || (!last_is_bomb && want == t);
  };
  if (wanted(GuanType::kSingle)) gen_singles(hand, emit);
  if (wanted(GuanType::kPair)) gen_pairs(pool, ctx, emit);
  if (wanted(GuanType::kTrips)) gen_same_rank(pool, ctx, GuanType::kTrips, 3, emit);
  if (wanted(GuanType::kThreeWithTwo)) gen_full_houses(pool, ctx, emit);
  if (wanted(GuanType::kStraight))
    gen_sequences(pool, ctx, GuanType::kStraight, 5, 1, std::nullopt, emit);
  if (wanted(GuanType::kThreePair))
    gen_sequences(pool, ctx, GuanType::kThreePair, 3, 2, std::nullopt, emit);
  if (wanted(GuanType::kTripsPair))
    gen_sequences(pool, ctx, GuanType::kTripsPair, 2, 3, std::nullopt, emit);
  gen_bombs(pool, ctx, emit);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (following) out.insert(out.begin(), GuanCombo{});
  return out;
}

// ---------------------------------------------------------------------------

GuanDanState::GuanDanState(Seed seed, const GameOptions& options,
                           const GuanLadder& ladder)
    : rng_(seed), ladder_(ladder), full_match_(options.guandan_full_match) {
  start_deal();
  current_ = static_cast<int>(rng_.uniform(4));
}

GuanDanState::GuanDanState(const std::array<std::vector<Card>, 4>& hands,
                           Rank level, int leader,
                           const std::vector<int>& previous_finish,
                           bool full_match)
    : rng_(0), full_match_(full_match), hands_(hands), level_(level),
      current_(leader) {
  team_level_ = {level, level};
  for (auto& h : hands_) std::sort(h.begin(), h.end());
  if (!previous_finish.empty()) {
    leading_team_ = previous_finish[0] % 2;
    deal_index_ = 1;
    deal_winners_.push_back(leading_team_);
    begin_tribute(previous_finish);
  }
}

int GuanDanState::next_active(int seat) const {
  for (int k = 1; k <= 4; ++k) {
    const int s = (seat + k) % 4;
    if (active(s)) return s;
  }
  return seat;
}

int GuanDanState::active_count() const {
  int n = 0;
  for (int s = 0; s < 4; ++s) n += active(s) ? 1 : 0;
  return n;
}

void GuanDanState::start_deal() {
  Deck deck = build_deck(Game::kGuanDan);
  rng_.shuffle(std::span<Card>(deck.cards));
  for (int s = 0; s < 4; ++s) {
    hands_[s].assign(deck.cards.begin() + 27 * s,
                     deck.cards.begin() + 27 * (s + 1));
    std::sort(hands_[s].begin(), hands_[s].end());
    played_[s].clear();
    last_action_[s].reset();
  }
  level_ = team_level_[leading_team_];
  last_play_.reset();
  last_player_ = -1;
  passes_ = 0;
  deal_steps_ = 0;
  phase_ = GuanPhase::kPlay;
}

void GuanDanState::begin_tribute(const std::vector<int>& previous_finish) {
  const int banker = previous_finish[0];
  const bool double_down = previous_finish[1] % 2 == banker % 2;
  payers_.clear();
  receivers_.clear();
  tributes_.clear();
  tribute_pos_ = 0;
  if (double_down) {
    payers_ = {previous_finish[2], previous_finish[3]};
  } else {
    payers_ = {previous_finish[3]};
  }
  int red_jokers = 0;
  for (int p : payers_)
    red_jokers += static_cast<int>(
        std::count(hands_[p].begin(), hands_[p].end(), Card::red_joker()));
  if (red_jokers >= 2) {
    // Anti-tribute: the banker leads.
    payers_.clear();
    phase_ = GuanPhase::kPlay;
    current_ = banker;
    return;
  }
  receivers_ = double_down ? std::vector<int>{banker, previous_finish[1]}
                           : std::vector<int>{banker};
  phase_ = GuanPhase::kTribute;
  current_ = payers_[0];
}

void GuanDanState::finish_tribute() {
  // Highest tribute goes to the banker; ties keep payer order.
  if (payers_.size() == 2) {
    const int o0 = guan_order(tributes_[0].rank(), level_);
    const int o1 = guan_order(tributes_[1].rank(), level_);
    if (o1 > o0) {
      std::swap(payers_[0], payers_[1]);
      std::swap(tributes_[0], tributes_[1]);
    }
  }
  for (std::size_t i = 0; i < payers_.size(); ++i) {
    auto& h = hands_[receivers_[i]];
    h.push_back(tributes_[i]);
    std::sort(h.begin(), h.end());
  }
  tributes_.clear();
  phase_ = GuanPhase::kBack;
  tribute_pos_ = 0;
  current_ = receivers_[0];
}

std::vector<Action> GuanDanState::legal_actions() const {
  if (is_terminal()) throw TerminalState("guandan match is over");
  return legal_set().list();
}

bool GuanDanState::is_legal(const Action& action) const {
  if (is_terminal()) return false;
  return legal_set().contains(action);
}

const LegalSet& GuanDanState::legal_set() const {
  if (legal_cache_) return *legal_cache_;
  std::vector<Action> out;
  const auto& hand = hands_[current_];
  const LevelContext ctx{level_};
  if (phase_ == GuanPhase::kTribute) {
    int best = -1;
    for (const Card& c : hand)
      if (!ctx.is_wild(c)) best = std::max(best, guan_order(c.rank(), level_));
    std::set<Card> picks;
    for (const Card& c : hand)
      if (!ctx.is_wild(c) && guan_order(c.rank(), level_) == best) picks.insert(c);
    for (const Card& c : picks)
      out.push_back(GuanAction{GuanType::kTribute, rank_str(c.rank()), {c}});
  } else if (phase_ == GuanPhase::kBack) {
    std::set<Card> picks;
    for (const Card& c : hand)
      if (!c.is_joker() && rank_value(c.rank()) <= 10) picks.insert(c);
    if (picks.empty()) picks.insert(hand.begin(), hand.end());
    for (const Card& c : picks)
      out.push_back(GuanAction{GuanType::kBack, rank_str(c.rank()), {c}});
  } else {
    for (auto& m : enumerate_guan_moves(hand, last_play_, ctx))
      out.push_back(std::move(m));
  }
  legal_cache_ = std::make_shared<const LegalSet>(std::move(out));
  return *legal_cache_;
}

void GuanDanState::apply(const Action& action) {
  require_legal(*this, action);
  const auto& move = std::get<GuanAction>(action);
  const int seat = current_;
  history_.push_back({seat, action});
  step_deal_.push_back(deal_index_);
  legal_cache_.reset();
  ++deal_steps_;
  max_deal_steps_ = std::max(max_deal_steps_, deal_steps_);

  auto remove_card = [this](int s, const Card& c) {
    auto it = std::find(hands_[s].begin(), hands_[s].end(), c);
    hands_[s].erase(it);
  };

  if (phase_ == GuanPhase::kTribute) {
    remove_card(seat, move.cards[0]);
    tributes_.push_back(move.cards[0]);
    if (++tribute_pos_ < payers_.size()) {
      current_ = payers_[tribute_pos_];
    } else {
      finish_tribute();
    }
    return;
  }
  if (phase_ == GuanPhase::kBack) {
    remove_card(seat, move.cards[0]);
    auto& h = hands_[payers_[tribute_pos_]];
    h.push_back(move.cards[0]);
    std::sort(h.begin(), h.end());
    if (++tribute_pos_ < receivers_.size()) {
      current_ = receivers_[tribute_pos_];
    } else {
      phase_ = GuanPhase::kPlay;
      current_ = payers_[0];
    }
    return;
  }

  last_action_[seat] = move;
  if (move.is_pass()) {
    ++passes_;
    int responders = active_count() - (active(last_player_) ? 1 : 0);
    if (passes_ >= responders) {
      int leader = last_player_;
      if (!active(leader)) {
        const int mate = (last_player_ + 2) % 4;
        leader = active(mate) ? mate : next_active(last_player_);
      }
      last_play_.reset();
      passes_ = 0;
      current_ = leader;
    } else {
      current_ = next_active(seat);
    }
    return;
  }

  for (const Card& c : move.cards) {
    remove_card(seat, c);
    played_[seat].push_back(c);
  }
  last_play_ = move;
  last_player_ = seat;
  passes_ = 0;
  if (hands_[seat].empty()) {
    finish_order_.push_back(seat);
    const bool pair_out = finish_order_.size() == 2 &&
                          finish_order_[0] % 2 == finish_order_[1] % 2;
    if (finish_order_.size() == 3 || pair_out) {
      end_deal();
      return;
    }
  }
  current_ = next_active(seat);
}

void GuanDanState::end_deal() {
  // Remaining seats finish in turn order after the last finisher.
  for (int k = 1; k <= 4; ++k) {
    const int s = (finish_order_.back() + k) % 4;
    if (std::find(finish_order_.begin(), finish_order_.end(), s) ==
        finish_order_.end()) {
      finish_order_.push_back(s);
    }
  }
  const int winner = finish_order_[0] % 2;
  deal_winners_.push_back(winner);
  const auto pos = std::find(finish_order_.begin(), finish_order_.end(),
                             (finish_order_[0] + 2) % 4) -
                   finish_order_.begin();
  const int gain = pos == 1   ? ladder_.partner_second
                   : pos == 2 ? ladder_.partner_third
                              : ladder_.partner_fourth;
  const bool won_at_ace = team_level_[winner] == Rank::kAce &&
                          level_ == Rank::kAce && leading_team_ == winner;
  if (!full_match_ || won_at_ace ||
      static_cast<int>(deal_winners_.size()) >= ladder_.max_deals) {
    match_winner_ = winner;
    phase_ = GuanPhase::kOver;
    return;
  }
  team_level_[winner] = rank_from_value(
      std::min(rank_value(Rank::kAce), rank_value(team_level_[winner]) + gain));
  leading_team_ = winner;
  const std::vector<int> previous = finish_order_;
  finish_order_.clear();
  ++deal_index_;
  start_deal();
  begin_tribute(previous);
}

std::vector<double> GuanDanState::payoffs() const {
  if (!is_terminal()) throw NonTerminal("guandan match is not over");
  std::vector<double> p(4, 0.0);
  for (int s = 0; s < 4; ++s) p[s] = s % 2 == match_winner_ ? 1.0 : 0.0;
  return p;
}

std::vector<bool> GuanDanState::winning_steps() const {
  if (!is_terminal()) throw NonTerminal("guandan match is not over");
  std::vector<bool> out;
  out.reserve(history_.size());
  for (std::size_t i = 0; i < history_.size(); ++i) {
    out.push_back(history_[i].seat % 2 == deal_winners_[step_deal_[i]]);
  }
  return out;
}

std::string GuanDanState::winner_side() const {
  if (!is_terminal()) throw NonTerminal("guandan match is not over");
  return "team_" + std::to_string(match_winner_);
}

Observation GuanDanState::observe(int seat) const {
  Observation obs{Game::kGuanDan, seat, role(seat), Json::object()};
  const int down = (seat + 1) % 4;
  const int mate = (seat + 2) % 4;
  const int up = (seat + 3) % 4;
  auto cards_json = [](std::vector<Card> cards) {
    std::sort(cards.begin(), cards.end());
    return Json(format_cards(cards));
  };
  auto last_json = [&](int s) {
    return last_action_[s] ? action_value(Game::kGuanDan, *last_action_[s])
                           : Json(nullptr);
  };
  std::vector<Card> others;
  for (int s = 0; s < 4; ++s)
    if (s != seat) others.insert(others.end(), hands_[s].begin(), hands_[s].end());
  auto& f = obs.fields;
  f["position"] = seat;
  f["hand"] = cards_json(hands_[seat]);
  f["others_remaining"] = cards_json(others);
  f["last_action_others"] = Json{{"down", last_json(down)}, {"up", last_json(up)}};
  f["last_action_teammate"] = last_json(mate);
  f["num_cards_left"] = Json{{"down", hands_[down].size()},
                             {"teammate", hands_[mate].size()},
                             {"up", hands_[up].size()}};
  f["played_down"] = cards_json(played_[down]);
  f["played_teammate"] = cards_json(played_[mate]);
  f["played_up"] = cards_json(played_[up]);
  f["self_rank"] = rank_str(team_level_[seat % 2]);
  f["opponent_rank"] = rank_str(team_level_[1 - seat % 2]);
  f["current_rank"] = rank_str(level_);
  Json legal = Json::array();
  if (!is_terminal() && seat == current_) {
    for (const auto& a : legal_actions())
      legal.push_back(action_value(Game::kGuanDan, a));
  }
  f["legal_actions"] = std::move(legal);
  return obs;
}

std::vector<Card> GuanDanState::all_cards() const {
  std::vector<Card> out;
  for (int s = 0; s < 4; ++s) {
    out.insert(out.end(), hands_[s].begin(), hands_[s].end());
    out.insert(out.end(), played_[s].begin(), played_[s].end());
  }
  // Tributes paid but not yet handed over.
  out.insert(out.end(), tributes_.begin(), tributes_.end());
  return out;
}

std::string GuanDanState::serialize() const {
  std::ostringstream os;
  for (int s = 0; s < 4; ++s) {
    os << "hand" << s << ':';
    for (const Card& c : hands_[s]) os << format_card(c) << ' ';
    os << "|played" << s << ':';
    for (const Card& c : played_[s]) os << format_card(c) << ' ';
    os << '\n';
  }
  os << "levels:" << rank_char(team_level_[0]) << rank_char(team_level_[1])
     << " lead:" << leading_team_ << " level:" << rank_char(level_)
     << " phase:" << static_cast<int>(phase_) << " tributes:" << tributes_.size()
     << " cur:" << current_
     << " last_player:" << last_player_ << " passes:" << passes_
     << " deal:" << deal_index_ << " winner:" << match_winner_ << " finish:";
  for (int s : finish_order_) os << s;
  if (last_play_) os << " last:" << describe_action(Game::kGuanDan, *last_play_);
  os << "\nhistory:";
  for (const auto& h : history_)
    os << h.seat << '=' << describe_action(Game::kGuanDan, h.action) << ';';
  return os.str();
}

std::unique_ptr<State> new_guandan(Seed seed, const GameOptions& options) {
  return std::make_unique<GuanDanState>(seed, options);
}

}  // namespace cardlab
