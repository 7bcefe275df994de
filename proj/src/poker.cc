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
#include <sstream>

#include "cardlab/action_codec.h"
#include "cardlab/poker.h"

namespace cardlab {
namespace {

Json history_json(Game game, const History& history) {
  Json out = Json::array();
  for (const auto& h : history)
    out.push_back(Json::array({h.seat, action_value(game, h.action)}));
  return out;
}

Json legal_json(const State& s, int seat) {
  Json legal = Json::array();
  if (!s.is_terminal() && seat == s.current_seat()) {
    for (const auto& a : s.legal_actions())
      legal.push_back(action_value(s.game(), a));
  }
  return legal;
}

void write_history(std::ostream& os, Game game,
                   const History& history) {
  os << "\nhistory:";
  for (const auto& h : history)
    os << h.seat << '=' << describe_action(game, h.action) << ';';
}

}  // namespace

// ---- Leduc ----------------------------------------------------------------

LeducState::LeducState(Seed seed, const GameOptions& options) {
  Deck deck = build_deck(Game::kLeduc);
  Rng rng(seed);
  rng.shuffle(std::span<Card>(deck.cards));
  hole_ = {deck.cards[0], deck.cards[1]};
  board_ = deck.cards[2];
  rest_.assign(deck.cards.begin() + 3, deck.cards.end());
  dealer_ = static_cast<int>(options.match_index % 2);
  current_ = 1 - dealer_;
}

LeducState::LeducState(Card hole0, Card hole1, Card board, int dealer)
    : hole_{hole0, hole1}, board_(board), dealer_(dealer),
      current_(1 - dealer) {
  std::vector<Card> deck = build_deck(Game::kLeduc).cards;
  for (Card c : {hole0, hole1, board})
    deck.erase(std::find(deck.begin(), deck.end(), c));
  rest_ = std::move(deck);
}

std::vector<Action> LeducState::legal_actions() const {
  if (over_) throw TerminalState("leduc hand is over");
  std::vector<Action> out{BetAction::kFold};
  const bool facing = committed_[current_] < committed_[1 - current_];
  if (facing) out.push_back(BetAction::kCall);
  if (raises_[round_] < kLeducRaiseCap) out.push_back(BetAction::kRaise);
  if (!facing) out.push_back(BetAction::kCheck);
  return out;
}

void LeducState::close_round() {
  if (round_ == 0) {
    round_ = 1;
    acted_ = 0;
    current_ = 1 - dealer_;
  } else {
    over_ = true;
  }
}

void LeducState::apply(const Action& action) {
  require_legal(*this, action);
  const int seat = current_;
  history_.push_back({seat, action});
  ++acted_;
  switch (std::get<BetAction>(action)) {
    case BetAction::kFold:
      folded_ = seat;
      over_ = true;
      return;
    case BetAction::kCall:
      committed_[seat] = committed_[1 - seat];
      close_round();
      return;
    case BetAction::kCheck:
      if (acted_ >= 2) {
        close_round();
      } else {
        current_ = 1 - seat;
      }
      return;
    case BetAction::kRaise:
      committed_[seat] = committed_[1 - seat] + (round_ == 0 ? 2 : 4);
      ++raises_[round_];
      current_ = 1 - seat;
      return;
  }
}

std::vector<double> LeducState::payoffs() const {
  if (!over_) throw NonTerminal("leduc hand is not over");
  int winner = -1;
  if (folded_ >= 0) {
    winner = 1 - folded_;
  } else {
    const bool pair0 = hole_[0].rank() == board_.rank();
    const bool pair1 = hole_[1].rank() == board_.rank();
    if (pair0 != pair1) {
      winner = pair0 ? 0 : 1;
    } else if (hole_[0].rank() != hole_[1].rank()) {
      winner = hole_[0].rank() > hole_[1].rank() ? 0 : 1;
    }
  }
  if (winner < 0) return {0.0, 0.0};
  const double won = committed_[1 - winner] / 2.0;
  std::vector<double> p(2, -won);
  p[winner] = won;
  return p;
}

Observation LeducState::observe(int seat) const {
  Observation obs{Game::kLeduc, seat, role(seat), Json::object()};
  auto& f = obs.fields;
  f["round"] = round_ + 1;
  f["position"] = seat;
  f["hand"] = format_card(hole_[seat]);
  f["public_card"] = round_ > 0 ? Json(format_card(board_)) : Json(nullptr);
  f["my_chips"] = committed_[seat];
  f["all_chips"] = Json::array({committed_[0], committed_[1]});
  f["raises"] = Json::array({raises_[0], raises_[1]});
  f["history"] = history_json(Game::kLeduc, history_);
  f["legal_actions"] = legal_json(*this, seat);
  return obs;
}

std::vector<Card> LeducState::all_cards() const {
  std::vector<Card> out = rest_;
  out.push_back(hole_[0]);
  out.push_back(hole_[1]);
  out.push_back(board_);
  return out;
}

std::string LeducState::serialize() const {
  std::ostringstream os;
  os << "holes:" << format_card(hole_[0]) << ',' << format_card(hole_[1])
     << " board:" << format_card(board_) << " dealer:" << dealer_
     << " round:" << round_ << " cur:" << current_ << " chips:"
     << committed_[0] << ',' << committed_[1] << " raises:" << raises_[0]
     << ',' << raises_[1] << " acted:" << acted_ << " folded:" << folded_
     << " over:" << over_;
  write_history(os, Game::kLeduc, history_);
  return os.str();
}

// ---- Hold'em --------------------------------------------------------------

std::string_view holdem_round_name(int round) {
  static constexpr std::array<std::string_view, 4> kNames = {
      "pre-flop", "flop", "turn", "river"};
  return kNames[round];
}

HoldemState::HoldemState(Game game, Seed seed, const GameOptions& options)
    : game_(game) {
  if (game != Game::kLimit && game != Game::kNoLimit)
    throw UnsupportedGame("hold'em state needs limit or nolimit");
  Deck deck = build_deck(game);
  Rng rng(seed);
  rng.shuffle(std::span<Card>(deck.cards));
  const auto& d = deck.cards;
  hole_ = {{{d[0], d[1]}, {d[2], d[3]}}};
  std::copy(d.begin() + 4, d.begin() + 9, board_.begin());
  rest_.assign(d.begin() + 9, d.end());
  dealer_ = static_cast<int>(options.match_index % 2);
  post_blinds();
}

HoldemState::HoldemState(Game game,
                         const std::array<std::array<Card, 2>, 2>& holes,
                         const std::array<Card, 5>& board, int dealer)
    : game_(game), hole_(holes), board_(board), dealer_(dealer) {
  std::vector<Card> deck = build_deck(game).cards;
  for (const auto& h : holes)
    for (Card c : h) deck.erase(std::find(deck.begin(), deck.end(), c));
  for (Card c : board) deck.erase(std::find(deck.begin(), deck.end(), c));
  rest_ = std::move(deck);
  post_blinds();
}

void HoldemState::put(int seat, int chips) {
  committed_[seat] += chips;
  stack_[seat] -= chips;
}

void HoldemState::post_blinds() {
  put(dealer_, kBigBlind / 2);
  put(1 - dealer_, kBigBlind);
  current_ = dealer_;
}

int HoldemState::to_call(int seat) const {
  return std::max(0, committed_[1 - seat] - committed_[seat]);
}

std::vector<Card> HoldemState::board() const {
  const int shown = round_ == 0 ? 0 : round_ + 2;
  return std::vector<Card>(board_.begin(), board_.begin() + (over_ && folded_ < 0 ? 5 : shown));
}

std::optional<int> HoldemState::nl_raise_chips(NlAction a) const {
  const int seat = current_;
  const int call = to_call(seat);
  const int stack = stack_[seat];
  if (stack <= call || stack_[1 - seat] == 0) return std::nullopt;
  const int min_raise = std::max(last_raise_, kBigBlind);
  int raise = 0;
  switch (a) {
    case NlAction::kRaiseHalfPot:
      raise = std::max((pot() + call) / 2, min_raise);
      break;
    case NlAction::kRaisePot:
      raise = std::max(pot() + call, min_raise);
      break;
    case NlAction::kAllIn:
      return stack;
    default:
      return std::nullopt;
  }
  if (call + raise >= stack) return std::nullopt;
  return call + raise;
}

std::vector<Action> HoldemState::legal_actions() const {
  if (over_) throw TerminalState("hold'em hand is over");
  if (legal_cache_) return *legal_cache_;
  std::vector<Action> out;
  if (game_ == Game::kLimit) {
    out.push_back(BetAction::kFold);
    const bool facing = to_call(current_) > 0;
    if (facing) out.push_back(BetAction::kCall);
    if (raises_[round_] < kLimitRaiseCap) out.push_back(BetAction::kRaise);
    if (!facing) out.push_back(BetAction::kCheck);
  } else {
    out.push_back(NlAction::kFold);
    out.push_back(NlAction::kCheckCall);
    const auto half = nl_raise_chips(NlAction::kRaiseHalfPot);
    const auto full = nl_raise_chips(NlAction::kRaisePot);
    if (half) out.push_back(NlAction::kRaiseHalfPot);
    if (full && full != half) out.push_back(NlAction::kRaisePot);
    if (nl_raise_chips(NlAction::kAllIn)) out.push_back(NlAction::kAllIn);
  }
  legal_cache_ = out;
  return out;
}

void HoldemState::close_round() {
  if (round_ == 3 || stack_[0] == 0 || stack_[1] == 0) {
    showdown();
    return;
  }
  ++round_;
  acted_ = 0;
  round_start_ = committed_;
  last_raise_ = kBigBlind;
  current_ = 1 - dealer_;
}

void HoldemState::showdown() {
  over_ = true;
  std::array<Card, 7> c0, c1;
  std::copy(board_.begin(), board_.end(), c0.begin());
  std::copy(board_.begin(), board_.end(), c1.begin());
  c0[5] = hole_[0][0];
  c0[6] = hole_[0][1];
  c1[5] = hole_[1][0];
  c1[6] = hole_[1][1];
  const HandRank r0 = evaluate_hand(c0);
  const HandRank r1 = evaluate_hand(c1);
  // Chips above the smaller commitment go back to their owner.
  const int matched = std::min(committed_[0], committed_[1]);
  if (r0 == r1) {
    result_ = {0.0, 0.0};
  } else {
    const int w = r0 > r1 ? 0 : 1;
    result_[w] = matched;
    result_[1 - w] = -matched;
  }
}

void HoldemState::apply(const Action& action) {
  require_legal(*this, action);
  const int seat = current_;
  history_.push_back({seat, action});
  legal_cache_.reset();
  ++acted_;
  const int call = to_call(seat);

  auto fold = [&] {
    folded_ = seat;
    over_ = true;
    result_[seat] = -committed_[seat];
    result_[1 - seat] = committed_[seat];
  };
  auto after_call = [&] {
    if (acted_ >= 2 || stack_[0] == 0 || stack_[1] == 0) {
      close_round();
    } else {
      current_ = 1 - seat;
    }
  };

  if (game_ == Game::kLimit) {
    switch (std::get<BetAction>(action)) {
      case BetAction::kFold:
        fold();
        return;
      case BetAction::kCall:
      case BetAction::kCheck:
        put(seat, call);
        after_call();
        return;
      case BetAction::kRaise:
        put(seat, call + (round_ < 2 ? kBigBlind : 2 * kBigBlind));
        ++raises_[round_];
        current_ = 1 - seat;
        return;
    }
  }
  const NlAction a = std::get<NlAction>(action);
  switch (a) {
    case NlAction::kFold:
      fold();
      return;
    case NlAction::kCheckCall:
      put(seat, std::min(call, stack_[seat]));
      after_call();
      return;
    default: {
      const int chips = *nl_raise_chips(a);
      last_raise_ = std::max(last_raise_, chips - call);
      put(seat, chips);
      ++raises_[round_];
      current_ = 1 - seat;
      return;
    }
  }
}

std::vector<double> HoldemState::payoffs() const {
  if (!over_) throw NonTerminal("hold'em hand is not over");
  return {result_[0] / kBigBlind, result_[1] / kBigBlind};
}

Observation HoldemState::observe(int seat) const {
  Observation obs{game_, seat, role(seat), Json::object()};
  auto& f = obs.fields;
  f["round"] = std::string(holdem_round_name(round_));
  f["position"] = seat;
  f["hole_cards"] = Json::array({format_card(hole_[seat][0]),
                                 format_card(hole_[seat][1])});
  f["community_cards"] = Json(format_cards(board()));
  f["my_chips"] = committed_[seat];
  f["all_chips"] = Json::array({committed_[0], committed_[1]});
  if (game_ == Game::kLimit) {
    f["raises"] = Json(raises_);
  } else {
    f["pot"] = pot();
    f["stacks"] = Json::array({stack_[0], stack_[1]});
  }
  f["history"] = history_json(game_, history_);
  f["legal_actions"] = legal_json(*this, seat);
  return obs;
}

std::vector<Card> HoldemState::all_cards() const {
  std::vector<Card> out = rest_;
  for (const auto& h : hole_) out.insert(out.end(), h.begin(), h.end());
  out.insert(out.end(), board_.begin(), board_.end());
  return out;
}

std::string HoldemState::serialize() const {
  std::ostringstream os;
  os << "holes:";
  for (const auto& h : hole_) os << format_card(h[0]) << format_card(h[1]) << ',';
  os << " board:";
  for (Card c : board_) os << format_card(c);
  os << " dealer:" << dealer_ << " round:" << round_ << " cur:" << current_
     << " chips:" << committed_[0] << ',' << committed_[1]
     << " stacks:" << stack_[0] << ',' << stack_[1] << " raises:";
  for (int r : raises_) os << r;
  os << " last_raise:" << last_raise_ << " acted:" << acted_
     << " folded:" << folded_ << " over:" << over_;
  write_history(os, game_, history_);
  return os.str();
}

std::unique_ptr<State> new_leduc(Seed seed, const GameOptions& options) {
  return std::make_unique<LeducState>(seed, options);
}

std::unique_ptr<State> new_limit(Seed seed, const GameOptions& options) {
  return std::make_unique<HoldemState>(Game::kLimit, seed, options);
}

std::unique_ptr<State> new_nolimit(Seed seed, const GameOptions& options) {
  return std::make_unique<HoldemState>(Game::kNoLimit, seed, options);
}

}  // namespace cardlab
