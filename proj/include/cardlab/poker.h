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

#ifndef CARDLAB_POKER_H_
#define CARDLAB_POKER_H_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cardlab/game.h"

namespace cardlab {

// ---- hand evaluation ------------------------------------------------------

enum class HandCategory : std::uint8_t {
  kHighCard,
  kOnePair,
  kTwoPair,
  kThreeOfAKind,
  kStraight,
  kFlush,
  kFullHouse,
  kFourOfAKind,
  kStraightFlush,
  kRoyalFlush,
};
inline constexpr int kNumHandCategories = 10;

std::string_view hand_category_name(HandCategory c);

// Category plus tiebreak ranks packed into one comparable integer.
struct HandRank {
  HandCategory category = HandCategory::kHighCard;
  std::uint32_t value = 0;
  friend bool operator==(const HandRank& a, const HandRank& b) {
    return a.value == b.value;
  }
  friend auto operator<=>(const HandRank& a, const HandRank& b) {
    return a.value <=> b.value;
  }
  // Tiebreak ranks, most significant first.
  std::vector<int> tiebreak() const;
};

HandRank evaluate_five(const std::array<Card, 5>& cards);

// Best five-card rank of 5..7 distinct French cards. Throws BadCardCount
// and DuplicateCard.
HandRank evaluate_hand(std::span<const Card> cards);

// Category counts over all C(52,5) hands. The parallel form splits the
// outer loop across OpenMP threads and sums per-thread tables.
std::array<std::uint64_t, kNumHandCategories> five_card_census_serial();
std::array<std::uint64_t, kNumHandCategories> five_card_census_parallel();

// ---- Leduc ----------------------------------------------------------------

inline constexpr int kLeducRaiseCap = 2;

class LeducState final : public State {
 public:
  LeducState(Seed seed, const GameOptions& options);
  // Fixed deal, for enumeration. `dealer` acts second in both rounds.
  LeducState(Card hole0, Card hole1, Card board, int dealer);

  Game game() const override { return Game::kLeduc; }
  int num_seats() const override { return 2; }
  int current_seat() const override { return current_; }
  bool is_terminal() const override { return over_; }
  std::vector<Action> legal_actions() const override;
  void apply(const Action& action) override;
  std::vector<double> payoffs() const override;
  Observation observe(int seat) const override;
  std::vector<Card> all_cards() const override;
  std::string serialize() const override;
  std::unique_ptr<State> clone() const override {
    return std::make_unique<LeducState>(*this);
  }

  int round() const { return round_; }
  Card hole(int seat) const { return hole_[seat]; }
  std::optional<Card> board() const {
    return round_ > 0 || over_ ? std::optional<Card>(board_) : std::nullopt;
  }
  int committed(int seat) const { return committed_[seat]; }
  int raises(int round) const { return raises_[round]; }
  int folded() const { return folded_; }

 private:
  void close_round();

  std::array<Card, 2> hole_;
  Card board_;
  std::vector<Card> rest_;  // undealt cards
  int dealer_ = 0;
  int round_ = 0;
  int current_ = 0;
  std::array<int, 2> committed_ = {1, 1};
  std::array<int, 2> raises_ = {0, 0};
  int acted_ = 0;  // actions in the current round
  int folded_ = -1;
  bool over_ = false;
};

// ---- Limit and No-limit Hold'em -------------------------------------------

inline constexpr int kLimitRaiseCap = 4;
inline constexpr int kNlStack = 100;
inline constexpr int kBigBlind = 2;

std::string_view holdem_round_name(int round);  // pre-flop, flop, turn, river

class HoldemState final : public State {
 public:
  HoldemState(Game game, Seed seed, const GameOptions& options);
  // Fixed deal: holes[seat] two cards each, five board cards.
  HoldemState(Game game, const std::array<std::array<Card, 2>, 2>& holes,
              const std::array<Card, 5>& board, int dealer);

  Game game() const override { return game_; }
  int num_seats() const override { return 2; }
  int current_seat() const override { return current_; }
  bool is_terminal() const override { return over_; }
  std::vector<Action> legal_actions() const override;
  void apply(const Action& action) override;
  std::vector<double> payoffs() const override;
  Observation observe(int seat) const override;
  std::vector<Card> all_cards() const override;
  std::string serialize() const override;
  std::unique_ptr<State> clone() const override {
    return std::make_unique<HoldemState>(*this);
  }

  int round() const { return round_; }
  const std::array<Card, 2>& hole(int seat) const { return hole_[seat]; }
  // Community cards revealed so far.
  std::vector<Card> board() const;
  int committed(int seat) const { return committed_[seat]; }
  int stack(int seat) const { return stack_[seat]; }
  int pot() const { return committed_[0] + committed_[1]; }
  int raises(int round) const { return raises_[round]; }
  int dealer() const { return dealer_; }

  // No-limit: chips added by the acting seat for each raise action, after
  // min-raise rounding; nullopt when the action is unavailable.
  std::optional<int> nl_raise_chips(NlAction a) const;

 private:
  void post_blinds();
  void close_round();
  void showdown();
  void put(int seat, int chips);
  int to_call(int seat) const;
  int bets_in_round(int seat) const {
    return committed_[seat] - round_start_[seat];
  }

  Game game_;
  std::array<std::array<Card, 2>, 2> hole_;
  std::array<Card, 5> board_;
  std::vector<Card> rest_;
  int dealer_ = 0;
  int round_ = 0;
  int current_ = 0;
  std::array<int, 2> committed_ = {0, 0};
  std::array<int, 2> round_start_ = {0, 0};
  std::array<int, 2> stack_ = {kNlStack, kNlStack};
  std::array<int, 4> raises_ = {0, 0, 0, 0};
  int last_raise_ = kBigBlind;
  int acted_ = 0;
  int folded_ = -1;
  bool over_ = false;
  std::array<double, 2> result_ = {0.0, 0.0};  // net chips
  mutable std::optional<std::vector<Action>> legal_cache_;
};

std::unique_ptr<State> new_leduc(Seed seed, const GameOptions& options);
std::unique_ptr<State> new_limit(Seed seed, const GameOptions& options);
std::unique_ptr<State> new_nolimit(Seed seed, const GameOptions& options);

}  // namespace cardlab

#endif  // CARDLAB_POKER_H_
