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

#ifndef CARDLAB_GIN_RUMMY_H_
#define CARDLAB_GIN_RUMMY_H_

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cardlab/game.h"

namespace cardlab {

// A = 1, 2..9 face value, T/J/Q/K = 10.
int gin_card_value(const Card& c);
// Ace-low rank index: A = 1 ... K = 13.
int gin_rank_index(Rank r);

enum class MeldKind { kSet, kRun };

struct Meld {
  MeldKind kind = MeldKind::kSet;
  std::vector<Card> cards;
};

struct DeadwoodResult {
  std::vector<Meld> melds;
  std::vector<Card> deadwood;
  int count = 0;
};

// Every set (3 or 4 of a rank) and run (3+ consecutive, one suit, ace low)
// that can be formed from `cards`.
std::vector<Meld> candidate_melds(const std::vector<Card>& cards);

// Minimal deadwood over all disjoint meld selections. Throws BadHandSize
// unless the hand holds 10 or 11 cards.
DeadwoodResult min_deadwood(const std::vector<Card>& hand);

// Same search without the size check.
DeadwoodResult min_deadwood_any(const std::vector<Card>& hand);

// Deadwood of hand minus hand[i], for every i, from one pass over the
// meld packings of the full hand.
std::vector<int> deadwood_after_discards(const std::vector<Card>& hand);

// Defender deadwood after laying off onto the knocker's melds, minimised
// over the defender's meld selections.
int deadwood_after_layoff(const std::vector<Card>& defender,
                          const std::vector<Meld>& knocker_melds);

// Points for (knocker, defender); exactly one is non-zero unless both are.
std::array<int, 2> gin_score(int knocker_deadwood, int defender_deadwood,
                             bool gin);

inline constexpr int kGinMaxTurns = 58;

enum class GinPhase { kDraw, kDiscard, kScoreN, kScoreS, kOver };

class GinRummyState final : public State {
 public:
  GinRummyState(Seed seed, const GameOptions& options);
  // Fixture: seat `first` holds 11 cards and is about to discard.
  GinRummyState(const std::array<std::vector<Card>, 2>& hands,
                std::vector<Card> stock, int first);

  Game game() const override { return Game::kGinRummy; }
  int num_seats() const override { return 2; }
  int current_seat() const override { return current_; }
  bool is_terminal() const override { return phase_ == GinPhase::kOver; }
  std::vector<Action> legal_actions() const override;
  void apply(const Action& action) override;
  std::vector<double> payoffs() const override;
  Observation observe(int seat) const override;
  std::vector<Card> all_cards() const override;
  std::string serialize() const override;
  std::unique_ptr<State> clone() const override {
    return std::make_unique<GinRummyState>(*this);
  }

  GinPhase phase() const { return phase_; }
  const std::vector<Card>& hand(int seat) const { return hands_[seat]; }
  std::optional<Card> top_discard() const {
    if (discard_.empty()) return std::nullopt;
    return discard_.back();
  }
  std::size_t stock_size() const { return stock_.size(); }
  // Raw points awarded at the end of the hand.
  std::array<int, 2> points() const { return points_; }

 private:
  void end_hand(int seat, GinKind how);

  std::array<std::vector<Card>, 2> hands_;
  std::vector<Card> stock_;    // back is the next card
  std::vector<Card> discard_;  // back is the top
  std::array<std::vector<Card>, 2> known_;  // picked up from the discard
  int current_ = 0;
  GinPhase phase_ = GinPhase::kDiscard;
  int turns_ = 0;
  std::array<int, 2> points_ = {0, 0};
  mutable std::optional<std::vector<Action>> legal_cache_;
};

std::unique_ptr<State> new_gin_rummy(Seed seed, const GameOptions& options);

}  // namespace cardlab

#endif  // CARDLAB_GIN_RUMMY_H_
