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

#ifndef CARDLAB_UNO_H_
#define CARDLAB_UNO_H_

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cardlab/game.h"

namespace cardlab {

inline constexpr int kUnoMaxSteps = 2000;

// Playable cards for `hand` against the top card and active color; wilds
// expanded per declared color. Empty when nothing matches.
std::vector<UnoAction> uno_playable(const std::vector<Card>& hand,
                                    const Card& top, UnoColor active);

// Two-player Uno. Skip, reverse, draw two and wild draw four all hand the
// turn back to the player who played them.
class UnoState final : public State {
 public:
  UnoState(Seed seed, const GameOptions& options);
  // Fixture: explicit hands, top card (already colored if wild) and draw
  // pile (back = next card drawn).
  UnoState(const std::array<std::vector<Card>, 2>& hands, Card top,
           std::vector<Card> draw_pile, int first);

  Game game() const override { return Game::kUno; }
  int num_seats() const override { return 2; }
  int current_seat() const override { return current_; }
  bool is_terminal() const override { return winner_ >= 0 || stalled_; }
  std::vector<Action> legal_actions() const override;
  void apply(const Action& action) override;
  std::vector<double> payoffs() const override;
  Observation observe(int seat) const override;
  std::vector<Card> all_cards() const override;
  std::string serialize() const override;
  std::unique_ptr<State> clone() const override {
    return std::make_unique<UnoState>(*this);
  }

  const std::vector<Card>& hand(int seat) const { return hands_[seat]; }
  // Top of the discard pile; wilds carry the active color.
  Card top() const { return discard_.back(); }
  std::size_t draw_pile_size() const { return draw_.size(); }
  const std::optional<Card>& pending() const { return pending_; }

 private:
  Card draw_one(int seat);
  void draw_n(int seat, int n);

  Rng rng_;
  std::array<std::vector<Card>, 2> hands_;
  std::vector<Card> draw_;     // back is the next card
  std::vector<Card> discard_;  // back is the top
  std::vector<Card> played_;   // cards played by either player, in order
  int current_ = 0;
  std::optional<Card> pending_;  // drawn card that must be played
  int winner_ = -1;
  bool stalled_ = false;  // step bound hit: a draw
  mutable std::optional<std::vector<Action>> legal_cache_;
};

std::unique_ptr<State> new_uno(Seed seed, const GameOptions& options);

}  // namespace cardlab

#endif  // CARDLAB_UNO_H_
