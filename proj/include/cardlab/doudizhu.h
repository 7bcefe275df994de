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

#ifndef CARDLAB_DOUDIZHU_H_
#define CARDLAB_DOUDIZHU_H_

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cardlab/game.h"

namespace cardlab {

enum class DouCategory {
  kPass,
  kSolo,
  kSoloChain,
  kPair,
  kPairChain,
  kTrio,
  kTrioChain,
  kTrioWithSolo,
  kTrioChainWithSolo,
  kTrioWithPair,
  kTrioChainWithPair,
  kBomb,
  kRocket,
  kFourWithDualSolo,
  kFourWithDualPair,
};

std::string_view dou_category_name(DouCategory c);

// A typed DouDizhu combination. `primal` is the numeric value of the main
// rank (lowest rank for chains); `length` is the chain length (1 for
// non-chains); `cards` ascending in numeric encoding.
struct DouCombo {
  DouCategory category = DouCategory::kPass;
  int primal = 0;
  int length = 0;
  std::vector<int> cards;
  friend auto operator<=>(const DouCombo&, const DouCombo&) = default;
};

inline constexpr int kDouNumOrdinals = 15;
// 3..A -> 0..11, 2 -> 12, black joker -> 13, red joker -> 14.
int dou_ordinal(int value);
int dou_value_of_ordinal(int ordinal);

// Every category a multiset of cards can be read as, most specific first
// (chains before airplanes with kickers). Empty when not a combination.
std::vector<DouCombo> classify_dou(std::span<const int> cards);

// True iff `a` beats `b`.
bool compare_dou(const DouCombo& a, const DouCombo& b);

// Without last_move: every playable combination. With last_move: every
// combination that beats it, plus a pass combo.
std::vector<DouCombo> enumerate_dou_moves(
    std::span<const int> hand, const std::optional<DouCombo>& last_move);

inline constexpr int kDouLandlord = 0;
std::string_view dou_role_name(int seat);  // landlord, landlord_down, landlord_up

class DouDizhuState final : public State {
 public:
  DouDizhuState(Seed seed, const GameOptions& options);
  // Fixed deal, for fixtures. hands[0] is the landlord's 20 cards.
  explicit DouDizhuState(const std::array<std::vector<Card>, 3>& hands);

  Game game() const override { return Game::kDouDizhu; }
  int num_seats() const override { return 3; }
  int current_seat() const override { return current_; }
  bool is_terminal() const override { return winner_ >= 0; }
  std::vector<Action> legal_actions() const override;
  bool is_legal(const Action& action) const override;
  void apply(const Action& action) override;
  std::vector<double> payoffs() const override;
  Observation observe(int seat) const override;
  std::string role(int seat) const override {
    return std::string(dou_role_name(seat));
  }
  std::vector<Card> all_cards() const override;
  std::string serialize() const override;
  std::unique_ptr<State> clone() const override {
    return std::make_unique<DouDizhuState>(*this);
  }
  std::string winner_side() const override;

  std::vector<int> hand_values(int seat) const;
  // The combination to beat, if the current seat is following.
  const std::optional<DouCombo>& last_move() const { return last_move_; }
  int last_mover() const { return last_mover_; }
  int bombs_played() const { return bombs_; }

 private:
  std::array<std::vector<Card>, 3> hands_;
  std::array<std::vector<Card>, 3> played_;
  int current_ = kDouLandlord;
  std::optional<DouCombo> last_move_;
  int last_mover_ = -1;
  int passes_ = 0;
  int bombs_ = 0;
  int winner_ = -1;  // seat that emptied its hand
  const LegalSet& legal_set() const;
  mutable std::shared_ptr<const LegalSet> legal_cache_;
};

std::unique_ptr<State> new_doudizhu(Seed seed, const GameOptions& options);

}  // namespace cardlab

#endif  // CARDLAB_DOUDIZHU_H_
