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

#ifndef CARDLAB_GUANDAN_H_
#define CARDLAB_GUANDAN_H_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cardlab/game.h"

namespace cardlab {

// The two hearts of the level rank are wild.
struct LevelContext {
  Rank level = Rank::kTwo;
  Card wild() const { return Card::french(Suit::kHeart, level); }
  bool is_wild(const Card& c) const { return c == wild(); }
};

// Ordering for singles, pairs, trips and full houses: 2..A without the
// level rank, then the level rank, black joker, red joker.
int guan_order(Rank rank, Rank level);

// Sequences (Straight, ThreePair, TripsPair, straight flush) are ranked by
// their lowest card, ace-low counted below 2: A -> 0, 2 -> 1, ..., K -> 12.
int guan_sequence_start(char rank);

// [Type, Rank, Cards]; see GuanAction.
using GuanCombo = GuanAction;

int guan_wilds_used(const GuanCombo& combo, const LevelContext& ctx);

enum class GuanBomb { kNone, kSameRank, kStraightFlush, kJokers };
struct GuanBombClass {
  GuanBomb kind = GuanBomb::kNone;
  int size = 0;
};
GuanBombClass guan_bomb_class(const GuanCombo& combo, const LevelContext& ctx);

// True iff `a` beats `b`.
bool compare_guan(const GuanCombo& a, const GuanCombo& b,
                  const LevelContext& ctx);

// All legal combinations including wild substitutions; a pass is included
// iff last_move is a play.
std::vector<GuanCombo> enumerate_guan_moves(
    std::span<const Card> hand, const std::optional<GuanCombo>& last_move,
    const LevelContext& ctx);

// Level ladder, by the finishing position of the banker's partner.
struct GuanLadder {
  int partner_second = 3;
  int partner_third = 2;
  int partner_fourth = 1;
  int max_deals = 200;
};

enum class GuanPhase { kTribute, kBack, kPlay, kOver };

class GuanDanState final : public State {
 public:
  GuanDanState(Seed seed, const GameOptions& options,
               const GuanLadder& ladder = {});
  // Fixture constructor: one deal from the given hands. previous_finish
  // (when non-empty) triggers the tribute phase as if that was the last
  // deal's finishing order.
  GuanDanState(const std::array<std::vector<Card>, 4>& hands, Rank level,
               int leader, const std::vector<int>& previous_finish = {},
               bool full_match = false);

  Game game() const override { return Game::kGuanDan; }
  int num_seats() const override { return 4; }
  int current_seat() const override { return current_; }
  bool is_terminal() const override { return phase_ == GuanPhase::kOver; }
  std::vector<Action> legal_actions() const override;
  bool is_legal(const Action& action) const override;
  void apply(const Action& action) override;
  std::vector<double> payoffs() const override;
  Observation observe(int seat) const override;
  std::vector<Card> all_cards() const override;
  std::string serialize() const override;
  std::unique_ptr<State> clone() const override {
    return std::make_unique<GuanDanState>(*this);
  }
  std::vector<bool> winning_steps() const override;
  std::string winner_side() const override;

  GuanPhase phase() const { return phase_; }
  LevelContext context() const { return LevelContext{level_}; }
  const std::vector<Card>& hand(int seat) const { return hands_[seat]; }
  Rank team_level(int team) const { return team_level_[team]; }
  int deal_index() const { return deal_index_; }
  // Winning team of every finished deal, in order.
  const std::vector<int>& deal_winners() const { return deal_winners_; }
  // Finishing order of the current (or last) deal.
  const std::vector<int>& finish_order() const { return finish_order_; }
  // Number of actions taken in the current deal.
  int deal_steps() const { return deal_steps_; }
  int max_deal_steps() const { return max_deal_steps_; }

 private:
  void start_deal();
  void begin_tribute(const std::vector<int>& previous_finish);
  void finish_tribute();
  void end_deal();
  bool active(int seat) const { return !hands_[seat].empty(); }
  int next_active(int seat) const;
  int active_count() const;

  Rng rng_;
  GuanLadder ladder_;
  bool full_match_ = true;
  std::array<std::vector<Card>, 4> hands_;
  std::array<std::vector<Card>, 4> played_;
  std::array<std::optional<GuanAction>, 4> last_action_;
  std::array<Rank, 2> team_level_ = {Rank::kTwo, Rank::kTwo};
  int leading_team_ = 0;
  Rank level_ = Rank::kTwo;
  GuanPhase phase_ = GuanPhase::kPlay;
  int current_ = 0;
  std::optional<GuanAction> last_play_;
  int last_player_ = -1;
  int passes_ = 0;
  std::vector<int> finish_order_;
  int deal_index_ = 0;
  int deal_steps_ = 0;
  int max_deal_steps_ = 0;
  std::vector<int> deal_winners_;
  std::vector<int> step_deal_;  // deal index of each history entry
  int match_winner_ = -1;

  // Tribute bookkeeping: payers in order, the receiver of each payer and
  // the paid card.
  std::vector<int> payers_;
  std::vector<int> receivers_;
  std::vector<Card> tributes_;
  std::size_t tribute_pos_ = 0;

  const LegalSet& legal_set() const;

  // Shared so that clones do not copy large move lists.
  mutable std::shared_ptr<const LegalSet> legal_cache_;
};

std::unique_ptr<State> new_guandan(Seed seed, const GameOptions& options);

}  // namespace cardlab

#endif  // CARDLAB_GUANDAN_H_
