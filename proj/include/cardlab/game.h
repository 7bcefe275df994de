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

#ifndef CARDLAB_GAME_H_
#define CARDLAB_GAME_H_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

#include "cardlab/actions.h"
#include "cardlab/cards.h"
#include "cardlab/errors.h"
#include "cardlab/game_id.h"
#include "cardlab/rng.h"
#include "json.hpp"

namespace cardlab {

using Json = nlohmann::ordered_json;

// Per-seat view of a state. `fields` holds the values of the game's prompt
// slots, keyed by slot name, in slot order.
struct Observation {
  Game game = Game::kLeduc;
  int seat = 0;
  std::string role;
  Json fields = Json::object();
};

struct HistoryEntry {
  int seat = 0;
  Action action;
};

// Append-only action log. Full chunks are immutable and shared between
// copies, so cloning a state copies at most one partial chunk.
class History {
 public:
  static constexpr std::size_t kChunk = 32;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = HistoryEntry;
    using difference_type = std::ptrdiff_t;
    using pointer = const HistoryEntry*;
    using reference = const HistoryEntry&;

    const_iterator() = default;
    const_iterator(const History* h, std::size_t i) : h_(h), i_(i) {}
    reference operator*() const { return (*h_)[i_]; }
    pointer operator->() const { return &(*h_)[i_]; }
    const_iterator& operator++() {
      ++i_;
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator old = *this;
      ++i_;
      return old;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.i_ == b.i_;
    }

   private:
    const History* h_ = nullptr;
    std::size_t i_ = 0;
  };

  std::size_t size() const { return chunks_.size() * kChunk + tail_.size(); }
  bool empty() const { return size() == 0; }
  const HistoryEntry& operator[](std::size_t i) const {
    const std::size_t c = i / kChunk;
    return c < chunks_.size() ? (*chunks_[c])[i % kChunk] : tail_[i - chunks_.size() * kChunk];
  }
  const HistoryEntry& back() const { return (*this)[size() - 1]; }
  const_iterator begin() const { return {this, 0}; }
  const_iterator end() const { return {this, size()}; }

  void push_back(HistoryEntry e) {
    tail_.push_back(std::move(e));
    if (tail_.size() == kChunk) {
      chunks_.push_back(std::make_shared<const std::vector<HistoryEntry>>(std::move(tail_)));
      tail_.clear();
      tail_.reserve(kChunk);
    }
  }

 private:
  std::vector<std::shared_ptr<const std::vector<HistoryEntry>>> chunks_;
  std::vector<HistoryEntry> tail_;
};

struct GameOptions {
  // Selects the first actor / dealer rotation of two-player games so that
  // seat advantages cancel over consecutive matches.
  std::uint64_t match_index = 0;
  // GuanDan: play level matches up to A (true) or a single deal.
  bool guandan_full_match = true;
};

// An immutable legal-move list. Long lists carry a sorted index so that
// membership is a binary search; engines share one instance between clones.
class LegalSet {
 public:
  explicit LegalSet(std::vector<Action> list);
  const std::vector<Action>& list() const { return list_; }
  bool contains(const Action& action) const;

 private:
  std::vector<Action> list_;
  std::vector<std::uint32_t> order_;
};

// A game in progress. Instances are confined to one thread at a time.
class State {
 public:
  virtual ~State() = default;

  virtual Game game() const = 0;
  virtual int num_seats() const = 0;
  virtual int current_seat() const = 0;
  virtual bool is_terminal() const = 0;

  // Non-empty, deduplicated and deterministic. Throws TerminalState.
  virtual std::vector<Action> legal_actions() const = 0;

  // Membership in legal_actions(); engines with large action sets override
  // it to avoid copying the list.
  virtual bool is_legal(const Action& action) const;

  // Throws IllegalAction naming the action and the seat.
  virtual void apply(const Action& action) = 0;

  // Throws NonTerminal.
  virtual std::vector<double> payoffs() const = 0;

  virtual Observation observe(int seat) const = 0;
  virtual std::string role(int seat) const;

  // Every card in every zone; its multiset equals build_deck(game()).
  virtual std::vector<Card> all_cards() const = 0;

  // Canonical full-state text; equal states give equal text.
  virtual std::string serialize() const = 0;

  virtual std::unique_ptr<State> clone() const = 0;

  // For terminal states: one flag per history entry, true when the acting
  // seat belongs to the winning side of the deal that entry belongs to.
  virtual std::vector<bool> winning_steps() const;
  // "landlord", "farmers", "team_0", "seat_1", "draw", ...
  virtual std::string winner_side() const;

  const History& history() const { return history_; }
  std::uint64_t fingerprint() const { return fnv1a(serialize()); }

 protected:
  History history_;
};

std::unique_ptr<State> reset(Game game, Seed seed,
                             const GameOptions& options = {});

// Functional form of State::apply.
std::unique_ptr<State> step(const State& state, const Action& action);

// Text for error messages and debugging.
std::string describe_action(Game game, const Action& action);

// Helper for apply(): validates membership.
void require_legal(const State& state, const Action& action);

}  // namespace cardlab

#endif  // CARDLAB_GAME_H_
