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

#ifndef CARDLAB_AGENTS_H_
#define CARDLAB_AGENTS_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "cardlab/game.h"

namespace cardlab {

// What a seat filler sees at a decision point.
struct PolicyRequest {
  Game game;
  const Observation& obs;
  std::span<const Action> legal;
  std::uint64_t match_id = 0;
  int step = 0;
};

class Policy {
 public:
  virtual ~Policy() = default;
  // Must return a member of req.legal.
  virtual Action act(const PolicyRequest& req, Rng& rng) = 0;
  virtual std::string name() const = 0;
  // Safe to call act() from several threads at once.
  virtual bool concurrent() const { return true; }
  // Replies that were replaced by a random legal action.
  virtual std::uint64_t fallbacks() const { return 0; }
  // False lets the runner skip building req.obs.
  virtual bool needs_observation() const { return true; }
};

class RandomPolicy final : public Policy {
 public:
  Action act(const PolicyRequest& req, Rng& rng) override;
  std::string name() const override { return "random"; }
  bool needs_observation() const override { return false; }
};

// Deterministic per-game heuristics; `rng` is not consulted.
class RulePolicy final : public Policy {
 public:
  Action act(const PolicyRequest& req, Rng& rng) override;
  std::string name() const override { return "rule"; }
};

// Plays the first listed action of the given kind when legal, otherwise the
// first legal action; used as a fixed-line opponent in tests.
class ScriptedPolicy final : public Policy {
 public:
  explicit ScriptedPolicy(Action preferred) : preferred_(std::move(preferred)) {}
  Action act(const PolicyRequest& req, Rng& rng) override;
  std::string name() const override { return "scripted"; }

 private:
  Action preferred_;
};

Action rule_doudizhu(const PolicyRequest& req);
Action rule_guandan(const PolicyRequest& req);
Action rule_uno(const PolicyRequest& req);
Action rule_gin_rummy(const PolicyRequest& req);
Action rule_poker(const PolicyRequest& req);

}  // namespace cardlab

#endif  // CARDLAB_AGENTS_H_
