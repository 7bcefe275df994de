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

#ifndef CARDLAB_DQN_H_
#define CARDLAB_DQN_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cardlab/agents.h"
#include "cardlab/game.h"

namespace cardlab {

struct DqnConfig {
  std::vector<int> hidden = {64, 64};
  double gamma = 0.99;
  int batch = 32;
  int replay = 20000;
  int warmup = 1000;
  double eps_start = 1.0;
  double eps_end = 0.1;
  int eps_steps = 20000;
  int target_sync = 1000;
  double lr = 5e-4;
  int steps = 200000;  // agent decisions

  Json to_json() const;
  static DqnConfig from_json(const Json& j);
};

// Fixed-width inputs for the poker games. Throws UnsupportedGame.
int feature_width(Game game);
std::vector<double> encode_features(Game game, const Observation& obs);

int action_width(Game game);
int action_index(Game game, const Action& action);
Action action_at(Game game, int index);

// Fully connected network with ReLU hidden layers and a linear output.
// All parameters live in one flat vector; layer l stores its weights
// row-major (out x in) followed by its biases.
class Mlp {
 public:
  Mlp() = default;
  Mlp(std::vector<int> sizes, Rng& rng);

  const std::vector<int>& sizes() const { return sizes_; }
  std::vector<double>& params() { return params_; }
  const std::vector<double>& params() const { return params_; }

  std::vector<double> forward(const std::vector<double>& x) const;

  // Squared TD error (q(x)[a] - target)^2; adds its gradient to `grad`
  // (same layout as params) and returns the loss.
  double td_loss_grad(const std::vector<double>& x, int a, double target,
                      std::vector<double>& grad) const;
  double td_loss(const std::vector<double>& x, int a, double target) const;

 private:
  std::size_t weight_offset(std::size_t layer) const { return offsets_[layer]; }

  std::vector<int> sizes_;
  std::vector<std::size_t> offsets_;
  std::vector<double> params_;
};

struct TrainReport {
  int steps = 0;
  int episodes = 0;
  int updates = 0;
  int syncs = 0;
  double last_loss = 0.0;
};

// Trains against a uniform random opponent, alternating seats per episode.
// Throws DivergenceDetected on a non-finite loss.
Mlp train_dqn(Game game, const DqnConfig& config, Seed seed,
              TrainReport* report = nullptr);

struct DqnModel {
  Game game = Game::kLeduc;
  Mlp net;
  DqnConfig config;
};

Json model_to_json(const DqnModel& model);
DqnModel model_from_json(const Json& j);
void save_model(const std::string& path, const DqnModel& model);
DqnModel load_model(const std::string& path);

// Greedy over legal actions.
class DqnPolicy final : public Policy {
 public:
  explicit DqnPolicy(std::shared_ptr<const DqnModel> model)
      : model_(std::move(model)) {}
  Action act(const PolicyRequest& req, Rng& rng) override;
  std::string name() const override { return "dqn"; }

 private:
  std::shared_ptr<const DqnModel> model_;
};

}  // namespace cardlab

#endif  // CARDLAB_DQN_H_
