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

#ifndef CARDLAB_HARNESS_H_
#define CARDLAB_HARNESS_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "cardlab/agents.h"
#include "cardlab/game.h"

namespace cardlab {

struct EndpointOptions {
  int timeout_ms = 30000;
  int retries = 2;
};

// {"game", "seat", "match_id", "step", "prompt", "observation",
//  "legal_actions"}
Json policy_request_json(const PolicyRequest& req);

// A seat filled by an outside process. Replies that fail to decode or are
// not legal are retried; after the last retry a random legal action is
// played and counted.
class RemotePolicy : public Policy {
 public:
  explicit RemotePolicy(EndpointOptions options) : options_(options) {}
  Action act(const PolicyRequest& req, Rng& rng) override;
  bool concurrent() const override { return false; }
  std::uint64_t fallbacks() const override { return fallbacks_; }
  std::uint64_t retries() const { return retries_; }

 protected:
  // One request/reply exchange. Throws Timeout or TransportError.
  virtual std::string exchange(const std::string& request) = 0;
  const EndpointOptions& options() const { return options_; }

 private:
  EndpointOptions options_;
  std::mutex mu_;
  std::atomic<std::uint64_t> fallbacks_{0};
  std::atomic<std::uint64_t> retries_{0};
};

// Runs `sh -c command`; one JSON request per line on its stdin, one reply
// per line on its stdout.
class StdioPolicy final : public RemotePolicy {
 public:
  StdioPolicy(std::string command, EndpointOptions options);
  ~StdioPolicy() override;
  std::string name() const override { return "stdio:" + command_; }

 protected:
  std::string exchange(const std::string& request) override;

 private:
  std::string command_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

// POSTs the request to the URL and reads the reply body.
class HttpPolicy final : public RemotePolicy {
 public:
  HttpPolicy(std::string url, EndpointOptions options);
  std::string name() const override { return "http:" + url_; }

 protected:
  std::string exchange(const std::string& request) override;

 private:
  std::string url_;
  std::string origin_;
  std::string path_;
};

// "random", "rule", "dqn:PATH", "stdio:COMMAND", "http:URL".
// Throws PolicyUnavailable.
std::unique_ptr<Policy> make_policy(std::string_view binding, Game game,
                                    const EndpointOptions& options = {});

enum class MetricKind { kWinRate, kRoundWinRate, kMeanReward };
std::string_view metric_kind_name(MetricKind k);

struct RoleResult {
  std::string role;  // "landlord", "farmer", or any label
  bool won = false;
};

// DouDizhu: mean of the landlord and farmer rates. Otherwise wins / games.
// Draws are losses. Throws EmptyResults.
double compute_win_rate(Game game, const std::vector<RoleResult>& results);

struct MetricReport {
  Game game = Game::kLeduc;
  std::uint64_t games = 0;
  MetricKind kind = MetricKind::kMeanReward;
  double value = 0.0;
  double std_error = 0.0;
  // DouDizhu role rates; GuanDan deals played.
  double landlord_rate = 0.0;
  double farmer_rate = 0.0;
  std::uint64_t landlord_games = 0;
  std::uint64_t farmer_games = 0;
  std::uint64_t deals = 0;
  double win_rate = 0.0;
  std::uint64_t fallbacks = 0;

  Json to_json() const;
};

// Plays `subject` against `opponent`:
//  DouDizhu: n/2 games as landlord, the rest as both farmers;
//  GuanDan: subject is team 0 (seats 0 and 2), rated per deal;
//  others: subject in seat 0, dealer alternating by match index.
MetricReport evaluate(Game game, Policy& subject, Policy& opponent,
                      std::uint64_t games, Seed seed, int workers = 1);

}  // namespace cardlab

#endif  // CARDLAB_HARNESS_H_
