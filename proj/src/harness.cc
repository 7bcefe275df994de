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

#include "cardlab/harness.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstring>

#include "cardlab/action_codec.h"
#include "cardlab/dqn.h"
#include "cardlab/pipeline.h"
#include "cardlab/prompts.h"
#include "httplib.h"

namespace cardlab {

Json policy_request_json(const PolicyRequest& req) {
  Json legal = Json::array();
  for (const Action& a : req.legal) legal.push_back(action_value(req.game, a));
  return Json{{"game", std::string(game_name(req.game))},
              {"seat", req.obs.seat},
              {"match_id", req.match_id},
              {"step", req.step},
              {"prompt", render(req.obs)},
              {"observation", req.obs.fields},
              {"legal_actions", std::move(legal)}};
}

Action RemotePolicy::act(const PolicyRequest& req, Rng& rng) {
  std::lock_guard<std::mutex> lock(mu_);
  const std::string request = policy_request_json(req).dump();
  for (int attempt = 0; attempt <= options_.retries; ++attempt) {
    if (attempt > 0) ++retries_;
    const std::string reply = exchange(request);
    try {
      const Action a = decode_action(req.game, reply);
      if (std::find(req.legal.begin(), req.legal.end(), a) != req.legal.end()) {
        return a;
      }
    } catch (const Error&) {
      // Undecodable reply; try again.
    }
  }
  ++fallbacks_;
  return req.legal[rng.uniform(req.legal.size())];
}

// ---- stdio ----------------------------------------------------------------------

StdioPolicy::StdioPolicy(std::string command, EndpointOptions options)
    : RemotePolicy(options), command_(std::move(command)) {
  int in_pipe[2], out_pipe[2];
  if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0) {
    throw TransportError("pipe failed: " + std::string(std::strerror(errno)));
  }
  pid_ = fork();
  if (pid_ < 0) throw TransportError("fork failed: " + std::string(std::strerror(errno)));
  if (pid_ == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    close(in_pipe[0]);
    close(in_pipe[1]);
    close(out_pipe[0]);
    close(out_pipe[1]);
    execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(in_pipe[0]);
  close(out_pipe[1]);
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  signal(SIGPIPE, SIG_IGN);
}

StdioPolicy::~StdioPolicy() {
  if (to_child_ >= 0) close(to_child_);
  if (from_child_ >= 0) close(from_child_);
  if (pid_ > 0) {
    int status = 0;
    for (int i = 0; i < 50; ++i) {
      if (waitpid(pid_, &status, WNOHANG) != 0) return;
      usleep(10000);
    }
    kill(pid_, SIGKILL);
    waitpid(pid_, &status, 0);
  }
}

std::string StdioPolicy::exchange(const std::string& request) {
  std::string msg = request + "\n";
  std::size_t sent = 0;
  while (sent < msg.size()) {
    const ssize_t n = write(to_child_, msg.data() + sent, msg.size() - sent);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw TransportError("write to '" + command_ + "' failed: " + std::strerror(errno));
    }
    sent += static_cast<std::size_t>(n);
  }
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(options().timeout_ms);
  for (;;) {
    const auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return line;
    }
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                          deadline - std::chrono::steady_clock::now())
                          .count();
    if (left <= 0) throw Timeout("no reply from '" + command_ + "'");
    pollfd pfd{from_child_, POLLIN, 0};
    const int ready = poll(&pfd, 1, static_cast<int>(left));
    if (ready < 0) {
      if (errno == EINTR) continue;
      throw TransportError("poll failed: " + std::string(std::strerror(errno)));
    }
    if (ready == 0) throw Timeout("no reply from '" + command_ + "'");
    char buf[4096];
    const ssize_t n = read(from_child_, buf, sizeof buf);
    if (n <= 0) throw TransportError("'" + command_ + "' closed its output");
    buffer_.append(buf, static_cast<std::size_t>(n));
  }
}

// ---- http -----------------------------------------------------------------------

HttpPolicy::HttpPolicy(std::string url, EndpointOptions options)
    : RemotePolicy(options), url_(std::move(url)) {
  const auto scheme = url_.find("://");
  if (scheme == std::string::npos) throw PolicyUnavailable("bad url '" + url_ + "'");
  const auto slash = url_.find('/', scheme + 3);
  origin_ = url_.substr(0, slash);
  path_ = slash == std::string::npos ? "/" : url_.substr(slash);
}

std::string HttpPolicy::exchange(const std::string& request) {
  httplib::Client cli(origin_);
  const auto ms = std::chrono::milliseconds(options().timeout_ms);
  cli.set_connection_timeout(ms);
  cli.set_read_timeout(ms);
  cli.set_write_timeout(ms);
  auto res = cli.Post(path_, request, "application/json");
  if (!res) {
    if (res.error() == httplib::Error::Read ||
        res.error() == httplib::Error::ConnectionTimeout) {
      throw Timeout("no reply from " + url_);
    }
    throw TransportError("request to " + url_ + " failed: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw TransportError(url_ + " answered HTTP " + std::to_string(res->status));
  }
  return res->body;
}

// ---- bindings ---------------------------------------------------------------------

std::unique_ptr<Policy> make_policy(std::string_view binding, Game game,
                                    const EndpointOptions& options) {
  const auto colon = binding.find(':');
  const std::string kind(binding.substr(0, colon));
  const std::string arg =
      colon == std::string_view::npos ? "" : std::string(binding.substr(colon + 1));
  if (kind == "random") return std::make_unique<RandomPolicy>();
  if (kind == "rule") return std::make_unique<RulePolicy>();
  if (kind == "dqn") {
    if (arg.empty()) throw PolicyUnavailable("dqn policy needs a model path");
    auto model = std::make_shared<const DqnModel>(load_model(arg));
    if (model->game != game) {
      throw PolicyUnavailable("model " + arg + " was trained for " +
                              std::string(game_name(model->game)));
    }
    return std::make_unique<DqnPolicy>(model);
  }
  if (kind == "stdio") {
    if (arg.empty()) throw PolicyUnavailable("stdio policy needs a command");
    return std::make_unique<StdioPolicy>(arg, options);
  }
  if (kind == "http" || kind == "https") {
    // Accept both "http:URL" and a bare "http://..." URL.
    const std::string url = arg.rfind("//", 0) == 0 ? std::string(binding) : arg;
    return std::make_unique<HttpPolicy>(url, options);
  }
  throw PolicyUnavailable("unknown policy '" + std::string(binding) + "'");
}

// ---- metrics ----------------------------------------------------------------------

std::string_view metric_kind_name(MetricKind k) {
  switch (k) {
    case MetricKind::kWinRate: return "win_rate";
    case MetricKind::kRoundWinRate: return "round_win_rate";
    case MetricKind::kMeanReward: return "mean_reward";
  }
  return "?";
}

double compute_win_rate(Game game, const std::vector<RoleResult>& results) {
  if (results.empty()) throw EmptyResults("no results to rate");
  if (game == Game::kDouDizhu) {
    double wins[2] = {0, 0};
    double count[2] = {0, 0};
    for (const auto& r : results) {
      const int k = r.role == "landlord" ? 0 : 1;
      count[k] += 1;
      wins[k] += r.won ? 1 : 0;
    }
    if (count[0] == 0 || count[1] == 0) {
      throw EmptyResults("doudizhu rating needs landlord and farmer games");
    }
    return (wins[0] / count[0] + wins[1] / count[1]) / 2.0;
  }
  double wins = 0;
  for (const auto& r : results) wins += r.won ? 1 : 0;
  return wins / static_cast<double>(results.size());
}

Json MetricReport::to_json() const {
  Json j{{"game", std::string(game_name(game))},
         {"games", games},
         {"metric", std::string(metric_kind_name(kind))},
         {"value", value}};
  if (kind == MetricKind::kMeanReward) {
    j["std_error"] = std_error;
    j["win_rate"] = win_rate;
  }
  if (game == Game::kDouDizhu) {
    j["landlord"] = Json{{"games", landlord_games}, {"win_rate", landlord_rate}};
    j["farmer"] = Json{{"games", farmer_games}, {"win_rate", farmer_rate}};
  }
  if (game == Game::kGuanDan) {
    j["deals"] = deals;
    j["match_win_rate"] = win_rate;
  }
  j["fallbacks"] = fallbacks;
  return j;
}

MetricReport evaluate(Game game, Policy& subject, Policy& opponent,
                      std::uint64_t games, Seed seed, int workers) {
  if (games == 0) throw UsageError("evaluate needs at least one game");
  MetricReport rep;
  rep.game = game;
  rep.games = games;
  const std::uint64_t before = subject.fallbacks() + opponent.fallbacks();

  if (game == Game::kDouDizhu) {
    rep.kind = MetricKind::kWinRate;
    const std::uint64_t half = games / 2;
    std::vector<RoleResult> results;
    const auto as_landlord = play_matches(game, seed, 0, half,
                                          {&subject, &opponent, &opponent}, workers);
    const auto as_farmer = play_matches(game, seed, half, games - half,
                                        {&opponent, &subject, &subject}, workers);
    for (const auto& m : as_landlord) results.push_back({"landlord", m.winner_side == "landlord"});
    for (const auto& m : as_farmer) results.push_back({"farmer", m.winner_side == "farmers"});
    rep.landlord_games = as_landlord.size();
    rep.farmer_games = as_farmer.size();
    double lw = 0, fw = 0;
    for (const auto& r : results) (r.role == "landlord" ? lw : fw) += r.won ? 1 : 0;
    rep.landlord_rate = rep.landlord_games ? lw / rep.landlord_games : 0.0;
    rep.farmer_rate = rep.farmer_games ? fw / rep.farmer_games : 0.0;
    rep.value = compute_win_rate(game, results);
  } else if (game == Game::kGuanDan) {
    rep.kind = MetricKind::kRoundWinRate;
    const auto matches = play_matches(game, seed, 0, games,
                                      {&subject, &opponent, &subject, &opponent}, workers);
    std::vector<RoleResult> deals;
    double match_wins = 0;
    for (const auto& m : matches) {
      for (int w : m.deal_winners) deals.push_back({"team_0", w == 0});
      match_wins += m.winner_side == "team_0" ? 1 : 0;
    }
    rep.deals = deals.size();
    rep.value = compute_win_rate(game, deals);
    rep.win_rate = match_wins / games;
  } else {
    rep.kind = MetricKind::kMeanReward;
    const auto matches = play_matches(game, seed, 0, games, {&subject, &opponent}, workers);
    double sum = 0, sq = 0, wins = 0;
    for (const auto& m : matches) {
      const double r = m.payoffs[0];
      sum += r;
      sq += r * r;
      wins += r > 0 ? 1 : 0;
    }
    const double n = static_cast<double>(games);
    rep.value = sum / n;
    const double var = n > 1 ? (sq - n * rep.value * rep.value) / (n - 1) : 0.0;
    rep.std_error = std::sqrt(std::max(0.0, var) / n);
    rep.win_rate = wins / n;
  }
  rep.fallbacks = subject.fallbacks() + opponent.fallbacks() - before;
  return rep;
}

}  // namespace cardlab
