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

#include "cardlab/dqn.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "cardlab/poker.h"

namespace cardlab {

Json DqnConfig::to_json() const {
  return Json{{"hidden", hidden},       {"gamma", gamma},
              {"batch", batch},         {"replay", replay},
              {"warmup", warmup},       {"eps_start", eps_start},
              {"eps_end", eps_end},     {"eps_steps", eps_steps},
              {"target_sync", target_sync}, {"lr", lr},
              {"steps", steps}};
}

DqnConfig DqnConfig::from_json(const Json& j) {
  DqnConfig c;
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  get("hidden", c.hidden);
  get("gamma", c.gamma);
  get("batch", c.batch);
  get("replay", c.replay);
  get("warmup", c.warmup);
  get("eps_start", c.eps_start);
  get("eps_end", c.eps_end);
  get("eps_steps", c.eps_steps);
  get("target_sync", c.target_sync);
  get("lr", c.lr);
  get("steps", c.steps);
  return c;
}

// ---- features ---------------------------------------------------------------

int feature_width(Game game) {
  switch (game) {
    case Game::kLeduc: return 11;
    case Game::kLimit: return 110;
    case Game::kNoLimit: return 112;
    default: break;
  }
  throw UnsupportedGame("no feature encoding for " + std::string(game_name(game)));
}

namespace {

int card_slot(const Card& c) {
  return static_cast<int>(c.suit()) * 13 + rank_value(c.rank()) - 2;
}

int leduc_rank_slot(Rank r) {
  return r == Rank::kJack ? 0 : r == Rank::kQueen ? 1 : 2;
}

}  // namespace

std::vector<double> encode_features(Game game, const Observation& obs) {
  const int width = feature_width(game);
  std::vector<double> x(width, 0.0);
  const auto& f = obs.fields;
  const int seat = obs.seat;
  if (game == Game::kLeduc) {
    x[leduc_rank_slot(parse_card(f["hand"].get<std::string>()).rank())] = 1.0;
    if (f["public_card"].is_null()) {
      x[6] = 1.0;
    } else {
      x[3 + leduc_rank_slot(parse_card(f["public_card"].get<std::string>()).rank())] = 1.0;
    }
    const int round = f["round"].get<int>();
    x[7] = round == 2 ? 1.0 : 0.0;
    x[8] = f["all_chips"][seat].get<int>() / 14.0;
    x[9] = f["all_chips"][1 - seat].get<int>() / 14.0;
    x[10] = f["raises"][round - 1].get<int>() / 2.0;
    return x;
  }
  for (const auto& s : f["hole_cards"]) x[card_slot(parse_card(s.get<std::string>()))] = 1.0;
  for (const auto& s : f["community_cards"])
    x[52 + card_slot(parse_card(s.get<std::string>()))] = 1.0;
  const std::string round = f["round"].get<std::string>();
  for (int r = 0; r < 4; ++r)
    if (holdem_round_name(r) == round) x[104 + r] = 1.0;
  x[108] = f["all_chips"][seat].get<int>() / 100.0;
  x[109] = f["all_chips"][1 - seat].get<int>() / 100.0;
  if (game == Game::kNoLimit) {
    x[110] = f["stacks"][seat].get<int>() / 100.0;
    x[111] = f["stacks"][1 - seat].get<int>() / 100.0;
  }
  return x;
}

int action_width(Game game) {
  switch (game) {
    case Game::kLeduc:
    case Game::kLimit: return 4;
    case Game::kNoLimit: return 5;
    default: break;
  }
  throw UnsupportedGame("no action encoding for " + std::string(game_name(game)));
}

int action_index(Game game, const Action& action) {
  if (game == Game::kNoLimit) return static_cast<int>(std::get<NlAction>(action));
  return static_cast<int>(std::get<BetAction>(action));
}

Action action_at(Game game, int index) {
  if (game == Game::kNoLimit) return static_cast<NlAction>(index);
  return static_cast<BetAction>(index);
}

// ---- network ----------------------------------------------------------------

Mlp::Mlp(std::vector<int> sizes, Rng& rng) : sizes_(std::move(sizes)) {
  std::size_t total = 0;
  for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
    offsets_.push_back(total);
    total += static_cast<std::size_t>(sizes_[l] + 1) * sizes_[l + 1];
  }
  params_.assign(total, 0.0);
  // He-uniform weights, zero biases.
  for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
    const int in = sizes_[l];
    const int out = sizes_[l + 1];
    const double bound = std::sqrt(6.0 / in);
    double* w = params_.data() + offsets_[l];
    for (int k = 0; k < in * out; ++k) w[k] = (2.0 * rng.uniform_real() - 1.0) * bound;
  }
}

std::vector<double> Mlp::forward(const std::vector<double>& x) const {
  std::vector<double> cur = x;
  std::vector<double> next;
  const std::size_t layers = sizes_.size() - 1;
  for (std::size_t l = 0; l < layers; ++l) {
    const int in = sizes_[l];
    const int out = sizes_[l + 1];
    const double* w = params_.data() + offsets_[l];
    const double* b = w + static_cast<std::size_t>(in) * out;
    next.assign(out, 0.0);
    for (int o = 0; o < out; ++o) {
      double s = b[o];
      const double* row = w + static_cast<std::size_t>(o) * in;
      for (int i = 0; i < in; ++i) s += row[i] * cur[i];
      next[o] = (l + 1 < layers) ? std::max(0.0, s) : s;
    }
    cur.swap(next);
  }
  return cur;
}

double Mlp::td_loss(const std::vector<double>& x, int a, double target) const {
  const double d = forward(x)[a] - target;
  return d * d;
}

double Mlp::td_loss_grad(const std::vector<double>& x, int a, double target,
                         std::vector<double>& grad) const {
  const std::size_t layers = sizes_.size() - 1;
  std::vector<std::vector<double>> acts(layers + 1);
  acts[0] = x;
  for (std::size_t l = 0; l < layers; ++l) {
    const int in = sizes_[l];
    const int out = sizes_[l + 1];
    const double* w = params_.data() + offsets_[l];
    const double* b = w + static_cast<std::size_t>(in) * out;
    acts[l + 1].assign(out, 0.0);
    for (int o = 0; o < out; ++o) {
      double s = b[o];
      const double* row = w + static_cast<std::size_t>(o) * in;
      for (int i = 0; i < in; ++i) s += row[i] * acts[l][i];
      acts[l + 1][o] = (l + 1 < layers) ? std::max(0.0, s) : s;
    }
  }
  const double diff = acts[layers][a] - target;
  std::vector<double> delta(sizes_[layers], 0.0);
  delta[a] = 2.0 * diff;
  for (std::size_t l = layers; l-- > 0;) {
    const int in = sizes_[l];
    const int out = sizes_[l + 1];
    const double* w = params_.data() + offsets_[l];
    double* gw = grad.data() + offsets_[l];
    double* gb = gw + static_cast<std::size_t>(in) * out;
    std::vector<double> prev(in, 0.0);
    for (int o = 0; o < out; ++o) {
      const double d = delta[o];
      if (d == 0.0) continue;
      gb[o] += d;
      const double* row = w + static_cast<std::size_t>(o) * in;
      double* grow = gw + static_cast<std::size_t>(o) * in;
      for (int i = 0; i < in; ++i) {
        grow[i] += d * acts[l][i];
        prev[i] += d * row[i];
      }
    }
    if (l > 0) {
      for (int i = 0; i < in; ++i)
        if (acts[l][i] <= 0.0) prev[i] = 0.0;
    }
    delta.swap(prev);
  }
  return diff * diff;
}

// ---- training -----------------------------------------------------------------

namespace {

struct Transition {
  std::vector<double> x;
  int a = 0;
  double r = 0.0;
  std::vector<double> next;
  bool done = false;
  std::vector<bool> next_legal;
};

class Replay {
 public:
  explicit Replay(std::size_t capacity) : capacity_(capacity) {}
  void push(Transition t) {
    if (items_.size() < capacity_) {
      items_.push_back(std::move(t));
    } else {
      items_[head_] = std::move(t);
    }
    head_ = (head_ + 1) % capacity_;
  }
  std::size_t size() const { return items_.size(); }
  const Transition& at(std::size_t i) const { return items_[i]; }

 private:
  std::size_t capacity_;
  std::size_t head_ = 0;
  std::vector<Transition> items_;
};

std::vector<bool> legal_mask(Game game, const std::vector<Action>& legal) {
  std::vector<bool> mask(action_width(game), false);
  for (const Action& a : legal) mask[action_index(game, a)] = true;
  return mask;
}

int masked_argmax(const std::vector<double>& q, const std::vector<bool>& mask) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(q.size()); ++i)
    if (mask[i] && (best < 0 || q[i] > q[best])) best = i;
  return best;
}

}  // namespace

Mlp train_dqn(Game game, const DqnConfig& cfg, Seed seed, TrainReport* report) {
  if (!is_poker(game)) {
    throw UnsupportedGame("dqn training needs a poker game, got " +
                          std::string(game_name(game)));
  }
  Rng rng(derive_seed(seed, 0x7d));
  std::vector<int> sizes{feature_width(game)};
  sizes.insert(sizes.end(), cfg.hidden.begin(), cfg.hidden.end());
  sizes.push_back(action_width(game));
  Mlp online(sizes, rng);
  Mlp target = online;
  Replay replay(static_cast<std::size_t>(cfg.replay));
  std::vector<double> grad(online.params().size());
  TrainReport rep;

  auto train_batch = [&] {
    std::fill(grad.begin(), grad.end(), 0.0);
    double loss = 0.0;
    for (int k = 0; k < cfg.batch; ++k) {
      const Transition& t = replay.at(rng.uniform(replay.size()));
      double y = t.r;
      if (!t.done) {
        const auto q = target.forward(t.next);
        y += cfg.gamma * q[masked_argmax(q, t.next_legal)];
      }
      loss += online.td_loss_grad(t.x, t.a, y, grad);
    }
    loss /= cfg.batch;
    if (!std::isfinite(loss)) {
      throw DivergenceDetected("dqn loss became non-finite at step " +
                               std::to_string(rep.steps));
    }
    const double scale = cfg.lr / cfg.batch;
    auto& p = online.params();
    for (std::size_t i = 0; i < p.size(); ++i) p[i] -= scale * grad[i];
    rep.last_loss = loss;
    ++rep.updates;
  };

  for (std::uint64_t ep = 0; rep.steps < cfg.steps; ++ep) {
    auto state = reset(game, derive_seed(seed, ep + 1), GameOptions{ep, true});
    const int agent = static_cast<int>(ep % 2);
    std::optional<std::pair<std::vector<double>, int>> pending;
    while (!state->is_terminal()) {
      const int seat = state->current_seat();
      const auto legal = state->legal_actions();
      Action action;
      if (seat == agent) {
        // The budget is exact: an unfinished last episode is dropped.
        if (rep.steps >= cfg.steps) break;
        const Observation obs = state->observe(seat);
        auto x = encode_features(game, obs);
        const auto mask = legal_mask(game, legal);
        if (pending) {
          replay.push({pending->first, pending->second, 0.0, x, false, mask});
        }
        const double frac =
            std::min(1.0, static_cast<double>(rep.steps) / cfg.eps_steps);
        const double eps = cfg.eps_start + (cfg.eps_end - cfg.eps_start) * frac;
        if (rng.uniform_real() < eps) {
          action = legal[rng.uniform(legal.size())];
        } else {
          action = action_at(game, masked_argmax(online.forward(x), mask));
        }
        pending.emplace(std::move(x), action_index(game, action));
        ++rep.steps;
        if (replay.size() >= static_cast<std::size_t>(cfg.warmup)) train_batch();
        if (rep.steps % cfg.target_sync == 0) {
          target = online;
          ++rep.syncs;
        }
      } else {
        action = legal[rng.uniform(legal.size())];
      }
      state->apply(action);
    }
    if (!state->is_terminal()) break;
    if (pending) {
      replay.push({pending->first, pending->second, state->payoffs()[agent],
                   std::vector<double>(feature_width(game), 0.0), true,
                   std::vector<bool>(action_width(game), false)});
    }
    ++rep.episodes;
  }
  if (report) *report = rep;
  return online;
}

// ---- persistence ----------------------------------------------------------------

Json model_to_json(const DqnModel& model) {
  Json weights = Json::array();
  const auto& sizes = model.net.sizes();
  const auto& p = model.net.params();
  std::size_t off = 0;
  for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
    const std::size_t nw = static_cast<std::size_t>(sizes[l]) * sizes[l + 1];
    std::vector<double> w(p.begin() + off, p.begin() + off + nw);
    off += nw;
    std::vector<double> b(p.begin() + off, p.begin() + off + sizes[l + 1]);
    off += sizes[l + 1];
    weights.push_back(Json{{"shape", {sizes[l + 1], sizes[l]}}, {"w", w}, {"b", b}});
  }
  return Json{{"game", std::string(game_name(model.game))},
              {"layers", sizes},
              {"weights", weights},
              {"config", model.config.to_json()}};
}

DqnModel model_from_json(const Json& j) {
  for (const char* key : {"game", "layers", "weights"}) {
    if (!j.contains(key)) throw SchemaMismatch(std::string("model lacks '") + key + "'");
  }
  DqnModel m;
  m.game = parse_game(j["game"].get<std::string>());
  if (j.contains("config")) m.config = DqnConfig::from_json(j["config"]);
  Rng rng(0);
  m.net = Mlp(j["layers"].get<std::vector<int>>(), rng);
  auto& p = m.net.params();
  std::size_t off = 0;
  for (const auto& layer : j["weights"]) {
    for (const char* key : {"w", "b"}) {
      for (double v : layer.at(key)) {
        if (off >= p.size()) throw SchemaMismatch("model weights exceed layer sizes");
        p[off++] = v;
      }
    }
  }
  if (off != p.size()) throw SchemaMismatch("model weights do not match layer sizes");
  if (m.net.sizes().front() != feature_width(m.game) ||
      m.net.sizes().back() != action_width(m.game)) {
    throw SchemaMismatch("model layers do not fit " + std::string(game_name(m.game)));
  }
  return m;
}

void save_model(const std::string& path, const DqnModel& model) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << model_to_json(model).dump() << '\n';
}

DqnModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PolicyUnavailable("cannot read model " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("model file " + path + " is not JSON");
  return model_from_json(j);
}

Action DqnPolicy::act(const PolicyRequest& req, Rng& /*rng*/) {
  const auto q = model_->net.forward(encode_features(req.game, req.obs));
  const Action* best = nullptr;
  double best_q = -std::numeric_limits<double>::infinity();
  for (const Action& a : req.legal) {
    const double v = q[action_index(req.game, a)];
    if (!best || v > best_q) {
      best = &a;
      best_q = v;
    }
  }
  return *best;
}

}  // namespace cardlab
