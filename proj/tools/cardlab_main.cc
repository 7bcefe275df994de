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

// cardlab command line: gen, filter, render, mix, stats, train-dqn, eval.

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cardlab/dqn.h"
#include "cardlab/errors.h"
#include "cardlab/harness.h"
#include "cardlab/pipeline.h"
#include "cardlab/prompts.h"

namespace {

using cardlab::Game;
using cardlab::Json;

int default_workers() {
  if (const char* env = std::getenv("CARDLAB_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
}

// Output goes to a file, or stdout for "-".
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw cardlab::IoError("cannot write " + path);
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

class Source {
 public:
  explicit Source(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw cardlab::IoError("cannot read " + path);
  }
  std::istream& get() { return file_.is_open() ? file_ : std::cin; }

 private:
  std::ifstream file_;
};

std::string slurp(const std::string& path) {
  Source src(path);
  std::ostringstream ss;
  ss << src.get().rdbuf();
  return ss.str();
}

// "key = value" lines become "--key value" unless the flag is already on
// the command line. Flags therefore override the file.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (path.empty()) return args;
  std::istringstream in(slurp(path));
  std::string line;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw cardlab::UsageError("config line without '=': " + line);
    const std::string key = "--" + trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    bool given = false;
    for (const auto& a : args) {
      if (a == key || a.rfind(key + "=", 0) == 0) given = true;
    }
    if (!given) {
      args.push_back(key);
      if (!value.empty()) args.push_back(value);
    }
  }
  return args;
}

struct Options {
  std::string game;
  std::uint64_t games = 1000;
  std::uint64_t seed = 0;
  std::string teacher = "rule";
  std::string opponent = "random";
  std::vector<std::string> seats;
  std::string in;
  std::vector<std::string> inputs;
  std::vector<std::string> pools;
  std::string out = "-";
  std::string spec;
  std::string counts;
  std::string p0 = "rule";
  std::string p1 = "random";
  std::string model_config;
  int steps = 0;
  int workers = default_workers();
  int timeout_ms = 30000;
  int retries = 2;
  bool single_deal = false;
  bool json_only = false;
};

// Teacher seats per game: the landlord for DouDizhu, team 0 for GuanDan,
// seat 0 otherwise. Matches rotate the dealer, not the teacher seat.
std::vector<std::string> seat_bindings(Game game, const Options& o) {
  if (!o.seats.empty()) {
    if (static_cast<int>(o.seats.size()) != cardlab::num_seats(game)) {
      throw cardlab::UsageError("--seats needs " + std::to_string(cardlab::num_seats(game)) +
                                " bindings");
    }
    return o.seats;
  }
  switch (game) {
    case Game::kDouDizhu: return {o.teacher, o.opponent, o.opponent};
    case Game::kGuanDan: return {o.teacher, o.opponent, o.teacher, o.opponent};
    default: return {o.teacher, o.opponent};
  }
}

cardlab::EndpointOptions endpoint_options(const Options& o) {
  return cardlab::EndpointOptions{o.timeout_ms, o.retries};
}

int run_gen(const Options& o) {
  cardlab::MatchupSpec spec;
  spec.game = cardlab::parse_game(o.game);
  spec.seats = seat_bindings(spec.game, o);
  spec.games = o.games;
  spec.seed = o.seed;
  spec.guandan_full_match = !o.single_deal;
  std::vector<std::unique_ptr<cardlab::Policy>> owned;
  std::vector<cardlab::Policy*> seats;
  for (const auto& b : spec.seats) {
    owned.push_back(cardlab::make_policy(b, spec.game, endpoint_options(o)));
    seats.push_back(owned.back().get());
  }
  Sink out(o.out);
  cardlab::generate(spec, seats, out.get(), o.workers);
  return 0;
}

int run_filter(const Options& o) {
  Source in(o.in);
  Sink out(o.out);
  const auto c = cardlab::filter_samples(in.get(), out.get());
  std::cerr << "steps " << c.steps_in << ", kept " << c.kept << '\n';
  return 0;
}

int run_render(const Options& o) {
  Source in(o.in);
  Sink out(o.out);
  out.get() << Json{{"manifest", {{"kind", "sft"},
                                  {"tool", cardlab::kToolVersion},
                                  {"source", o.in}}}}.dump()
            << '\n';
  const auto n = cardlab::emit_sft(in.get(), out.get());
  std::cerr << "rendered " << n << " samples\n";
  return 0;
}

// Game of a sample or SFT record line.
Game record_game(const std::string& line) {
  const Json j = Json::parse(line, nullptr, false);
  if (j.is_object()) {
    if (j.contains("game") && j["game"].is_string()) return cardlab::parse_game(j["game"].get<std::string>());
    if (j.contains("metadata") && j["metadata"].contains("game")) {
      return cardlab::parse_game(j["metadata"]["game"].get<std::string>());
    }
  }
  throw cardlab::MalformedRecord("record without a game: " + line.substr(0, 80));
}

int run_mix(const Options& o) {
  std::string text = o.spec.empty() ? "" : slurp(o.spec);
  if (!o.counts.empty()) {
    std::string c = o.counts;
    for (char& ch : c) if (ch == ',') ch = '\n';
    text += "\n" + c;
  }
  const auto counts = cardlab::parse_mix_spec(text);
  if (counts.empty()) throw cardlab::UsageError("mix needs --spec or --counts");
  std::map<Game, std::vector<std::string>> pools;
  // Opaque pools, e.g. an externally filtered mahjong file: GAME=PATH.
  for (const auto& p : o.pools) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw cardlab::UsageError("--pool wants GAME=PATH");
    Source src(p.substr(eq + 1));
    auto lines = cardlab::read_pool(src.get());
    auto& pool = pools[cardlab::parse_game(p.substr(0, eq))];
    pool.insert(pool.end(), lines.begin(), lines.end());
  }
  for (const auto& path : o.inputs) {
    Source src(path);
    for (auto& line : cardlab::read_pool(src.get())) {
      const Game g = record_game(line);
      pools[g].push_back(std::move(line));
    }
  }
  const auto mixed = cardlab::mix_records(counts, pools, o.seed);
  Json req = Json::object();
  for (const auto& [g, n] : counts) req[std::string(cardlab::game_name(g))] = n;
  Sink out(o.out);
  out.get() << Json{{"manifest", {{"kind", "mixed"},
                                  {"tool", cardlab::kToolVersion},
                                  {"seed", o.seed},
                                  {"counts", req},
                                  {"inputs", o.inputs},
                                  {"pools", o.pools}}}}.dump()
            << '\n';
  for (const auto& line : mixed) out.get() << line << '\n';
  return 0;
}

int run_stats(const Options& o) {
  Source in(o.in);
  const auto s = cardlab::stats(in.get());
  Sink out(o.out);
  if (!o.json_only) out.get() << s.to_table();
  out.get() << s.to_json().dump() << '\n';
  return 0;
}

int run_train(const Options& o) {
  const Game game = cardlab::parse_game(o.game);
  cardlab::DqnConfig cfg;
  if (!o.model_config.empty()) cfg = cardlab::DqnConfig::from_json(Json::parse(slurp(o.model_config)));
  if (o.steps > 0) cfg.steps = o.steps;
  cardlab::TrainReport report;
  cardlab::DqnModel model{game, cardlab::train_dqn(game, cfg, o.seed, &report), cfg};
  if (o.out.empty() || o.out == "-") throw cardlab::UsageError("train-dqn needs --out");
  cardlab::save_model(o.out, model);
  std::cerr << "steps " << report.steps << ", episodes " << report.episodes << ", updates "
            << report.updates << ", last loss " << report.last_loss << '\n';
  return 0;
}

int run_eval(const Options& o) {
  const Game game = cardlab::parse_game(o.game);
  auto subject = cardlab::make_policy(o.p0, game, endpoint_options(o));
  auto opponent = cardlab::make_policy(o.p1, game, endpoint_options(o));
  const auto rep = cardlab::evaluate(game, *subject, *opponent, o.games, o.seed, o.workers);
  Json j = rep.to_json();
  j["p0"] = o.p0;
  j["p1"] = o.p1;
  j["seed"] = o.seed;
  Sink out(o.out);
  out.get() << j.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  Options o;
  CLI::App app{"cardlab: card game engines and an instruction data pipeline"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cardlab::kToolVersion));
  app.add_option("--config", "plain 'key = value' file; flags override it");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--workers", o.workers, "worker threads (env CARDLAB_WORKERS)");
  };

  auto* gen = app.add_subcommand("gen", "play matches and write trajectories");
  gen->add_option("--game", o.game)->required();
  gen->add_option("--games", o.games);
  gen->add_option("--seed", o.seed);
  gen->add_option("--teacher", o.teacher, "binding for the teacher seats");
  gen->add_option("--opponent", o.opponent, "binding for the other seats");
  gen->add_option("--seats", o.seats, "one binding per seat, overrides teacher/opponent");
  gen->add_flag("--single-deal", o.single_deal, "guandan: one deal per match");
  gen->add_option("--timeout-ms", o.timeout_ms);
  gen->add_option("--retries", o.retries);
  gen->add_option("--out", o.out);
  common(gen);

  auto* filter = app.add_subcommand("filter", "keep winner steps with a real choice");
  filter->add_option("--in", o.in)->required();
  filter->add_option("--out", o.out);

  auto* render = app.add_subcommand("render", "turn samples into instruction/output pairs");
  render->add_option("--in", o.in)->required();
  render->add_option("--out", o.out);

  auto* mix = app.add_subcommand("mix", "sample a per-game mixture");
  mix->add_option("--spec", o.spec, "file of 'game = count' lines");
  mix->add_option("--counts", o.counts, "inline 'game=count,...'");
  mix->add_option("--in", o.inputs, "sample or sft files");
  mix->add_option("--pool", o.pools, "GAME=PATH for an opaque pool");
  mix->add_option("--seed", o.seed);
  mix->add_option("--out", o.out);

  auto* st = app.add_subcommand("stats", "trajectory statistics");
  st->add_option("--in", o.in)->required();
  st->add_option("--out", o.out);
  st->add_flag("--json", o.json_only, "JSON line only");

  auto* train = app.add_subcommand("train-dqn", "train a DQN poker teacher");
  train->add_option("--game", o.game)->required();
  train->add_option("--seed", o.seed);
  train->add_option("--steps", o.steps, "agent decisions");
  train->add_option("--model-config", o.model_config, "JSON DqnConfig");
  train->add_option("--out", o.out)->required();

  auto* ev = app.add_subcommand("eval", "evaluate p0 against p1");
  ev->add_option("--game", o.game)->required();
  ev->add_option("--p0", o.p0);
  ev->add_option("--p1", o.p1);
  ev->add_option("--games", o.games);
  ev->add_option("--seed", o.seed);
  ev->add_option("--timeout-ms", o.timeout_ms);
  ev->add_option("--retries", o.retries);
  ev->add_option("--out", o.out);
  common(ev);

  try {
    args = apply_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every other parse failure is a usage error.
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const cardlab::Error& e) {
    std::cerr << "cardlab: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (o.workers < 1) throw cardlab::UsageError("--workers must be positive");
    if (*gen) return run_gen(o);
    if (*filter) return run_filter(o);
    if (*render) return run_render(o);
    if (*mix) return run_mix(o);
    if (*st) return run_stats(o);
    if (*train) return run_train(o);
    if (*ev) return run_eval(o);
  } catch (const cardlab::UsageError& e) {
    std::cerr << "cardlab: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const cardlab::Error& e) {
    std::cerr << "cardlab: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "cardlab: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
