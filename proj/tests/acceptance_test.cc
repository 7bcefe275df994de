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

// Acceptance run: one PASS/FAIL line per criterion. With arguments, runs
// only the listed criteria. Exit status is nonzero if any line fails.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cardlab/action_codec.h"
#include "cardlab/agents.h"
#include "cardlab/dqn.h"
#include "cardlab/game.h"
#include "cardlab/guandan.h"
#include "cardlab/harness.h"
#include "cardlab/pipeline.h"
#include "cardlab/poker.h"
#include "cardlab/prompts.h"
#include "support.h"

#ifndef CARDLAB_GOLDEN_DIR
#error "CARDLAB_GOLDEN_DIR must point at tests/golden"
#endif

namespace cardlab {
namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

int workers() { return omp_get_max_threads(); }

// ---- 1: engine properties --------------------------------------------------------------

int step_bound(Game g) {
  switch (g) {
    case Game::kDouDizhu: return 200;
    case Game::kGuanDan: return 600;  // per deal
    case Game::kUno: return 2000;
    case Game::kGinRummy: return 120;
    default: return 30;
  }
}

Verdict engine_properties() {
  const auto t0 = Clock::now();
  Verdict v;
  std::ostringstream notes;
  for (Game game : kEngineGames) {
    const auto deck = testing::sorted(build_deck(game).cards);
    const int bound = step_bound(game);
    std::uint64_t games = 0, steps_total = 0, applied = 0;
    std::string failure;
    for (Seed seed = 0; seed < 100 && failure.empty(); ++seed) {
      for (std::uint64_t j = 0; j < 100 && failure.empty(); ++j) {
        const std::string where = std::string(game_name(game)) + " seed " +
                                  std::to_string(seed) + " game " + std::to_string(j);
        // GuanDan: one full match per seed, single deals otherwise.
        const bool full = game != Game::kGuanDan || j == 0;
        auto state = reset(game, derive_seed(seed, j), GameOptions{j, full});
        Rng rng(derive_seed(seed, j + 0x9e37));
        int steps = 0;
        try {
          while (!state->is_terminal()) {
            const auto legal = state->legal_actions();
            if (legal.empty()) throw Error("empty legal set");
            auto copy = legal;
            std::sort(copy.begin(), copy.end());
            if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
              throw Error("duplicate legal action");
            // Every legal action applies cleanly.
            for (const Action& a : legal) {
              auto branch = state->clone();
              branch->apply(a);
              ++applied;
            }
            state->apply(legal[rng.uniform(legal.size())]);
            ++steps;
            if (testing::sorted(state->all_cards()) != deck) throw Error("cards not conserved");
            const int in_bound = game == Game::kGuanDan
                                     ? static_cast<const GuanDanState&>(*state).deal_steps()
                                     : steps;
            if (in_bound > bound) throw Error("step bound exceeded");
          }
          state->payoffs();
        } catch (const std::exception& e) {
          failure = where + ": " + e.what();
          break;
        }
        // Determinism: the same seeds replay to the same final state.
        const auto replay = testing::random_playout(game, seed, j, full);
        if (replay->fingerprint() != state->fingerprint()) {
          failure = where + ": replay diverged";
        }
        ++games;
        steps_total += static_cast<std::uint64_t>(steps);
      }
    }
    if (!failure.empty()) {
      v.pass = false;
      notes << " [" << failure << "]";
    } else {
      notes << ' ' << game_name(game) << '=' << games << "g/" << steps_total << "s/"
            << applied << "a";
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 300) v.pass = false;
  v.detail = fmt(secs, 1) + " s (limit 300);" + notes.str();
  return v;
}

// ---- 2: data generation bands ---------------------------------------------------------

struct Band {
  std::string label;
  double measured;
  double target;
  double tolerance;  // relative
  bool ok() const { return std::abs(measured - target) <= tolerance * target; }
};

MatchStats run_stats(Game game, std::uint64_t n, Seed seed, std::vector<Policy*> seats) {
  MatchStats st;
  st.game = game;
  st.players = num_seats(game);
  for (const auto& m : play_matches(game, seed, 0, n, seats, workers(), false)) st.add(m);
  return st;
}

Verdict table_bands() {
  RulePolicy rule;
  RandomPolicy random;
  std::vector<Band> bands;
  std::ostringstream extra;

  const auto uno = run_stats(Game::kUno, 50000, 101, {&rule, &random});
  bands.push_back({"uno steps", uno.avg_steps(), 42.33, 0.15});
  bands.push_back({"uno legal", uno.avg_legal_retained(), 3.14, 0.15});
  extra << " uno legal over all steps " << fmt(uno.avg_legal()) << ';';

  const auto gin = run_stats(Game::kGinRummy, 5000, 102, {&rule, &random});
  bands.push_back({"gin steps", gin.avg_steps(), 52.14, 0.20});
  bands.push_back({"gin legal", gin.avg_legal_retained(), 6.22, 0.20});
  extra << " gin legal over all steps " << fmt(gin.avg_legal()) << ';';

  const std::pair<Game, std::pair<double, double>> poker[] = {
      {Game::kLeduc, {3.61, 2.86}}, {Game::kLimit, {5.01, 2.96}}, {Game::kNoLimit, {3.78, 4.31}}};
  for (const auto& [game, target] : poker) {
    auto model = std::make_shared<DqnModel>();
    model->game = game;
    model->net = train_dqn(game, model->config, 7);
    DqnPolicy teacher(model);
    const auto st = run_stats(game, 10000, 103, {&teacher, &random});
    const std::string name(game_name(game));
    bands.push_back({name + " steps", st.avg_steps(), target.first, 0.25});
    bands.push_back({name + " legal", st.avg_legal_retained(), target.second, 0.25});
    extra << ' ' << name << " legal over all steps " << fmt(st.avg_legal()) << ';';
  }

  const auto dou = run_stats(Game::kDouDizhu, 10000, 104, {&rule, &rule, &rule});
  const double dl = dou.avg_legal_retained();
  extra << " doudizhu legal over all steps " << fmt(dou.avg_legal()) << ';';

  Verdict v;
  std::ostringstream os;
  for (const auto& b : bands) {
    os << ' ' << b.label << ' ' << fmt(b.measured) << (b.ok() ? "" : " (OUT, target ")
       << (b.ok() ? "" : fmt(b.target, 2) + ")") << ';';
    v.pass = v.pass && b.ok();
  }
  const bool dou_ok = dl >= 6 && dl <= 14;
  os << " doudizhu rule-vs-rule legal " << fmt(dl) << (dou_ok ? "" : " (OUT of [6, 14])") << ';';
  v.pass = v.pass && dou_ok;
  v.detail = os.str() + extra.str();
  return v;
}

// ---- 3: hand evaluator ------------------------------------------------------------------

Verdict hand_evaluator() {
  const auto t0 = Clock::now();
  const auto deck = build_deck(Game::kLimit).cards;
  std::array<std::uint64_t, 10> counts{};
  std::uint64_t hands = 0, mismatches = 0;
  std::array<Card, 5> h;
  for (int a = 0; a < 52; ++a)
    for (int b = a + 1; b < 52; ++b)
      for (int c = b + 1; c < 52; ++c)
        for (int d = c + 1; d < 52; ++d)
          for (int e = d + 1; e < 52; ++e) {
            h = {deck[a], deck[b], deck[c], deck[d], deck[e]};
            const HandRank got = evaluate_five(h);
            const auto want = testing::naive_five(h);
            ++counts[want.category];
            ++hands;
            if (static_cast<int>(got.category) != want.category || got.tiebreak() != want.key)
              ++mismatches;
          }
  const bool table_ok = counts == testing::kFiveCardFrequencies;
  const auto serial = five_card_census_serial();
  const auto parallel = five_card_census_parallel();
  const bool census_ok = serial == testing::kFiveCardFrequencies && parallel == serial;
  const double secs = seconds_since(t0);
  Verdict v;
  v.pass = hands == 2598960 && mismatches == 0 && table_ok && census_ok && secs < 60;
  v.detail = std::to_string(hands) + " hands, " + std::to_string(mismatches) +
             " mismatches; frequency table " + (table_ok ? "exact" : "WRONG") +
             "; census serial/parallel " + (census_ok ? "exact" : "WRONG") + "; " +
             fmt(secs, 1) + " s (limit 60)";
  return v;
}

// ---- 4: Leduc exactness ---------------------------------------------------------------------

char leduc_rank(const Card& c) { return rank_char(c.rank()); }

std::vector<std::string> legal_names(const State& s) {
  std::vector<std::string> out;
  for (const auto& a : s.legal_actions())
    out.push_back(action_value(Game::kLeduc, a).get<std::string>());
  std::sort(out.begin(), out.end());
  return out;
}

// Walks engine and oracle together; returns mismatching nodes.
std::uint64_t compare_tree(const LeducState& s, const testing::LeducNode& n, std::uint64_t& nodes) {
  ++nodes;
  std::uint64_t bad = 0;
  if (s.is_terminal() != n.terminal) return 1;
  if (s.committed(0) != n.chips[0] || s.committed(1) != n.chips[1]) ++bad;
  if (n.terminal) {
    const auto p = s.payoffs();
    return bad + (p[0] != n.payoff[0] || p[1] != n.payoff[1] ? 1 : 0);
  }
  if (s.current_seat() != n.actor || legal_names(s) != n.legal) return bad + 1;
  for (const auto& a : s.legal_actions()) {
    LeducState child = s;
    child.apply(a);
    const auto name = action_value(Game::kLeduc, a).get<std::string>();
    bad += compare_tree(child, n.children.at(name), nodes);
  }
  return bad;
}

Verdict leduc_exactness() {
  const auto deck = build_deck(Game::kLeduc).cards;
  std::uint64_t nodes = 0, oracle_nodes = 0, bad = 0, deals = 0;
  double ev = 0.0;
  for (int dealer = 0; dealer < 2; ++dealer)
    for (std::size_t a = 0; a < deck.size(); ++a)
      for (std::size_t b = 0; b < deck.size(); ++b)
        for (std::size_t c = 0; c < deck.size(); ++c) {
          if (a == b || a == c || b == c) continue;
          ++deals;
          const LeducState root(deck[a], deck[b], deck[c], dealer);
          const auto oracle = testing::leduc_oracle(leduc_rank(deck[a]), leduc_rank(deck[b]),
                                                    leduc_rank(deck[c]), dealer);
          oracle_nodes += testing::count_nodes(oracle);
          bad += compare_tree(root, oracle, nodes);
          // Always call (check when not facing a bet).
          LeducState s = root;
          while (!s.is_terminal()) {
            const auto legal = s.legal_actions();
            const Action call = BetAction::kCall;
            s.apply(std::find(legal.begin(), legal.end(), call) != legal.end()
                        ? call
                        : Action{BetAction::kCheck});
          }
          ev += s.payoffs()[0];
        }
  Verdict v;
  v.pass = bad == 0 && nodes == oracle_nodes && ev == 0.0;
  v.detail = std::to_string(deals) + " deals, " + std::to_string(nodes) + " engine nodes vs " +
             std::to_string(oracle_nodes) + " oracle nodes, " + std::to_string(bad) +
             " mismatches; always-call EV " + fmt(ev, 6);
  return v;
}

// ---- 5: filtering ---------------------------------------------------------------------------

std::string filter_text(const std::string& in, FilterCounts* counts = nullptr) {
  std::istringstream is(in);
  std::ostringstream os;
  const auto c = filter_samples(is, os);
  if (counts) *counts = c;
  return os.str();
}

std::uint64_t count_records(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::uint64_t n = 0;
  while (std::getline(is, line))
    if (!line.empty() && line.find("\"manifest\"") == std::string::npos) ++n;
  return n;
}

// Trajectory text for a small rule-vs-random run of every engine game.
// GuanDan runs single deals here so that header payoffs name the deal's
// winners.
std::string small_corpus(Game game, std::uint64_t games) {
  RulePolicy rule;
  RandomPolicy random;
  MatchupSpec spec;
  spec.game = game;
  spec.games = games;
  spec.seed = 500 + static_cast<Seed>(game);
  spec.guandan_full_match = false;
  std::vector<Policy*> seats;
  for (int s = 0; s < num_seats(game); ++s) {
    seats.push_back(s % 2 == 0 ? static_cast<Policy*>(&rule) : &random);
    spec.seats.push_back(s % 2 == 0 ? "rule" : "random");
  }
  std::ostringstream os;
  generate(spec, seats, os, workers());
  return os.str();
}

Verdict filtering() {
  Verdict v;
  FilterCounts fc;
  const std::string once = filter_text(testing::filter_fixture(), &fc);
  const bool exact = fc.kept == testing::kFilterFixtureKept &&
                     count_records(once) == testing::kFilterFixtureKept;
  const bool idem_fixture = filter_text(once) == once;

  // Corpus scan: every kept step's seat has a positive payoff in its match.
  std::uint64_t kept = 0, losers = 0, forced = 0;
  bool idem_corpus = true;
  for (Game game : kEngineGames) {
    const std::string traj = small_corpus(game, game == Game::kGuanDan ? 40 : 300);
    const std::string out = filter_text(traj);
    idem_corpus = idem_corpus && filter_text(out) == out;
    std::map<std::uint64_t, Json> payoffs;
    std::istringstream ts(traj);
    std::string line;
    while (std::getline(ts, line)) {
      const Json j = Json::parse(line);
      if (j.contains("payoffs")) payoffs[j["match_id"].get<std::uint64_t>()] = j["payoffs"];
    }
    std::istringstream os(out);
    while (std::getline(os, line)) {
      const Json j = Json::parse(line);
      if (j.contains("manifest")) continue;
      ++kept;
      const int seat = j["seat"].get<int>();
      if (payoffs.at(j["match_id"].get<std::uint64_t>())[seat].get<double>() <= 0) ++losers;
      if (j["legal"].size() < 2) ++forced;
    }
  }
  v.pass = exact && idem_fixture && idem_corpus && losers == 0 && forced == 0 && kept > 0;
  v.detail = "fixture kept " + std::to_string(fc.kept) + " (expected " +
             std::to_string(testing::kFilterFixtureKept) + "); idempotent " +
             (idem_fixture && idem_corpus ? "yes" : "NO") + "; corpus scan " +
             std::to_string(kept) + " samples, " + std::to_string(losers) +
             " loser steps, " + std::to_string(forced) + " single-option steps";
  return v;
}

// ---- 6: prompt fidelity ---------------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Verdict prompt_fidelity() {
  Verdict v;
  std::ostringstream os;
  int golden_ok = 0;
  for (const auto& c : testing::golden_cases()) {
    const std::string want = read_file(std::string(CARDLAB_GOLDEN_DIR) + "/" + c.name + ".txt");
    const std::string got = render(testing::golden_observation(c));
    if (!want.empty() && want == got) {
      ++golden_ok;
    } else {
      os << " golden " << c.name << " differs;";
    }
  }
  const int golden_total = static_cast<int>(testing::golden_cases().size());

  // Codec round trip over 10k legal actions per game.
  std::uint64_t fuzzed = 0, codec_bad = 0;
  for (Game game : kEngineGames) {
    std::uint64_t n = 0;
    for (std::uint64_t j = 0; n < 10000; ++j) {
      auto state = reset(game, derive_seed(606, j), GameOptions{j, false});
      Rng rng(derive_seed(607, j));
      while (!state->is_terminal() && n < 10000) {
        const auto legal = state->legal_actions();
        for (const Action& a : legal) {
          if (n == 10000) break;
          ++n;
          try {
            const std::string text = encode_action(game, a);
            if (decode_action(game, text) != a) ++codec_bad;
            if (action_from_value(game, Json::parse(text)["action"]) != a) ++codec_bad;
          } catch (const std::exception&) {
            ++codec_bad;
          }
        }
        state->apply(legal[rng.uniform(legal.size())]);
      }
    }
    fuzzed += n;
  }

  // Every SFT output is one of its instruction's legal actions.
  std::uint64_t sft = 0, uncontained = 0;
  for (Game game : kEngineGames) {
    std::istringstream traj(small_corpus(game, game == Game::kGuanDan ? 10 : 100));
    std::stringstream samples, records;
    filter_samples(traj, samples);
    emit_sft(samples, records);
    std::string line;
    while (std::getline(records, line)) {
      const Json r = Json::parse(line);
      ++sft;
      if (!sft_output_contained(game, r["instruction"].get<std::string>(),
                                r["output"].get<std::string>()))
        ++uncontained;
    }
  }
  v.pass = golden_ok == golden_total && codec_bad == 0 && uncontained == 0 && sft > 0;
  v.detail = "goldens " + std::to_string(golden_ok) + "/" + std::to_string(golden_total) +
             " byte-identical;" + os.str() + " codec round trip " + std::to_string(fuzzed) +
             " actions, " + std::to_string(codec_bad) + " failures; SFT " + std::to_string(sft) +
             " records, " + std::to_string(uncontained) + " outputs outside the legal list";
  return v;
}

// ---- 7: mixing ------------------------------------------------------------------------------

Verdict mixing() {
  const std::string request =
      "doudizhu = 700\nguandan = 950\nmahjong = 650\nuno = 200\n"
      "gin_rummy = 50\nleduc = 250\nlimit = 200\nnolimit = 100\n";
  const auto counts = parse_mix_spec(request);
  std::map<Game, std::vector<std::string>> pools;
  for (const auto& [game, n] : counts) {
    for (std::uint64_t i = 0; i < n + 137; ++i) {
      pools[game].push_back(Json{{"instruction", "x"},
                                 {"output", "y"},
                                 {"metadata", {{"game", game_name(game)}, {"id", i}}}}
                                .dump());
    }
  }
  const auto mixed = mix_records(counts, pools, 2026);
  std::map<std::string, std::uint64_t> histogram;
  std::set<std::string> distinct(mixed.begin(), mixed.end());
  for (const auto& line : mixed)
    ++histogram[Json::parse(line)["metadata"]["game"].get<std::string>()];
  bool exact = mixed.size() == 3100 && distinct.size() == mixed.size();
  std::ostringstream os;
  for (const auto& [game, n] : counts) {
    const auto got = histogram[std::string(game_name(game))];
    exact = exact && got == n;
    os << ' ' << game_name(game) << '=' << got;
  }
  const auto again = mix_records(counts, pools, 2026);
  Verdict v;
  v.pass = exact && again == mixed;
  v.detail = std::to_string(mixed.size()) + " records, " + std::to_string(distinct.size()) +
             " distinct;" + os.str() + (again == mixed ? "; reproducible" : "; NOT reproducible");
  return v;
}

// ---- 8: DQN ---------------------------------------------------------------------------------

Verdict dqn() {
  DqnConfig cfg;
  TrainReport report;
  auto model = std::make_shared<DqnModel>();
  model->game = Game::kLeduc;
  model->config = cfg;
  model->net = train_dqn(Game::kLeduc, cfg, 8, &report);
  DqnPolicy teacher(model);
  RandomPolicy random;
  const auto rep = evaluate(Game::kLeduc, teacher, random, 10000, 808, workers());

  // Gradient check on a random 11-16-16-4 network.
  Rng rng(88);
  Mlp net({11, 16, 16, 4}, rng);
  std::vector<double> x(11);
  for (double& xi : x) xi = rng.uniform_real() * 2 - 1;
  const int a = 2;
  const double target = 0.7;
  std::vector<double> grad(net.params().size(), 0.0);
  net.td_loss_grad(x, a, target, grad);
  double diff2 = 0, g2 = 0, f2 = 0;
  const double h = 1e-6;
  for (std::size_t i = 0; i < grad.size(); ++i) {
    const double keep = net.params()[i];
    net.params()[i] = keep + h;
    const double up = net.td_loss(x, a, target);
    net.params()[i] = keep - h;
    const double down = net.td_loss(x, a, target);
    net.params()[i] = keep;
    const double fd = (up - down) / (2 * h);
    diff2 += (fd - grad[i]) * (fd - grad[i]);
    g2 += grad[i] * grad[i];
    f2 += fd * fd;
  }
  const double rel = std::sqrt(diff2) / std::max({std::sqrt(g2), std::sqrt(f2), 1e-12});
  Verdict v;
  v.pass = report.steps <= 200000 && rep.value >= 0.5 && rel <= 1e-3;
  v.detail = "trained " + std::to_string(report.steps) + " steps; mean reward vs random " +
             fmt(rep.value, 4) + " +/- " + fmt(rep.std_error, 4) + " over 10000 hands (need >= 0.5); "
             "gradient relative error " + std::to_string(rel) + " (limit 1e-3)";
  return v;
}

// ---- 9: harness -----------------------------------------------------------------------------

Verdict harness() {
  RulePolicy rule;
  RandomPolicy random;
  const Seed seed = 909;
  const auto rep = evaluate(Game::kDouDizhu, rule, random, 1000, seed, workers());
  // Role rates recomputed from the raw matches.
  const auto lord = play_matches(Game::kDouDizhu, seed, 0, 500, {&rule, &random, &random}, workers());
  const auto farm = play_matches(Game::kDouDizhu, seed, 500, 500, {&random, &rule, &rule}, workers());
  double lw = 0, fw = 0;
  for (const auto& m : lord) lw += m.winner_side == "landlord";
  for (const auto& m : farm) fw += m.winner_side == "farmers";
  const double mean = (lw / 500 + fw / 500) / 2;
  const bool roles_ok = rep.landlord_games == 500 && rep.farmer_games == 500 &&
                        rep.landlord_rate == lw / 500 && rep.farmer_rate == fw / 500;
  const bool mean_ok = std::abs(rep.value - mean) <= 1e-15;

  std::ostringstream os;
  bool fair = true;
  for (Game game : {Game::kUno, Game::kGinRummy, Game::kLeduc, Game::kLimit, Game::kNoLimit}) {
    RandomPolicy p0, p1;
    const auto r = evaluate(game, p0, p1, 10000, 990 + static_cast<Seed>(game), workers());
    const double z = r.std_error > 0 ? r.value / r.std_error : 0.0;
    const bool ok = std::abs(z) <= 3.0 && r.fallbacks == 0;
    fair = fair && ok;
    os << ' ' << game_name(game) << ' ' << fmt(r.value, 4) << " (z " << fmt(z, 2) << ')'
       << (ok ? "" : " OUT") << ';';
  }
  Verdict v;
  v.pass = roles_ok && mean_ok && fair;
  v.detail = "doudizhu landlord " + fmt(rep.landlord_rate) + " (" +
             std::to_string(rep.landlord_games) + "), farmer " + fmt(rep.farmer_rate) + " (" +
             std::to_string(rep.farmer_games) + "), overall " + fmt(rep.value, 6) + " vs mean " +
             fmt(mean, 6) + (roles_ok && mean_ok ? "" : " MISMATCH") + "; random vs random:" +
             os.str();
  return v;
}

}  // namespace
}  // namespace cardlab

int main(int argc, char** argv) {
  using cardlab::Verdict;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"engine properties", cardlab::engine_properties},
      {"data generation bands", cardlab::table_bands},
      {"hand evaluator", cardlab::hand_evaluator},
      {"leduc exactness", cardlab::leduc_exactness},
      {"filtering", cardlab::filtering},
      {"prompt fidelity", cardlab::prompt_fidelity},
      {"mixing", cardlab::mixing},
      {"dqn", cardlab::dqn},
      {"harness", cardlab::harness},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << id << " (" << criteria[i].first << "): "
              << (v.pass ? "PASS" : "FAIL") << " - " << v.detail << std::endl;
    failures += v.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
