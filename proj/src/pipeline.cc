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

#include "cardlab/pipeline.h"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace cardlab {

Json manifest_json(const MatchupSpec& spec) {
  Json m{{"kind", "trajectory"},
         {"tool", kToolVersion},
         {"game", std::string(game_name(spec.game))},
         {"games", spec.games},
         {"seed", spec.seed},
         {"seats", spec.seats}};
  if (spec.game == Game::kGuanDan) m["guandan_full_match"] = spec.guandan_full_match;
  return Json{{"manifest", m}};
}

namespace {

bool all_concurrent(const std::vector<Policy*>& seats) {
  return std::all_of(seats.begin(), seats.end(),
                     [](const Policy* p) { return p->concurrent(); });
}

constexpr std::uint64_t kBlock = 256;

}  // namespace

void generate(const MatchupSpec& spec, const std::vector<Policy*>& seats,
              std::ostream& out, int workers) {
  out << manifest_json(spec).dump() << '\n';
  MatchOptions opts{true, spec.guandan_full_match};
  if (workers <= 1 || !all_concurrent(seats)) {
    for (std::uint64_t i = 0; i < spec.games; ++i)
      out << match_lines(play_match(spec.game, spec.seed, i, seats, opts));
    return;
  }
  std::vector<std::string> chunk;
  for (std::uint64_t start = 0; start < spec.games; start += kBlock) {
    const std::uint64_t n = std::min(kBlock, spec.games - start);
    chunk.assign(n, {});
    std::string error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) {
      try {
        chunk[k] = match_lines(play_match(spec.game, spec.seed, start + k, seats, opts));
      } catch (const std::exception& e) {
#pragma omp critical
        if (error.empty()) error = e.what();
      }
    }
    if (!error.empty()) throw Error(error);
    for (const auto& s : chunk) out << s;
  }
}

std::vector<MatchRecord> play_matches(Game game, Seed seed,
                                      std::uint64_t first, std::uint64_t count,
                                      const std::vector<Policy*>& seats,
                                      int workers, bool guandan_full_match) {
  std::vector<MatchRecord> out(count);
  MatchOptions opts{false, guandan_full_match};
  if (workers <= 1 || !all_concurrent(seats)) {
    for (std::uint64_t k = 0; k < count; ++k)
      out[k] = play_match(game, seed, first + k, seats, opts);
    return out;
  }
  std::string error;
#pragma omp parallel for schedule(dynamic, 4) num_threads(workers)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
    try {
      out[k] = play_match(game, seed, first + k, seats, opts);
    } catch (const std::exception& e) {
#pragma omp critical
      if (error.empty()) error = e.what();
    }
  }
  if (!error.empty()) throw Error(error);
  return out;
}

// ---- filter -------------------------------------------------------------------

bool keep_step(const Json& step) {
  return step.at("is_winner").get<bool>() && step.at("legal").size() > 1;
}

namespace {

Json parse_line(const std::string& line, std::uint64_t line_no) {
  Json j = Json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw MalformedRecord("line " + std::to_string(line_no) + ": not a JSON object");
  }
  return j;
}

bool is_step(const Json& j) { return j.contains("step") && j.contains("obs"); }

}  // namespace

FilterCounts filter_samples(std::istream& in, std::ostream& out) {
  FilterCounts counts;
  std::string line;
  std::uint64_t line_no = 0;
  bool manifest_done = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const Json j = parse_line(line, line_no);
    if (j.contains("manifest")) {
      if (manifest_done) continue;
      manifest_done = true;
      const Json& m = j["manifest"];
      Json source = m.value("kind", "") == "samples" && m.contains("source")
                        ? m["source"]
                        : m;
      out << Json{{"manifest", {{"kind", "samples"},
                                {"tool", kToolVersion},
                                {"filter", "is_winner and legal > 1"},
                                {"source", source}}}}
                 .dump()
          << '\n';
      continue;
    }
    if (!is_step(j)) {
      if (j.contains("payoffs")) continue;
      throw MalformedRecord("line " + std::to_string(line_no) + ": neither header nor step");
    }
    ++counts.steps_in;
    bool keep = false;
    try {
      keep = keep_step(j);
    } catch (const std::exception& e) {
      throw MalformedRecord("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (keep) {
      out << line << '\n';
      ++counts.kept;
    }
  }
  return counts;
}

// ---- mix ------------------------------------------------------------------------

std::vector<std::pair<Game, std::uint64_t>> parse_mix_spec(std::string_view text) {
  std::vector<std::pair<Game, std::uint64_t>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) {
      throw ParseError("mix spec line " + std::to_string(line_no) + ": expected 'game = count'");
    }
    const std::string name = trim(line.substr(0, eq));
    const std::string count = trim(line.substr(eq + 1));
    std::uint64_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoull(count, &used);
      if (used != count.size()) throw std::invalid_argument(count);
    } catch (const std::exception&) {
      throw ParseError("mix spec line " + std::to_string(line_no) + ": bad count '" + count + "'");
    }
    out.emplace_back(parse_game(name), n);
  }
  return out;
}

std::vector<std::string> mix_records(
    const std::vector<std::pair<Game, std::uint64_t>>& counts,
    const std::map<Game, std::vector<std::string>>& pools, Seed seed) {
  std::vector<std::pair<Game, std::uint64_t>> ordered = counts;
  std::stable_sort(ordered.begin(), ordered.end(), [](auto a, auto b) {
    return static_cast<int>(a.first) < static_cast<int>(b.first);
  });
  std::vector<std::string> out;
  for (const auto& [game, n] : ordered) {
    if (n == 0) continue;
    const auto it = pools.find(game);
    const std::uint64_t have = it == pools.end() ? 0 : it->second.size();
    if (have < n) {
      throw InsufficientPool(std::string(game_name(game)) + ": requested " +
                             std::to_string(n) + ", pool has " + std::to_string(have) +
                             " (short by " + std::to_string(n - have) + ")");
    }
    // Partial Fisher-Yates over indices.
    std::vector<std::uint64_t> idx(have);
    for (std::uint64_t i = 0; i < have; ++i) idx[i] = i;
    Rng rng(derive_seed(seed, 1 + static_cast<std::uint64_t>(game)));
    for (std::uint64_t i = 0; i < n; ++i) {
      const std::uint64_t j = i + rng.uniform(have - i);
      std::swap(idx[i], idx[j]);
      out.push_back(it->second[idx[i]]);
    }
  }
  Rng rng(derive_seed(seed, 0));
  rng.shuffle(std::span<std::string>(out));
  return out;
}

std::vector<std::string> read_pool(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const Json j = parse_line(line, line_no);
    if (j.contains("manifest") || j.contains("payoffs")) continue;
    out.push_back(line);
  }
  return out;
}

// ---- stats ------------------------------------------------------------------------

void MatchStats::add(const MatchRecord& m) {
  ++games;
  steps += m.legal_sizes.size();
  for (std::size_t i = 0; i < m.legal_sizes.size(); ++i) {
    legal_total += m.legal_sizes[i];
    if (m.winners[i] && m.legal_sizes[i] > 1) {
      ++retained;
      retained_legal_total += m.legal_sizes[i];
    }
  }
}

Json MatchStats::to_json() const {
  return Json{{"game", std::string(game_name(game))},
              {"players", players},
              {"games", games},
              {"avg_steps_per_game", avg_steps()},
              {"avg_steps_per_player", avg_steps_per_player()},
              {"retained_steps", retained},
              {"avg_legal_actions", avg_legal()},
              {"avg_legal_actions_retained", avg_legal_retained()}};
}

std::string MatchStats::to_table() const {
  std::ostringstream os;
  os << std::left << std::setw(28) << "game" << game_name(game) << '\n'
     << std::setw(28) << "players" << players << '\n'
     << std::setw(28) << "games" << games << '\n'
     << std::setw(28) << "avg steps per game" << std::fixed << std::setprecision(2)
     << avg_steps() << '\n'
     << std::setw(28) << "avg steps per player" << avg_steps_per_player() << '\n'
     << std::setw(28) << "retained steps" << retained << '\n'
     << std::setw(28) << "avg legal actions per step" << avg_legal() << '\n'
     << std::setw(28) << "  over retained steps" << avg_legal_retained() << '\n';
  return os.str();
}

MatchStats stats(std::istream& in) {
  MatchStats st;
  bool have_game = false;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const Json j = parse_line(line, line_no);
    if (j.contains("manifest")) continue;
    try {
      if (!have_game) {
        st.game = parse_game(j.at("game").get<std::string>());
        st.players = num_seats(st.game);
        have_game = true;
      }
      if (j.contains("payoffs")) {
        ++st.games;
      } else if (is_step(j)) {
        ++st.steps;
        const std::size_t legal = j.at("legal").size();
        st.legal_total += legal;
        if (keep_step(j)) {
          ++st.retained;
          st.retained_legal_total += legal;
        }
      } else {
        throw MalformedRecord("neither header nor step");
      }
    } catch (const MalformedRecord& e) {
      throw MalformedRecord("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const std::exception& e) {
      throw MalformedRecord("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return st;
}

}  // namespace cardlab
