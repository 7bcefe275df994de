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

#ifndef CARDLAB_PIPELINE_H_
#define CARDLAB_PIPELINE_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cardlab/trajectory.h"

namespace cardlab {

inline constexpr const char* kToolVersion = "cardlab 0.1.0";

struct MatchupSpec {
  Game game = Game::kLeduc;
  std::vector<std::string> seats;  // policy binding per seat
  std::uint64_t games = 0;
  Seed seed = 0;
  bool guandan_full_match = true;
};

Json manifest_json(const MatchupSpec& spec);

// Plays spec.games matches and writes the manifest line, then per match a
// header and its step records, in match order. `workers` <= 1 runs the
// serial reference; larger values split matches across OpenMP threads with
// byte-identical output. Policies that are not concurrent force serial.
void generate(const MatchupSpec& spec, const std::vector<Policy*>& seats,
              std::ostream& out, int workers);

// Runs matches without recording observations; returns them in order.
std::vector<MatchRecord> play_matches(Game game, Seed seed,
                                      std::uint64_t first, std::uint64_t count,
                                      const std::vector<Policy*>& seats,
                                      int workers, bool guandan_full_match = true);

// True for a step that survives filtering.
bool keep_step(const Json& step);

struct FilterCounts {
  std::uint64_t steps_in = 0;
  std::uint64_t kept = 0;
};

// Keeps winner steps with more than one legal action. The manifest keeps
// the original source so filtering twice changes nothing. Throws
// MalformedRecord with the line number.
FilterCounts filter_samples(std::istream& in, std::ostream& out);

// "game = count" lines; blank lines and '#' comments are ignored.
std::vector<std::pair<Game, std::uint64_t>> parse_mix_spec(std::string_view text);

// Samples counts[g] records from pools[g] without replacement, then shuffles
// the union. Pool entries are raw JSON lines. Throws InsufficientPool.
std::vector<std::string> mix_records(
    const std::vector<std::pair<Game, std::uint64_t>>& counts,
    const std::map<Game, std::vector<std::string>>& pools, Seed seed);

// Record lines of a sample file (manifest and headers dropped).
std::vector<std::string> read_pool(std::istream& in);

struct MatchStats {
  Game game = Game::kLeduc;
  int players = 2;
  std::uint64_t games = 0;
  std::uint64_t steps = 0;
  std::uint64_t retained = 0;
  std::uint64_t legal_total = 0;
  std::uint64_t retained_legal_total = 0;

  double avg_steps() const { return games ? double(steps) / games : 0.0; }
  double avg_steps_per_player() const { return avg_steps() / players; }
  // Over every decision, and over the retained (training) steps only.
  double avg_legal() const { return steps ? double(legal_total) / steps : 0.0; }
  double avg_legal_retained() const {
    return retained ? double(retained_legal_total) / retained : 0.0;
  }

  void add(const MatchRecord& m);
  Json to_json() const;
  std::string to_table() const;
};

// Statistics of a trajectory file. Throws MalformedRecord.
MatchStats stats(std::istream& in);

}  // namespace cardlab

#endif  // CARDLAB_PIPELINE_H_
