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

#ifndef CARDLAB_GAME_ID_H_
#define CARDLAB_GAME_ID_H_

#include <array>
#include <string>
#include <string_view>

namespace cardlab {

// The eight games of the suite. Mahjong exists only as a dataset label:
// no engine is provided for it.
enum class Game {
  kDouDizhu,
  kGuanDan,
  kMahjong,
  kUno,
  kGinRummy,
  kLeduc,
  kLimit,
  kNoLimit,
};

inline constexpr std::array<Game, 8> kAllGames = {
    Game::kDouDizhu, Game::kGuanDan, Game::kMahjong, Game::kUno,
    Game::kGinRummy, Game::kLeduc,   Game::kLimit,   Game::kNoLimit};

// Games with an engine.
inline constexpr std::array<Game, 7> kEngineGames = {
    Game::kDouDizhu, Game::kGuanDan, Game::kUno,    Game::kGinRummy,
    Game::kLeduc,    Game::kLimit,   Game::kNoLimit};

std::string_view game_name(Game game);

// Accepts the canonical names plus a few aliases ("gin", "nl", ...).
// Throws UnsupportedGame for anything else.
Game parse_game(std::string_view name);

int num_seats(Game game);

inline bool is_poker(Game g) {
  return g == Game::kLeduc || g == Game::kLimit || g == Game::kNoLimit;
}

}  // namespace cardlab

#endif  // CARDLAB_GAME_ID_H_
