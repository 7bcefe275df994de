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

#ifndef CARDLAB_ACTION_CODEC_H_
#define CARDLAB_ACTION_CODEC_H_

#include <string>
#include <string_view>

#include "cardlab/actions.h"
#include "cardlab/game_id.h"
#include "json.hpp"

namespace cardlab {

// JSON text with ", " and ": " separators, as in {"action": [3, 3, 3]}.
// Non-ASCII characters are written as UTF-8.
std::string py_dump(const nlohmann::ordered_json& value);

// The value under the "action" key for one game's wire format.
nlohmann::ordered_json action_value(Game game, const Action& action);

// Throws UnknownAction for values outside the game's vocabulary and
// SchemaMismatch for values of the wrong JSON type.
Action action_from_value(Game game, const nlohmann::ordered_json& value);

// {"action": ...}
std::string encode_action(Game game, const Action& action);

// Throws ParseError on malformed JSON, SchemaMismatch when the "action" key
// is missing or mistyped, UnknownAction for unknown values.
Action decode_action(Game game, std::string_view text);

}  // namespace cardlab

#endif  // CARDLAB_ACTION_CODEC_H_
