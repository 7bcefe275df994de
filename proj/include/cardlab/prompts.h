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

#ifndef CARDLAB_PROMPTS_H_
#define CARDLAB_PROMPTS_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cardlab/game.h"

namespace cardlab {

// One fillable line of a template: the label as printed (without trailing
// blanks) and the observation field that fills it.
struct PromptSlot {
  std::string label;
  std::string field;
};

// Verbatim template text. Throws UnsupportedGame for Mahjong.
const std::string& prompt_template(Game game);
const std::vector<PromptSlot>& prompt_slots(Game game);

// Text placed after a slot label. Strings are written raw, null as None,
// histories as "(seat, action), ..." and everything else as JSON.
std::string render_slot_value(std::string_view field, const Json& value);

// Fills every slot. Throws MissingField naming the absent slot.
std::string render(Game game, const Json& fields);
inline std::string render(const Observation& obs) {
  return render(obs.game, obs.fields);
}

// The rendered legal-action text inside an instruction, or empty.
std::string legal_line(Game game, std::string_view instruction);

// {"instruction", "output", "metadata"} for one trajectory step record.
// Throws MalformedRecord when fields are missing.
Json make_sft(const Json& step_record);

// True when the action value of `output` occurs in the instruction's
// legal-action line.
bool sft_output_contained(Game game, std::string_view instruction,
                          std::string_view output);

// Converts a sample file to SFT records; returns the record count. Errors
// carry the input line number.
std::size_t emit_sft(std::istream& in, std::ostream& out);

}  // namespace cardlab

#endif  // CARDLAB_PROMPTS_H_
