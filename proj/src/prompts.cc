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

#include "cardlab/prompts.h"

#include <istream>
#include <map>
#include <ostream>

#include "cardlab/action_codec.h"

namespace cardlab {
namespace {

const std::map<Game, std::string>& templates() {
  static const std::map<Game, std::string> kTemplates = {
#include "prompt_templates.inc"
  };
  return kTemplates;
}

const std::map<Game, std::vector<PromptSlot>>& slots() {
  static const std::map<Game, std::vector<PromptSlot>> kSlots = {
      {Game::kDouDizhu,
       {{"Turn number:", "turn_number"},
        {"1. Your role:", "role"},
        {"2. Your current hand cards:", "hand"},
        {"3. The union of the hand cards of the other two players:",
         "others_hand"},
        {"4. The most recent valid move:", "last_move"},
        {"5. The played cards so far:", "played_cards"},
        {"6. The number of cards left for each player:", "num_cards_left"},
        {"7. The number of bombs played so far:", "bomb_num"},
        {"8. The historical moves:", "history"},
        {"9. The legal actions for the current move:", "legal_actions"}}},
      {Game::kGuanDan,
       {{"1. Your position:", "position"},
        {"2. Your current hand:", "hand"},
        {"3. Remaining cards of other players:", "others_remaining"},
        {"4. Last action of other players:", "last_action_others"},
        {"5. Last action of the teammate:", "last_action_teammate"},
        {"6. Number of cards left for other players:", "num_cards_left"},
        {"7. Cards played by the down player:", "played_down"},
        {"8. Cards played by the teammate:", "played_teammate"},
        {"9. Cards played by the up player:", "played_up"},
        {"10. Self rank:", "self_rank"},
        {"11. Opponent rank:", "opponent_rank"},
        {"12. Current rank:", "current_rank"},
        {"13. Legal actions:", "legal_actions"}}},
      {Game::kUno,
       {{"Current step:", "step"},
        {"1. Your position:", "position"},
        {"2. Your hand:", "hand"},
        {"3. The top card in the Discard Pile:", "top_card"},
        {"4. Played_cards:", "played_cards"},
        {"5. Number of cards left for each player:", "num_cards_left"},
        {"6. History actions of all players:", "history"},
        {"7. Legal actions:", "legal_actions"}}},
      {Game::kGinRummy,
       {{"Current step:", "step"},
        {"1. Your id:", "id"},
        {"2. Your hand cards:", "hand"},
        {"3. Top card in the discard pile:", "top_discard"},
        {"4. Other cards in the discard pile:", "other_discards"},
        {"5. Opponent known cards:", "opponent_known_cards"},
        {"6. Left card number of stock pile:", "stock_count"},
        {"7. History actions of all players:", "history"},
        {"8. Legal actions:", "legal_actions"}}},
      {Game::kLeduc,
       {{"Round number:", "round"},
        {"1. Your position:", "position"},
        {"2. Your hand:", "hand"},
        {"3. Public card  (if in round 2):", "public_card"},
        {"4. Your chips in the pot:", "my_chips"},
        {"5. All chips in the pot:", "all_chips"},
        {"6. Number of raises so far in two rounds:", "raises"},
        {"7. History actions of all players:", "history"},
        {"8. Legal actions:", "legal_actions"}}},
      {Game::kLimit,
       {{"Current betting round:", "round"},
        {"1. Your position:", "position"},
        {"2. Your hole cards:", "hole_cards"},
        {"3. Community cards:", "community_cards"},
        {"4. Your chips in the pot:", "my_chips"},
        {"5. All chips in the pot:", "all_chips"},
        {"6. Number of raises so far in four rounds:", "raises"},
        {"7. History actions of all players:", "history"},
        {"8. Legal actions:", "legal_actions"}}},
      {Game::kNoLimit,
       {{"Current betting round:", "round"},
        {"1. Your position:", "position"},
        {"2. Your hole cards:", "hole_cards"},
        {"3. Community cards:", "community_cards"},
        {"4. Your chips in the pot:", "my_chips"},
        {"5. All chips in the pot:", "all_chips"},
        {"6. Total chips of the pot:", "pot"},
        {"7. Remaining chips of all players:", "stacks"},
        {"8. History actions of all players:", "history"},
        {"9. Legal actions:", "legal_actions"}}},
  };
  return kSlots;
}

constexpr std::string_view kInfoMarker =
    "I will provide you with the following information:";

std::string_view rtrim(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

const std::string& prompt_template(Game game) {
  const auto it = templates().find(game);
  if (it == templates().end()) {
    throw UnsupportedGame("no prompt template for " + std::string(game_name(game)));
  }
  return it->second;
}

const std::vector<PromptSlot>& prompt_slots(Game game) {
  const auto it = slots().find(game);
  if (it == slots().end()) {
    throw UnsupportedGame("no prompt template for " + std::string(game_name(game)));
  }
  return it->second;
}

std::string render_slot_value(std::string_view field, const Json& value) {
  if (value.is_null()) return "None";
  if (value.is_string()) return value.get<std::string>();
  if (field == "history" && value.is_array()) {
    if (value.empty()) return "None";
    std::string out;
    for (const Json& h : value) {
      if (!out.empty()) out += ", ";
      if (h.is_array() && h.size() == 2) {
        out += "(" + py_dump(h[0]) + ", " + py_dump(h[1]) + ")";
      } else {
        out += py_dump(h);
      }
    }
    return out;
  }
  return py_dump(value);
}

std::string render(Game game, const Json& fields) {
  const std::string& text = prompt_template(game);
  const auto& slot_list = prompt_slots(game);
  std::string out;
  out.reserve(text.size() + 1024);
  std::size_t next_slot = 0;
  bool in_info = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string_view line(text.data() + pos, end - pos);
    if (!in_info && line.find(kInfoMarker) != std::string_view::npos) {
      in_info = true;
    }
    if (in_info && next_slot < slot_list.size() &&
        rtrim(line) == slot_list[next_slot].label) {
      const PromptSlot& slot = slot_list[next_slot++];
      if (!fields.is_object() || !fields.contains(slot.field)) {
        throw MissingField("observation has no '" + slot.field +
                           "' for slot '" + slot.label + "'");
      }
      out += slot.label;
      out += ' ';
      out += render_slot_value(slot.field, fields[slot.field]);
    } else {
      out += line;
    }
    if (end < text.size()) out += '\n';
    pos = end + 1;
  }
  return out;
}

std::string legal_line(Game game, std::string_view instruction) {
  const std::string& label = prompt_slots(game).back().label;
  const std::size_t at = instruction.rfind(label);
  if (at == std::string_view::npos) return {};
  std::size_t start = at + label.size();
  std::size_t end = instruction.find('\n', start);
  if (end == std::string_view::npos) end = instruction.size();
  return std::string(instruction.substr(start, end - start));
}

bool sft_output_contained(Game game, std::string_view instruction,
                          std::string_view output) {
  Json parsed = Json::parse(output, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object() || !parsed.contains("action"))
    return false;
  const std::string value = py_dump(parsed["action"]);
  return legal_line(game, instruction).find(value) != std::string::npos;
}

Json make_sft(const Json& rec) {
  for (const char* key : {"game", "obs", "action", "match_id", "step", "seat"}) {
    if (!rec.contains(key)) {
      throw MalformedRecord(std::string("step record lacks '") + key + "'");
    }
  }
  const Game game = parse_game(rec["game"].get<std::string>());
  Json out = Json::object();
  out["instruction"] = render(game, rec["obs"]);
  out["output"] = py_dump(Json{{"action", rec["action"]}});
  out["metadata"] = Json{{"game", rec["game"]},
                         {"match_id", rec["match_id"]},
                         {"step", rec["step"]},
                         {"seat", rec["seat"]}};
  return out;
}

std::size_t emit_sft(std::istream& in, std::ostream& out) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Json rec = Json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object()) {
      throw MalformedRecord("line " + std::to_string(line_no) + ": not a JSON object");
    }
    if (rec.contains("manifest") || rec.contains("payoffs")) continue;
    try {
      out << make_sft(rec).dump() << '\n';
    } catch (const Error& e) {
      throw MalformedRecord("line " + std::to_string(line_no) + ": " + e.what());
    }
    ++count;
  }
  return count;
}

}  // namespace cardlab
