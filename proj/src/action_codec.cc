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

#include "cardlab/action_codec.h"

#include <algorithm>
#include <array>
#include <string>

#include "cardlab/errors.h"

namespace cardlab {

using Json = nlohmann::ordered_json;

namespace {

void dump_into(const Json& v, std::string& out) {
  switch (v.type()) {
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += ", ";
        first = false;
        dump_into(e, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [k, e] : v.items()) {
        if (!first) out += ", ";
        first = false;
        out += Json(k).dump(-1, ' ', false);
        out += ": ";
        dump_into(e, out);
      }
      out += '}';
      break;
    }
    default:
      out += v.dump(-1, ' ', false);
  }
}

constexpr std::array<const char*, 11> kGuanTypeNames = {
    "Single",    "Pair",     "Trips", "ThreePair", "ThreeWithTwo", "TripsPair",
    "Straight",  "Boom",     "PASS",  "tribute",   "back"};

constexpr std::array<const char*, 4> kBetNames = {"fold", "call", "raise",
                                                  "check"};
constexpr std::array<const char*, 5> kNlNames = {
    "FOLD", "CHECK_CALL", "RAISE_HALF_POT", "RAISE_POT", "ALL_IN"};

const std::string& expect_string(const Json& v, Game game) {
  if (!v.is_string()) {
    throw SchemaMismatch(std::string(game_name(game)) +
                         " action must be a string, got " + py_dump(v));
  }
  return v.get_ref<const std::string&>();
}

template <typename Fn>
auto rethrow_unknown(const std::string& what, Fn&& fn) {
  try {
    return fn();
  } catch (const UnknownNotation& e) {
    throw UnknownAction(what + ": " + e.what());
  }
}

}  // namespace

std::string py_dump(const Json& value) {
  std::string out;
  dump_into(value, out);
  return out;
}

Json action_value(Game game, const Action& action) {
  switch (game) {
    case Game::kDouDizhu: {
      Json arr = Json::array();
      for (int c : std::get<DouAction>(action).cards) arr.push_back(c);
      return arr;
    }
    case Game::kGuanDan: {
      const auto& a = std::get<GuanAction>(action);
      if (a.type == GuanType::kPass) return Json::array({"PASS", "PASS", "PASS"});
      Json cards = Json::array();
      for (const Card& c : a.cards) cards.push_back(format_card(c));
      return Json::array(
          {kGuanTypeNames[static_cast<int>(a.type)], a.rank, cards});
    }
    case Game::kUno: {
      const auto& a = std::get<UnoAction>(action);
      if (a.draw) return "draw";
      return format_card(a.card);
    }
    case Game::kGinRummy: {
      const auto& a = std::get<GinAction>(action);
      switch (a.kind) {
        case GinKind::kDrawCard: return "draw_card";
        case GinKind::kPickUpDiscard: return "pick_up_discard";
        case GinKind::kGin: return "gin";
        case GinKind::kDiscard:
          return "discard " + format_card_rank_first(a.card);
        case GinKind::kKnock: return "knock " + format_card_rank_first(a.card);
        case GinKind::kDeclareDead: return "declare_dead";
        case GinKind::kScoreN: return "score N";
        case GinKind::kScoreS: return "score S";
      }
      break;
    }
    case Game::kLeduc:
    case Game::kLimit:
      return kBetNames[static_cast<int>(std::get<BetAction>(action))];
    case Game::kNoLimit:
      return kNlNames[static_cast<int>(std::get<NlAction>(action))];
    case Game::kMahjong:
      break;
  }
  throw UnsupportedGame("no action codec for " + std::string(game_name(game)));
}

Action action_from_value(Game game, const Json& v) {
  switch (game) {
    case Game::kDouDizhu: {
      if (!v.is_array()) {
        throw SchemaMismatch("doudizhu action must be an array, got " +
                             py_dump(v));
      }
      DouAction a;
      for (const auto& e : v) {
        if (!e.is_number_integer()) {
          throw SchemaMismatch("doudizhu cards must be integers, got " +
                               py_dump(v));
        }
        int c = e.get<int>();
        if (!is_dou_value(c)) {
          throw UnknownAction("unknown doudizhu card " + std::to_string(c));
        }
        a.cards.push_back(c);
      }
      std::sort(a.cards.begin(), a.cards.end());
      return a;
    }
    case Game::kGuanDan: {
      if (!v.is_array() || v.size() != 3 || !v[0].is_string() ||
          !v[1].is_string()) {
        throw SchemaMismatch("guandan action must be [Type, Rank, Cards], got " +
                             py_dump(v));
      }
      const auto& type_name = v[0].get_ref<const std::string&>();
      auto it = std::find_if(kGuanTypeNames.begin(), kGuanTypeNames.end(),
                             [&](const char* n) { return type_name == n; });
      if (it == kGuanTypeNames.end()) {
        throw UnknownAction("unknown guandan type '" + type_name + "'");
      }
      GuanAction a;
      a.type = static_cast<GuanType>(it - kGuanTypeNames.begin());
      a.rank = v[1].get<std::string>();
      if (a.type == GuanType::kPass) {
        if (a.rank != "PASS" || v[2] != "PASS") {
          throw UnknownAction("malformed guandan pass " + py_dump(v));
        }
        return a;
      }
      if (a.rank.size() != 1 ||
          std::string_view("23456789TJQKABR").find(a.rank[0]) ==
              std::string_view::npos) {
        throw UnknownAction("unknown guandan rank '" + a.rank + "'");
      }
      if (!v[2].is_array() || v[2].empty()) {
        throw SchemaMismatch("guandan cards must be a non-empty list, got " +
                             py_dump(v));
      }
      for (const auto& e : v[2]) {
        if (!e.is_string()) {
          throw SchemaMismatch("guandan cards must be strings, got " +
                               py_dump(v));
        }
        Card c = rethrow_unknown("guandan action", [&] {
          return parse_card(e.get_ref<const std::string&>());
        });
        if (c.is_uno()) throw UnknownAction("uno card in guandan action");
        a.cards.push_back(c);
      }
      std::sort(a.cards.begin(), a.cards.end());
      return a;
    }
    case Game::kUno: {
      const std::string& s = expect_string(v, game);
      if (s == "draw") return UnoAction{true, Card()};
      Card c = rethrow_unknown("uno action", [&] { return parse_card(s); });
      if (!c.is_uno() || c.color() == UnoColor::kNone) {
        throw UnknownAction("uno play must name a colored card: '" + s + "'");
      }
      return UnoAction{false, c};
    }
    case Game::kGinRummy: {
      const std::string& s = expect_string(v, game);
      if (s == "draw_card") return GinAction{GinKind::kDrawCard, Card()};
      if (s == "pick_up_discard")
        return GinAction{GinKind::kPickUpDiscard, Card()};
      if (s == "gin") return GinAction{GinKind::kGin, Card()};
      if (s == "declare_dead") return GinAction{GinKind::kDeclareDead, Card()};
      if (s == "score N") return GinAction{GinKind::kScoreN, Card()};
      if (s == "score S") return GinAction{GinKind::kScoreS, Card()};
      for (auto [prefix, kind] :
           {std::pair{std::string_view("discard "), GinKind::kDiscard},
            std::pair{std::string_view("knock "), GinKind::kKnock}}) {
        if (s.starts_with(prefix)) {
          Card c = rethrow_unknown("gin action", [&] {
            return parse_card_rank_first(
                std::string_view(s).substr(prefix.size()));
          });
          return GinAction{kind, c};
        }
      }
      throw UnknownAction("unknown gin rummy action '" + s + "'");
    }
    case Game::kLeduc:
    case Game::kLimit: {
      const std::string& s = expect_string(v, game);
      for (std::size_t i = 0; i < kBetNames.size(); ++i) {
        if (s == kBetNames[i]) return static_cast<BetAction>(i);
      }
      throw UnknownAction("unknown betting action '" + s + "'");
    }
    case Game::kNoLimit: {
      const std::string& s = expect_string(v, game);
      for (std::size_t i = 0; i < kNlNames.size(); ++i) {
        if (s == kNlNames[i]) return static_cast<NlAction>(i);
      }
      throw UnknownAction("unknown no-limit action '" + s + "'");
    }
    case Game::kMahjong:
      break;
  }
  throw UnsupportedGame("no action codec for " + std::string(game_name(game)));
}

std::string encode_action(Game game, const Action& action) {
  return "{\"action\": " + py_dump(action_value(game, action)) + "}";
}

Action decode_action(Game game, std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("action reply is not JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("action")) {
    throw SchemaMismatch("action reply must be an object with an \"action\" key");
  }
  return action_from_value(game, doc["action"]);
}

}  // namespace cardlab
