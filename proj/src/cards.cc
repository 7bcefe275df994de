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

#include "cardlab/cards.h"

#include <string>

#include "cardlab/errors.h"

namespace cardlab {

std::string_view game_name(Game game) {
  switch (game) {
    case Game::kDouDizhu: return "doudizhu";
    case Game::kGuanDan: return "guandan";
    case Game::kMahjong: return "mahjong";
    case Game::kUno: return "uno";
    case Game::kGinRummy: return "gin_rummy";
    case Game::kLeduc: return "leduc";
    case Game::kLimit: return "limit";
    case Game::kNoLimit: return "nolimit";
  }
  return "unknown";
}

Game parse_game(std::string_view name) {
  for (Game g : kAllGames) {
    if (game_name(g) == name) return g;
  }
  if (name == "gin" || name == "ginrummy") return Game::kGinRummy;
  if (name == "nl" || name == "no_limit" || name == "nolimit_holdem")
    return Game::kNoLimit;
  if (name == "limit_holdem") return Game::kLimit;
  if (name == "riichi" || name == "riichi_mahjong") return Game::kMahjong;
  if (name == "dou_dizhu") return Game::kDouDizhu;
  throw UnsupportedGame("unknown game: " + std::string(name));
}

int num_seats(Game game) {
  switch (game) {
    case Game::kDouDizhu: return 3;
    case Game::kGuanDan: return 4;
    case Game::kMahjong: return 4;
    default: return 2;
  }
}

char rank_char(Rank r) {
  static constexpr char kChars[] = "??23456789TJQKABR";
  return kChars[static_cast<int>(r)];
}

Rank parse_rank_char(char c) {
  switch (c) {
    case '2': case '3': case '4': case '5': case '6': case '7': case '8':
    case '9':
      return rank_from_value(c - '0');
    case 'T': return Rank::kTen;
    case 'J': return Rank::kJack;
    case 'Q': return Rank::kQueen;
    case 'K': return Rank::kKing;
    case 'A': return Rank::kAce;
    case 'B': return Rank::kBlackJoker;
    case 'R': return Rank::kRedJoker;
    default:
      throw UnknownNotation(std::string("bad rank character '") + c + "'");
  }
}

char suit_char(Suit s) {
  switch (s) {
    case Suit::kSpade: return 'S';
    case Suit::kHeart: return 'H';
    case Suit::kClub: return 'C';
    case Suit::kDiamond: return 'D';
    case Suit::kNone: break;
  }
  return '?';
}

namespace {

std::optional<Suit> parse_suit_char(char c) {
  switch (c) {
    case 'S': return Suit::kSpade;
    case 'H': return Suit::kHeart;
    case 'C': return Suit::kClub;
    case 'D': return Suit::kDiamond;
    default: return std::nullopt;
  }
}

constexpr std::string_view kFaceNames[] = {
    "0", "1", "2", "3", "4", "5", "6", "7", "8", "9",
    "skip", "reverse", "draw_2", "wild", "wild_draw_4"};

Card parse_uno(std::string_view text) {
  auto face_of = [&](std::string_view f) -> std::optional<UnoFace> {
    for (int i = 0; i < 15; ++i) {
      if (kFaceNames[i] == f) return static_cast<UnoFace>(i);
    }
    return std::nullopt;
  };
  if (text == "wild") return Card::uno(UnoColor::kNone, UnoFace::kWild);
  if (text == "wild_draw_4")
    return Card::uno(UnoColor::kNone, UnoFace::kWildDrawFour);
  if (text.size() < 3 || text[1] != '-') {
    throw UnknownNotation("bad uno card '" + std::string(text) + "'");
  }
  UnoColor color;
  switch (text[0]) {
    case 'r': color = UnoColor::kRed; break;
    case 'y': color = UnoColor::kYellow; break;
    case 'g': color = UnoColor::kGreen; break;
    case 'b': color = UnoColor::kBlue; break;
    default:
      throw UnknownNotation("bad uno color in '" + std::string(text) + "'");
  }
  auto face = face_of(text.substr(2));
  if (!face) throw UnknownNotation("bad uno face in '" + std::string(text) + "'");
  return Card::uno(color, *face);
}

}  // namespace

std::string uno_color_name(UnoColor c) {
  switch (c) {
    case UnoColor::kRed: return "r";
    case UnoColor::kYellow: return "y";
    case UnoColor::kGreen: return "g";
    case UnoColor::kBlue: return "b";
    case UnoColor::kNone: break;
  }
  return "";
}

std::string uno_face_name(UnoFace f) {
  return std::string(kFaceNames[static_cast<int>(f)]);
}

Card parse_card(std::string_view text) {
  if (text.empty()) throw UnknownNotation("empty card notation");
  if (text.find('-') != std::string_view::npos || text.starts_with("wild")) {
    return parse_uno(text);
  }
  if (text.size() != 2) {
    throw UnknownNotation("bad card notation '" + std::string(text) + "'");
  }
  if (text == "SB") return Card::black_joker();
  if (text == "HR") return Card::red_joker();
  auto suit = parse_suit_char(text[0]);
  if (!suit) throw UnknownNotation("bad suit in '" + std::string(text) + "'");
  Rank rank = parse_rank_char(text[1]);
  if (rank == Rank::kBlackJoker || rank == Rank::kRedJoker) {
    throw UnknownNotation("bad joker notation '" + std::string(text) + "'");
  }
  return Card::french(*suit, rank);
}

std::string format_card(const Card& card) {
  if (card.is_uno()) {
    if (card.color() == UnoColor::kNone) return uno_face_name(card.face());
    return uno_color_name(card.color()) + "-" + uno_face_name(card.face());
  }
  return {suit_char(card.suit()), rank_char(card.rank())};
}

Card parse_card_rank_first(std::string_view text) {
  if (text.size() != 2) {
    throw UnknownNotation("bad card notation '" + std::string(text) + "'");
  }
  auto suit = parse_suit_char(text[1]);
  if (!suit) throw UnknownNotation("bad suit in '" + std::string(text) + "'");
  Rank rank = parse_rank_char(text[0]);
  if (rank == Rank::kBlackJoker || rank == Rank::kRedJoker) {
    throw UnknownNotation("joker in rank-first notation '" +
                          std::string(text) + "'");
  }
  return Card::french(*suit, rank);
}

std::string format_card_rank_first(const Card& card) {
  return {rank_char(card.rank()), suit_char(card.suit())};
}

std::vector<Card> parse_cards(const std::vector<std::string>& texts) {
  std::vector<Card> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_card(t));
  return out;
}

std::vector<std::string> format_cards(const std::vector<Card>& cards) {
  std::vector<std::string> out;
  out.reserve(cards.size());
  for (const auto& c : cards) out.push_back(format_card(c));
  return out;
}

int dou_value(const Card& card) {
  switch (card.rank()) {
    case Rank::kTwo: return 17;
    case Rank::kBlackJoker: return 20;
    case Rank::kRedJoker: return 30;
    default: return rank_value(card.rank());  // 3..14
  }
}

bool is_dou_value(int v) {
  return (v >= 3 && v <= 14) || v == 17 || v == 20 || v == 30;
}

Deck build_deck(Game game) {
  Deck deck{game, {}};
  auto add_french = [&deck](std::initializer_list<Rank> ranks,
                            std::initializer_list<Suit> suits) {
    for (Suit s : suits)
      for (Rank r : ranks) deck.cards.push_back(Card::french(s, r));
  };
  const auto all_ranks = {Rank::kTwo,   Rank::kThree, Rank::kFour,
                          Rank::kFive,  Rank::kSix,   Rank::kSeven,
                          Rank::kEight, Rank::kNine,  Rank::kTen,
                          Rank::kJack,  Rank::kQueen, Rank::kKing,
                          Rank::kAce};
  const auto all_suits = {Suit::kSpade, Suit::kHeart, Suit::kClub,
                          Suit::kDiamond};
  switch (game) {
    case Game::kDouDizhu:
      add_french(all_ranks, all_suits);
      deck.cards.push_back(Card::black_joker());
      deck.cards.push_back(Card::red_joker());
      break;
    case Game::kGuanDan:
      for (int copy = 0; copy < 2; ++copy) {
        add_french(all_ranks, all_suits);
        deck.cards.push_back(Card::black_joker());
        deck.cards.push_back(Card::red_joker());
      }
      break;
    case Game::kUno:
      for (UnoColor c : kUnoColors) {
        deck.cards.push_back(Card::uno(c, UnoFace::k0));
        for (int copy = 0; copy < 2; ++copy) {
          for (int f = 1; f <= 9; ++f)
            deck.cards.push_back(Card::uno(c, static_cast<UnoFace>(f)));
          deck.cards.push_back(Card::uno(c, UnoFace::kSkip));
          deck.cards.push_back(Card::uno(c, UnoFace::kReverse));
          deck.cards.push_back(Card::uno(c, UnoFace::kDrawTwo));
        }
      }
      for (int i = 0; i < 4; ++i) {
        deck.cards.push_back(Card::uno(UnoColor::kNone, UnoFace::kWild));
        deck.cards.push_back(
            Card::uno(UnoColor::kNone, UnoFace::kWildDrawFour));
      }
      break;
    case Game::kGinRummy:
    case Game::kLimit:
    case Game::kNoLimit:
      add_french(all_ranks, all_suits);
      break;
    case Game::kLeduc:
      add_french({Rank::kJack, Rank::kQueen, Rank::kKing},
                 {Suit::kSpade, Suit::kHeart});
      break;
    case Game::kMahjong:
      throw UnsupportedGame("no deck for mahjong");
  }
  return deck;
}

}  // namespace cardlab
