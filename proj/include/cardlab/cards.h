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

#ifndef CARDLAB_CARDS_H_
#define CARDLAB_CARDS_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cardlab/game_id.h"

namespace cardlab {

enum class Suit : std::uint8_t { kSpade, kHeart, kClub, kDiamond, kNone };

// Natural values: 2..10, J=11, Q=12, K=13, A=14, then the jokers.
enum class Rank : std::uint8_t {
  kTwo = 2, kThree, kFour, kFive, kSix, kSeven, kEight, kNine, kTen,
  kJack, kQueen, kKing, kAce, kBlackJoker, kRedJoker,
};

enum class UnoColor : std::uint8_t { kRed, kYellow, kGreen, kBlue, kNone };

enum class UnoFace : std::uint8_t {
  k0, k1, k2, k3, k4, k5, k6, k7, k8, k9,
  kSkip, kReverse, kDrawTwo, kWild, kWildDrawFour,
};

inline constexpr std::array<Suit, 4> kSuits = {Suit::kSpade, Suit::kHeart,
                                               Suit::kClub, Suit::kDiamond};
inline constexpr std::array<UnoColor, 4> kUnoColors = {
    UnoColor::kRed, UnoColor::kYellow, UnoColor::kGreen, UnoColor::kBlue};

inline int rank_value(Rank r) { return static_cast<int>(r); }
inline Rank rank_from_value(int v) { return static_cast<Rank>(v); }

// A French-deck card, a joker, or an Uno card. Uno wilds carry a color only
// once declared (on the discard pile or inside a play action).
class Card {
 public:
  constexpr Card() = default;

  static constexpr Card french(Suit suit, Rank rank) {
    return Card(Kind::kFrench, static_cast<std::uint8_t>(suit),
                static_cast<std::uint8_t>(rank));
  }
  static constexpr Card black_joker() {
    return Card(Kind::kJoker, static_cast<std::uint8_t>(Suit::kSpade),
                static_cast<std::uint8_t>(Rank::kBlackJoker));
  }
  static constexpr Card red_joker() {
    return Card(Kind::kJoker, static_cast<std::uint8_t>(Suit::kHeart),
                static_cast<std::uint8_t>(Rank::kRedJoker));
  }
  static constexpr Card uno(UnoColor color, UnoFace face) {
    return Card(Kind::kUno, static_cast<std::uint8_t>(color),
                static_cast<std::uint8_t>(face));
  }

  bool is_uno() const { return kind_ == Kind::kUno; }
  bool is_joker() const { return kind_ == Kind::kJoker; }
  bool is_french() const { return kind_ == Kind::kFrench; }

  Suit suit() const { return is_uno() ? Suit::kNone : static_cast<Suit>(a_); }
  Rank rank() const { return static_cast<Rank>(b_); }
  UnoColor color() const {
    return is_uno() ? static_cast<UnoColor>(a_) : UnoColor::kNone;
  }
  UnoFace face() const { return static_cast<UnoFace>(b_); }
  bool is_uno_wild() const {
    return is_uno() && (face() == UnoFace::kWild ||
                        face() == UnoFace::kWildDrawFour);
  }
  // Same Uno card with a different color (used to declare or clear wilds).
  Card with_color(UnoColor c) const { return uno(c, face()); }

  // Dense id, stable across runs; used for hashing and bitsets.
  std::uint16_t id() const {
    return static_cast<std::uint16_t>((static_cast<int>(kind_) << 10) |
                                      (a_ << 5) | b_);
  }

  friend auto operator<=>(const Card&, const Card&) = default;

 private:
  enum class Kind : std::uint8_t { kFrench, kJoker, kUno };
  constexpr Card(Kind k, std::uint8_t a, std::uint8_t b)
      : kind_(k), a_(a), b_(b) {}

  Kind kind_ = Kind::kFrench;
  std::uint8_t a_ = 0;
  std::uint8_t b_ = 2;
};

// Two-character suit-rank notation ("S2", "HT", "SB", "HR") for French cards
// and jokers; "color-face" for Uno ("r-3", "g-skip", "y-wild"), with bare
// "wild" / "wild_draw_4" for wilds that have no declared color.
Card parse_card(std::string_view text);
std::string format_card(const Card& card);

// Rank-then-suit notation used by Gin Rummy actions ("3S", "TC").
Card parse_card_rank_first(std::string_view text);
std::string format_card_rank_first(const Card& card);

char rank_char(Rank r);
Rank parse_rank_char(char c);
char suit_char(Suit s);
std::string uno_color_name(UnoColor c);  // "r", "y", "g", "b"
std::string uno_face_name(UnoFace f);    // "0".."9", "skip", ...

std::vector<Card> parse_cards(const std::vector<std::string>& texts);
std::vector<std::string> format_cards(const std::vector<Card>& cards);

// Numeric DouDizhu encoding: 3..14 for 3..A, 17 for 2, 20 black joker,
// 30 red joker.
int dou_value(const Card& card);
bool is_dou_value(int v);

struct Deck {
  Game game;
  std::vector<Card> cards;
};

// Throws UnsupportedGame for Mahjong.
Deck build_deck(Game game);

}  // namespace cardlab

#endif  // CARDLAB_CARDS_H_
