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

#include "cardlab/uno.h"

#include <algorithm>
#include <sstream>

#include "cardlab/action_codec.h"

namespace cardlab {
namespace {

bool is_action_face(UnoFace f) {
  return f == UnoFace::kSkip || f == UnoFace::kReverse ||
         f == UnoFace::kDrawTwo || f == UnoFace::kWildDrawFour;
}

bool matches(const Card& c, const Card& top, UnoColor active) {
  if (c.is_uno_wild()) return true;
  return c.color() == active || c.face() == top.face();
}

std::vector<UnoAction> expand(const Card& c) {
  std::vector<UnoAction> out;
  if (c.is_uno_wild()) {
    for (UnoColor col : kUnoColors) out.push_back({false, c.with_color(col)});
  } else {
    out.push_back({false, c});
  }
  return out;
}

}  // namespace

std::vector<UnoAction> uno_playable(const std::vector<Card>& hand,
                                    const Card& top, UnoColor active) {
  std::vector<UnoAction> out;
  for (const Card& c : hand) {
    if (!matches(c, top, active)) continue;
    for (auto& a : expand(c)) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

UnoState::UnoState(Seed seed, const GameOptions& options) : rng_(seed) {
  Deck deck = build_deck(Game::kUno);
  rng_.shuffle(std::span<Card>(deck.cards));
  draw_ = std::move(deck.cards);
  for (int k = 0; k < 7; ++k)
    for (int s = 0; s < 2; ++s) draw_one(s);
  current_ = static_cast<int>(options.match_index % 2);
  // A wild draw four cannot open; put it back and flip again.
  while (draw_.back().face() == UnoFace::kWildDrawFour) {
    const Card c = draw_.back();
    draw_.pop_back();
    draw_.insert(draw_.begin() + static_cast<long>(rng_.uniform(draw_.size() + 1)), c);
  }
  Card flip = draw_.back();
  draw_.pop_back();
  if (flip.is_uno_wild()) flip = flip.with_color(kUnoColors[rng_.uniform(4)]);
  discard_.push_back(flip);
  // An opening action card applies to the first player.
  switch (flip.face()) {
    case UnoFace::kSkip:
    case UnoFace::kReverse:
      current_ = 1 - current_;
      break;
    case UnoFace::kDrawTwo:
      draw_n(current_, 2);
      current_ = 1 - current_;
      break;
    default:
      break;
  }
}

UnoState::UnoState(const std::array<std::vector<Card>, 2>& hands, Card top,
                   std::vector<Card> draw_pile, int first)
    : hands_(hands), draw_(std::move(draw_pile)), current_(first) {
  discard_.push_back(top);
}

Card UnoState::draw_one(int seat) {
  if (draw_.empty()) {
    // Reshuffle everything under the top card back into the draw pile.
    const Card top = discard_.back();
    discard_.pop_back();
    for (Card c : discard_) {
      draw_.push_back(c.is_uno_wild() ? c.with_color(UnoColor::kNone) : c);
    }
    discard_.assign(1, top);
    rng_.shuffle(std::span<Card>(draw_));
  }
  if (draw_.empty()) return Card();
  const Card c = draw_.back();
  draw_.pop_back();
  hands_[seat].push_back(c);
  return c;
}

void UnoState::draw_n(int seat, int n) {
  for (int k = 0; k < n; ++k) {
    if (draw_.empty() && discard_.size() < 2) return;
    draw_one(seat);
  }
}

std::vector<Action> UnoState::legal_actions() const {
  if (is_terminal()) throw TerminalState("uno game is over");
  if (legal_cache_) return *legal_cache_;
  std::vector<Action> out;
  if (pending_) {
    for (auto& a : expand(*pending_)) out.push_back(a);
  } else {
    for (auto& a : uno_playable(hands_[current_], top(), top().color()))
      out.push_back(a);
    if (out.empty()) out.push_back(UnoAction{true, Card()});
  }
  legal_cache_ = out;
  return out;
}

void UnoState::apply(const Action& action) {
  require_legal(*this, action);
  const auto& a = std::get<UnoAction>(action);
  const int seat = current_;
  history_.push_back({seat, action});
  legal_cache_.reset();
  pending_.reset();

  if (a.draw) {
    const bool can_draw = !draw_.empty() || discard_.size() > 1;
    if (can_draw) {
      const Card c = draw_one(seat);
      if (matches(c, top(), top().color())) {
        pending_ = c;
      } else {
        current_ = 1 - seat;
      }
    } else {
      current_ = 1 - seat;
    }
  } else {
    auto& h = hands_[seat];
    const Card stored =
        a.card.is_uno_wild() ? a.card.with_color(UnoColor::kNone) : a.card;
    h.erase(std::find(h.begin(), h.end(), stored));
    discard_.push_back(a.card);
    played_.push_back(a.card);
    const UnoFace f = a.card.face();
    if (f == UnoFace::kDrawTwo) draw_n(1 - seat, 2);
    if (f == UnoFace::kWildDrawFour) draw_n(1 - seat, 4);
    if (h.empty()) {
      winner_ = seat;
    } else if (!is_action_face(f)) {
      current_ = 1 - seat;
    }
  }
  if (winner_ < 0 && history_.size() >= static_cast<std::size_t>(kUnoMaxSteps))
    stalled_ = true;
}

std::vector<double> UnoState::payoffs() const {
  if (!is_terminal()) throw NonTerminal("uno game is not over");
  if (winner_ < 0) return {0.0, 0.0};
  std::vector<double> p(2, -1.0);
  p[winner_] = 1.0;
  return p;
}

Observation UnoState::observe(int seat) const {
  Observation obs{Game::kUno, seat, role(seat), Json::object()};
  auto names = [](std::vector<Card> cards) {
    std::sort(cards.begin(), cards.end());
    return Json(format_cards(cards));
  };
  Json history = Json::array();
  for (const auto& h : history_)
    history.push_back(Json::array({h.seat, action_value(Game::kUno, h.action)}));
  auto& f = obs.fields;
  f["step"] = history_.size();
  f["position"] = seat;
  f["hand"] = names(hands_[seat]);
  f["top_card"] = format_card(top());
  f["played_cards"] = Json(format_cards(played_));
  f["num_cards_left"] = Json::array({hands_[0].size(), hands_[1].size()});
  f["history"] = std::move(history);
  Json legal = Json::array();
  if (!is_terminal() && seat == current_) {
    for (const auto& a : legal_actions())
      legal.push_back(action_value(Game::kUno, a));
  }
  f["legal_actions"] = std::move(legal);
  return obs;
}

std::vector<Card> UnoState::all_cards() const {
  std::vector<Card> out;
  for (const auto& h : hands_) out.insert(out.end(), h.begin(), h.end());
  out.insert(out.end(), draw_.begin(), draw_.end());
  for (Card c : discard_)
    out.push_back(c.is_uno_wild() ? c.with_color(UnoColor::kNone) : c);
  return out;
}

std::string UnoState::serialize() const {
  std::ostringstream os;
  for (int s = 0; s < 2; ++s) {
    os << "hand" << s << ':';
    for (const Card& c : hands_[s]) os << format_card(c) << ' ';
    os << '\n';
  }
  os << "draw:";
  for (const Card& c : draw_) os << format_card(c) << ' ';
  os << "\ndiscard:";
  for (const Card& c : discard_) os << format_card(c) << ' ';
  os << "\ncur:" << current_ << " winner:" << winner_
     << " stalled:" << stalled_;
  if (pending_) os << " pending:" << format_card(*pending_);
  os << "\nhistory:";
  for (const auto& h : history_)
    os << h.seat << '=' << describe_action(Game::kUno, h.action) << ';';
  return os.str();
}

std::unique_ptr<State> new_uno(Seed seed, const GameOptions& options) {
  return std::make_unique<UnoState>(seed, options);
}

}  // namespace cardlab
