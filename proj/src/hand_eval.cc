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

#include <algorithm>
#include <bit>
#include <set>

#include "cardlab/poker.h"

namespace cardlab {
namespace {

constexpr std::array<std::string_view, kNumHandCategories> kCategoryNames = {
    "HighCard",  "OnePair",    "TwoPair",     "ThreeOfAKind",  "Straight",
    "Flush",     "FullHouse",  "FourOfAKind", "StraightFlush", "RoyalFlush",
};

HandRank pack(HandCategory cat, std::initializer_list<int> ranks) {
  std::uint32_t v = static_cast<std::uint32_t>(cat);
  int n = 0;
  for (int r : ranks) {
    v = (v << 4) | static_cast<std::uint32_t>(r);
    ++n;
  }
  for (; n < 5; ++n) v <<= 4;
  return {cat, v};
}

}  // namespace

std::string_view hand_category_name(HandCategory c) {
  return kCategoryNames[static_cast<int>(c)];
}

std::vector<int> HandRank::tiebreak() const {
  std::vector<int> out;
  for (int shift = 16; shift >= 0; shift -= 4) {
    const int r = static_cast<int>((value >> shift) & 0xF);
    if (r != 0) out.push_back(r);
  }
  return out;
}

HandRank evaluate_five(const std::array<Card, 5>& cards) {
  std::array<int, 15> count{};
  bool flush = true;
  for (const Card& c : cards) {
    ++count[rank_value(c.rank())];
    flush = flush && c.suit() == cards[0].suit();
  }
  // Ranks grouped by multiplicity, then by rank, descending.
  std::array<std::pair<int, int>, 5> groups{};
  int g = 0;
  for (int r = 14; r >= 2; --r)
    if (count[r] > 0) groups[g++] = {count[r], r};
  std::stable_sort(groups.begin(), groups.begin() + g,
                   [](auto a, auto b) { return a.first > b.first; });

  int straight_high = 0;
  if (g == 5) {
    if (groups[0].second - groups[4].second == 4) {
      straight_high = groups[0].second;
    } else if (groups[0].second == 14 && groups[1].second == 5) {
      straight_high = 5;  // A-2-3-4-5
    }
  }
  if (straight_high && flush) {
    return pack(straight_high == 14 ? HandCategory::kRoyalFlush
                                    : HandCategory::kStraightFlush,
                {straight_high});
  }
  if (groups[0].first == 4)
    return pack(HandCategory::kFourOfAKind, {groups[0].second, groups[1].second});
  if (groups[0].first == 3 && groups[1].first == 2)
    return pack(HandCategory::kFullHouse, {groups[0].second, groups[1].second});
  if (flush) {
    return pack(HandCategory::kFlush,
                {groups[0].second, groups[1].second, groups[2].second,
                 groups[3].second, groups[4].second});
  }
  if (straight_high) return pack(HandCategory::kStraight, {straight_high});
  if (groups[0].first == 3) {
    return pack(HandCategory::kThreeOfAKind,
                {groups[0].second, groups[1].second, groups[2].second});
  }
  if (groups[0].first == 2 && groups[1].first == 2) {
    return pack(HandCategory::kTwoPair,
                {groups[0].second, groups[1].second, groups[2].second});
  }
  if (groups[0].first == 2) {
    return pack(HandCategory::kOnePair, {groups[0].second, groups[1].second,
                                         groups[2].second, groups[3].second});
  }
  return pack(HandCategory::kHighCard,
              {groups[0].second, groups[1].second, groups[2].second,
               groups[3].second, groups[4].second});
}

HandRank evaluate_hand(std::span<const Card> cards) {
  const std::size_t n = cards.size();
  if (n < 5 || n > 7) {
    throw BadCardCount("hand evaluation needs 5 to 7 cards, got " +
                       std::to_string(n));
  }
  std::set<Card> seen;
  for (const Card& c : cards) {
    if (!c.is_french()) throw BadCardCount("not a standard card: " + format_card(c));
    if (!seen.insert(c).second) throw DuplicateCard("duplicate card " + format_card(c));
  }
  HandRank best;
  bool first = true;
  std::array<Card, 5> pick;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != 5) continue;
    int k = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) pick[k++] = cards[i];
    const HandRank r = evaluate_five(pick);
    if (first || r > best) best = r;
    first = false;
  }
  return best;
}

namespace {

std::array<Card, 52> full_deck() {
  std::array<Card, 52> deck;
  int i = 0;
  for (Suit s : kSuits)
    for (int r = 2; r <= 14; ++r) deck[i++] = Card::french(s, rank_from_value(r));
  return deck;
}

void census_from(int a, const std::array<Card, 52>& deck,
                 std::array<std::uint64_t, kNumHandCategories>& counts) {
  for (int b = a + 1; b < 52; ++b)
    for (int c = b + 1; c < 52; ++c)
      for (int d = c + 1; d < 52; ++d)
        for (int e = d + 1; e < 52; ++e) {
          const HandRank r =
              evaluate_five({deck[a], deck[b], deck[c], deck[d], deck[e]});
          ++counts[static_cast<int>(r.category)];
        }
}

}  // namespace

std::array<std::uint64_t, kNumHandCategories> five_card_census_serial() {
  const auto deck = full_deck();
  std::array<std::uint64_t, kNumHandCategories> counts{};
  for (int a = 0; a < 52; ++a) census_from(a, deck, counts);
  return counts;
}

std::array<std::uint64_t, kNumHandCategories> five_card_census_parallel() {
  const auto deck = full_deck();
  std::array<std::uint64_t, kNumHandCategories> counts{};
#pragma omp parallel
  {
    std::array<std::uint64_t, kNumHandCategories> local{};
#pragma omp for schedule(dynamic, 1) nowait
    for (int a = 0; a < 52; ++a) census_from(a, deck, local);
#pragma omp critical
    for (int k = 0; k < kNumHandCategories; ++k) counts[k] += local[k];
  }
  return counts;
}

}  // namespace cardlab
