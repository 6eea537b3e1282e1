#include "mastermind/dou/combo.hpp"

#include <array>

namespace mastermind::dou {

namespace {

using Counts = std::array<std::uint8_t, kNumRanks>;

// Index of the rank holding exactly `n` cards; -1 if none or several.
int unique_rank_with(const Counts& c, int n) {
  int found = -1;
  for (int i = 0; i < kNumRanks; ++i) {
    if (c[i] == n) {
      if (found >= 0) return -1;
      found = i;
    }
  }
  return found;
}

// Consecutive run where every present rank holds exactly `width` cards and
// all ranks lie within 3..A. Returns (start, length) or (-1, 0).
std::pair<int, int> uniform_run(const Counts& c, int width) {
  int start = -1;
  int length = 0;
  for (int i = 0; i < kNumRanks; ++i) {
    if (c[i] == 0) continue;
    if (c[i] != width || i > kAce) return {-1, 0};
    if (start < 0) {
      start = i;
    } else if (i != start + length) {
      return {-1, 0};
    }
    ++length;
  }
  return {start, length};
}

bool valid_solo_wings(const Counts& c, int start, int length) {
  for (int i = start; i < start + length; ++i) {
    if (c[i] != 3) return false;
  }
  int kickers = 0;
  for (int i = 0; i < kNumRanks; ++i) {
    if (i >= start && i < start + length) continue;
    if (c[i] > 3) return false;
    if (c[i] == 3 && i <= kAce && (i == start - 1 || i == start + length)) {
      return false;
    }
    kickers += c[i];
  }
  if (c[kBlackJoker] && c[kRedJoker]) return false;
  return kickers == length;
}

bool valid_pair_wings(const Counts& c, int start, int length) {
  for (int i = start; i < start + length; ++i) {
    if (c[i] != 3) return false;
  }
  int pairs = 0;
  for (int i = 0; i < kNumRanks; ++i) {
    if (i >= start && i < start + length) continue;
    if (c[i] == 0) continue;
    if (c[i] != 2) return false;
    ++pairs;
  }
  return pairs == length;
}

}  // namespace

std::string_view category_name(Category category) {
  static constexpr std::array<std::string_view, kNumCategories> kNames = {
      "PASS",       "SOLO",        "PAIR",
      "TRIO",       "TRIO_SOLO",   "TRIO_PAIR",
      "SOLO_CHAIN", "PAIR_CHAIN",  "AIRPLANE",
      "AIRPLANE_SOLO_WINGS",       "AIRPLANE_PAIR_WINGS",
      "FOUR_TWO_SOLO",             "FOUR_TWO_PAIR",
      "BOMB",       "ROCKET"};
  return kNames[static_cast<int>(category)];
}

std::optional<Combo> Combo::try_make(Category category, const Cards& cards) {
  const Counts& c = cards.counts();
  const int total = cards.size();
  switch (category) {
    case Category::Pass:
      if (total == 0) return Combo();
      return std::nullopt;
    case Category::Solo:
      if (total == 1) return Combo(category, unique_rank_with(c, 1), 1, cards);
      return std::nullopt;
    case Category::Pair:
    case Category::Trio:
    case Category::Bomb: {
      const int width = category == Category::Pair   ? 2
                        : category == Category::Trio ? 3
                                                     : 4;
      int r = unique_rank_with(c, width);
      if (total == width && r >= 0) return Combo(category, r, 1, cards);
      return std::nullopt;
    }
    case Category::Rocket:
      if (total == 2 && c[kBlackJoker] == 1 && c[kRedJoker] == 1) {
        return Combo(category, kBlackJoker, 1, cards);
      }
      return std::nullopt;
    case Category::TrioSolo: {
      int t = unique_rank_with(c, 3);
      if (total == 4 && t >= 0) return Combo(category, t, 1, cards);
      return std::nullopt;
    }
    case Category::TrioPair: {
      int t = unique_rank_with(c, 3);
      int p = unique_rank_with(c, 2);
      if (total == 5 && t >= 0 && p >= 0) return Combo(category, t, 1, cards);
      return std::nullopt;
    }
    case Category::SoloChain:
    case Category::PairChain:
    case Category::Airplane: {
      const int width = category == Category::SoloChain   ? 1
                        : category == Category::PairChain ? 2
                                                          : 3;
      const int min_len = category == Category::SoloChain   ? 5
                          : category == Category::PairChain ? 3
                                                            : 2;
      auto [start, length] = uniform_run(c, width);
      if (start < 0 || length < min_len || total > kMaxHandSize) {
        return std::nullopt;
      }
      return Combo(category, start, length, cards);
    }
    case Category::AirplaneSoloWings: {
      if (total % 4 != 0) return std::nullopt;
      const int length = total / 4;
      if (length < 2 || length > 5) return std::nullopt;
      for (int s = 0; s + length - 1 <= kAce; ++s) {
        if (valid_solo_wings(c, s, length)) {
          return Combo(category, s, length, cards);
        }
      }
      return std::nullopt;
    }
    case Category::AirplanePairWings: {
      if (total % 5 != 0) return std::nullopt;
      const int length = total / 5;
      if (length < 2 || length > 4) return std::nullopt;
      for (int s = 0; s + length - 1 <= kAce; ++s) {
        if (valid_pair_wings(c, s, length)) {
          return Combo(category, s, length, cards);
        }
      }
      return std::nullopt;
    }
    case Category::FourTwoSolo: {
      int q = unique_rank_with(c, 4);
      if (total != 6 || q < 0) return std::nullopt;
      if (c[kBlackJoker] && c[kRedJoker]) return std::nullopt;
      return Combo(category, q, 1, cards);
    }
    case Category::FourTwoPair: {
      int q = unique_rank_with(c, 4);
      if (total != 8 || q < 0) return std::nullopt;
      int pairs = 0;
      for (int i = 0; i < kNumRanks; ++i) {
        if (i == q || c[i] == 0) continue;
        if (c[i] != 2) return std::nullopt;
        ++pairs;
      }
      if (pairs != 2) return std::nullopt;
      return Combo(category, q, 1, cards);
    }
  }
  return std::nullopt;
}

Combo Combo::make(Category category, const Cards& cards) {
  if (auto combo = try_make(category, cards)) return *combo;
  throw InvalidCombo("cards '" + encode_cards(cards) + "' do not form " +
                     std::string(category_name(category)));
}

std::optional<Combo> classify(const Cards& cards) {
  for (int k = 0; k < kNumCategories; ++k) {
    if (auto combo = Combo::try_make(static_cast<Category>(k), cards)) {
      return combo;
    }
  }
  return std::nullopt;
}

std::string action_text(const Combo& combo) {
  return combo.is_pass() ? std::string("pass") : encode_cards(combo.cards());
}

Combo parse_action(std::string_view text) {
  Cards cards = parse_cards(text == "pass" ? std::string_view() : text);
  if (cards.empty() && text != "pass") {
    throw InvalidCombo("empty action text");
  }
  if (auto combo = classify(cards)) return *combo;
  throw InvalidCombo("cards '" + std::string(text) + "' do not form a combo");
}

bool beats(const Combo& challenger, const Combo& dominant) {
  if (challenger.category() == Category::Rocket) {
    return dominant.category() != Category::Rocket;
  }
  if (dominant.category() == Category::Rocket) return false;
  if (challenger.category() == Category::Bomb) {
    return dominant.category() != Category::Bomb ||
           challenger.principal() > dominant.principal();
  }
  if (dominant.category() == Category::Bomb) return false;
  return challenger.category() == dominant.category() &&
         challenger.length() == dominant.length() &&
         challenger.size() == dominant.size() &&
         challenger.principal() > dominant.principal();
}

bool canonical_less(const Combo& a, const Combo& b) {
  auto order = [](Category c) {
    return c == Category::Pass ? kNumCategories : static_cast<int>(c);
  };
  if (order(a.category()) != order(b.category())) {
    return order(a.category()) < order(b.category());
  }
  if (a.principal() != b.principal()) return a.principal() < b.principal();
  return card_list_less(a.cards(), b.cards());
}

std::string describe(const Combo& combo) {
  if (combo.is_pass()) return "PASS";
  return std::string(category_name(combo.category())) + " " +
         encode_cards(combo.cards());
}

}  // namespace mastermind::dou
