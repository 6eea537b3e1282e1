#include <algorithm>

#include "mastermind/dou/state.hpp"

namespace mastermind::dou {

namespace {

using Counts = std::array<std::uint8_t, kNumRanks>;

Cards group(int rank, int n) {
  Cards c;
  c.add(rank, n);
  return c;
}

Cards run(int start, int length, int width) {
  Cards c;
  for (int r = start; r < start + length; ++r) c.add(r, width);
  return c;
}

bool run_available(const Counts& a, int start, int length, int width) {
  if (start + length - 1 > kAce) return false;
  for (int r = start; r < start + length; ++r) {
    if (a[r] < width) return false;
  }
  return true;
}

// Generators below emit combos of one category whose principal rank is at
// least `min_principal`; `length` == 0 means any chain length.

void gen_groups(Category category, int width, const Counts& a,
                int min_principal, std::vector<Combo>& out) {
  const int last = category == Category::Solo ? kNumRanks - 1 : kTwo;
  for (int r = min_principal; r <= last; ++r) {
    if (a[r] >= width) {
      out.push_back(Combo::assemble(category, r, 1, group(r, width)));
    }
  }
}

void gen_trio_kicker(Category category, const Counts& a, int min_principal,
                     std::vector<Combo>& out) {
  const int width = category == Category::TrioSolo ? 1 : 2;
  const int last = category == Category::TrioSolo ? kNumRanks - 1 : kTwo;
  for (int t = min_principal; t <= kTwo; ++t) {
    if (a[t] < 3) continue;
    for (int k = 0; k <= last; ++k) {
      if (k == t || a[k] < width) continue;
      Cards c = group(t, 3);
      c.add(k, width);
      out.push_back(Combo::assemble(category, t, 1, c));
    }
  }
}

void gen_chains(Category category, const Counts& a, int length,
                int min_principal, std::vector<Combo>& out) {
  const int width = category == Category::SoloChain   ? 1
                    : category == Category::PairChain ? 2
                                                      : 3;
  const int min_len = category == Category::SoloChain   ? 5
                      : category == Category::PairChain ? 3
                                                        : 2;
  const int max_len = kMaxHandSize / width;
  for (int s = min_principal; s <= kAce; ++s) {
    int len = 0;
    while (s + len <= kAce && a[s + len] >= width && len < max_len) {
      ++len;
      if (len >= min_len && (length == 0 || len == length)) {
        out.push_back(Combo::assemble(category, s, len, run(s, len, width)));
      }
    }
  }
}

void solo_wings(const Counts& a, int start, int length, int from,
                int remaining, Cards& acc, std::vector<Combo>& out) {
  if (remaining == 0) {
    if (acc.count(kBlackJoker) && acc.count(kRedJoker)) return;
    Cards cards = acc;
    cards += run(start, length, 3);
    out.push_back(
        Combo::assemble(Category::AirplaneSoloWings, start, length, cards));
    return;
  }
  for (int r = from; r < kNumRanks; ++r) {
    if (r >= start && r < start + length) continue;
    const bool adjacent = r <= kAce && (r == start - 1 || r == start + length);
    const int rule_cap = r >= kBlackJoker ? 1 : (adjacent ? 2 : 3);
    const int cap = std::min({rule_cap, static_cast<int>(a[r]), remaining});
    for (int n = 1; n <= cap; ++n) {
      acc.add(r, n);
      solo_wings(a, start, length, r + 1, remaining - n, acc, out);
      acc.remove(r, n);
    }
  }
}

void pair_wings(const Counts& a, int start, int length, int from,
                int remaining, Cards& acc, std::vector<Combo>& out) {
  if (remaining == 0) {
    Cards cards = acc;
    cards += run(start, length, 3);
    out.push_back(
        Combo::assemble(Category::AirplanePairWings, start, length, cards));
    return;
  }
  for (int r = from; r <= kTwo; ++r) {
    if ((r >= start && r < start + length) || a[r] < 2) continue;
    acc.add(r, 2);
    pair_wings(a, start, length, r + 1, remaining - 1, acc, out);
    acc.remove(r, 2);
  }
}

void gen_airplane_wings(Category category, const Counts& a, int length,
                        int min_principal, std::vector<Combo>& out) {
  const bool solo = category == Category::AirplaneSoloWings;
  const int max_len = solo ? 5 : 4;
  for (int len = 2; len <= max_len; ++len) {
    if (length != 0 && len != length) continue;
    for (int s = min_principal; s + len - 1 <= kAce; ++s) {
      if (!run_available(a, s, len, 3)) continue;
      Cards acc;
      if (solo) {
        solo_wings(a, s, len, 0, len, acc, out);
      } else {
        pair_wings(a, s, len, 0, len, acc, out);
      }
    }
  }
}

void gen_four_two(Category category, const Counts& a, int min_principal,
                  std::vector<Combo>& out) {
  for (int q = min_principal; q <= kTwo; ++q) {
    if (a[q] < 4) continue;
    if (category == Category::FourTwoSolo) {
      for (int x = 0; x < kNumRanks; ++x) {
        if (x == q || a[x] < 1) continue;
        for (int y = x; y < kNumRanks; ++y) {
          if (y == q || a[y] < (x == y ? 2 : 1)) continue;
          if (x == kBlackJoker && y == kRedJoker) continue;
          Cards c = group(q, 4);
          c.add(x);
          c.add(y);
          out.push_back(Combo::assemble(category, q, 1, c));
        }
      }
    } else {
      for (int x = 0; x <= kTwo; ++x) {
        if (x == q || a[x] < 2) continue;
        for (int y = x + 1; y <= kTwo; ++y) {
          if (y == q || a[y] < 2) continue;
          Cards c = group(q, 4);
          c.add(x, 2);
          c.add(y, 2);
          out.push_back(Combo::assemble(category, q, 1, c));
        }
      }
    }
  }
}

void gen_rocket(const Counts& a, std::vector<Combo>& out) {
  if (a[kBlackJoker] && a[kRedJoker]) {
    Cards c;
    c.add(kBlackJoker);
    c.add(kRedJoker);
    out.push_back(Combo::assemble(Category::Rocket, kBlackJoker, 1, c));
  }
}

void gen_category(Category category, const Counts& a, int length,
                  int min_principal, std::vector<Combo>& out) {
  switch (category) {
    case Category::Pass:
      break;
    case Category::Solo:
      gen_groups(category, 1, a, min_principal, out);
      break;
    case Category::Pair:
      gen_groups(category, 2, a, min_principal, out);
      break;
    case Category::Trio:
      gen_groups(category, 3, a, min_principal, out);
      break;
    case Category::Bomb:
      gen_groups(category, 4, a, min_principal, out);
      break;
    case Category::TrioSolo:
    case Category::TrioPair:
      gen_trio_kicker(category, a, min_principal, out);
      break;
    case Category::SoloChain:
    case Category::PairChain:
    case Category::Airplane:
      gen_chains(category, a, length, min_principal, out);
      break;
    case Category::AirplaneSoloWings:
    case Category::AirplanePairWings:
      gen_airplane_wings(category, a, length, min_principal, out);
      break;
    case Category::FourTwoSolo:
    case Category::FourTwoPair:
      gen_four_two(category, a, min_principal, out);
      break;
    case Category::Rocket:
      if (min_principal <= kBlackJoker) gen_rocket(a, out);
      break;
  }
}

}  // namespace

void generate_combos(const Cards& available, std::vector<Combo>& out) {
  for (int k = 1; k < kNumCategories; ++k) {
    gen_category(static_cast<Category>(k), available.counts(), 0, 0, out);
  }
}

void generate_beating(const Cards& available, const Combo& dominant,
                      std::vector<Combo>& out) {
  const Counts& a = available.counts();
  switch (dominant.category()) {
    case Category::Pass:
      generate_combos(available, out);
      return;
    case Category::Rocket:
      return;
    case Category::Bomb:
      gen_groups(Category::Bomb, 4, a, dominant.principal() + 1, out);
      gen_rocket(a, out);
      return;
    default:
      gen_category(dominant.category(), a, dominant.length(),
                   dominant.principal() + 1, out);
      gen_groups(Category::Bomb, 4, a, 0, out);
      gen_rocket(a, out);
      return;
  }
}

}  // namespace mastermind::dou
