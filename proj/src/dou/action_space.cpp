#include "mastermind/dou/action_space.hpp"

#include <algorithm>

namespace mastermind::dou {

namespace {

Cards single(int rank, int n) {
  Cards c;
  c.add(rank, n);
  return c;
}

Cards run(int start, int length, int width) {
  Cards c;
  for (int r = start; r < start + length; ++r) c.add(r, width);
  return c;
}

// Multisets of `remaining` kicker cards over ranks >= `from`, for an airplane
// whose chain covers [start, start + length).
void solo_wing_kickers(int start, int length, int from, int remaining,
                       Cards& acc, std::vector<Combo>& out) {
  if (remaining == 0) {
    if (acc.count(kBlackJoker) && acc.count(kRedJoker)) return;
    Cards cards = acc;
    cards += run(start, length, 3);
    out.push_back(Combo::assemble(Category::AirplaneSoloWings, start, length,
                                  cards));
    return;
  }
  for (int r = from; r < kNumRanks; ++r) {
    if (r >= start && r < start + length) continue;
    const bool adjacent = r <= kAce && (r == start - 1 || r == start + length);
    const int cap = r >= kBlackJoker ? 1 : (adjacent ? 2 : 3);
    for (int n = 1; n <= std::min(cap, remaining); ++n) {
      acc.add(r, n);
      solo_wing_kickers(start, length, r + 1, remaining - n, acc, out);
      acc.remove(r, n);
    }
  }
}

void pair_wing_kickers(int start, int length, int from, int remaining,
                       Cards& acc, std::vector<Combo>& out) {
  if (remaining == 0) {
    Cards cards = acc;
    cards += run(start, length, 3);
    out.push_back(Combo::assemble(Category::AirplanePairWings, start, length,
                                  cards));
    return;
  }
  for (int r = from; r <= kTwo; ++r) {
    if (r >= start && r < start + length) continue;
    acc.add(r, 2);
    pair_wing_kickers(start, length, r + 1, remaining - 1, acc, out);
    acc.remove(r, 2);
  }
}

std::vector<Combo> build_action_space() {
  std::vector<Combo> out;
  out.push_back(Combo::pass());

  for (int r = 0; r < kNumRanks; ++r) {
    out.push_back(Combo::assemble(Category::Solo, r, 1, single(r, 1)));
  }
  for (int r = 0; r <= kTwo; ++r) {
    out.push_back(Combo::assemble(Category::Pair, r, 1, single(r, 2)));
    out.push_back(Combo::assemble(Category::Trio, r, 1, single(r, 3)));
    out.push_back(Combo::assemble(Category::Bomb, r, 1, single(r, 4)));
  }
  {
    Cards rocket;
    rocket.add(kBlackJoker);
    rocket.add(kRedJoker);
    out.push_back(Combo::assemble(Category::Rocket, kBlackJoker, 1, rocket));
  }

  for (int t = 0; t <= kTwo; ++t) {
    for (int k = 0; k < kNumRanks; ++k) {
      if (k == t) continue;
      Cards c = single(t, 3);
      c.add(k);
      out.push_back(Combo::assemble(Category::TrioSolo, t, 1, c));
    }
    for (int p = 0; p <= kTwo; ++p) {
      if (p == t) continue;
      Cards c = single(t, 3);
      c.add(p, 2);
      out.push_back(Combo::assemble(Category::TrioPair, t, 1, c));
    }
  }

  struct ChainTemplate {
    Category category;
    int width;
    int min_len;
    int max_len;
  };
  for (auto [category, width, min_len, max_len] :
       {ChainTemplate{Category::SoloChain, 1, 5, 12},
        ChainTemplate{Category::PairChain, 2, 3, 10},
        ChainTemplate{Category::Airplane, 3, 2, 6}}) {
    for (int len = min_len; len <= max_len; ++len) {
      for (int s = 0; s + len - 1 <= kAce; ++s) {
        out.push_back(Combo::assemble(category, s, len, run(s, len, width)));
      }
    }
  }

  for (int len = 2; len <= 5; ++len) {
    for (int s = 0; s + len - 1 <= kAce; ++s) {
      Cards acc;
      solo_wing_kickers(s, len, 0, len, acc, out);
    }
  }
  for (int len = 2; len <= 4; ++len) {
    for (int s = 0; s + len - 1 <= kAce; ++s) {
      Cards acc;
      pair_wing_kickers(s, len, 0, len, acc, out);
    }
  }

  for (int q = 0; q <= kTwo; ++q) {
    for (int a = 0; a < kNumRanks; ++a) {
      if (a == q) continue;
      for (int b = a; b < kNumRanks; ++b) {
        if (b == q) continue;
        if (a == b && a >= kBlackJoker) continue;
        if (a == kBlackJoker && b == kRedJoker) continue;
        Cards c = single(q, 4);
        c.add(a);
        c.add(b);
        out.push_back(Combo::assemble(Category::FourTwoSolo, q, 1, c));
      }
    }
    for (int a = 0; a <= kTwo; ++a) {
      if (a == q) continue;
      for (int b = a + 1; b <= kTwo; ++b) {
        if (b == q) continue;
        Cards c = single(q, 4);
        c.add(a, 2);
        c.add(b, 2);
        out.push_back(Combo::assemble(Category::FourTwoPair, q, 1, c));
      }
    }
  }

  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

const std::vector<Combo>& enumerate_all_actions() {
  static const std::vector<Combo> kAll = build_action_space();
  return kAll;
}

}  // namespace mastermind::dou
