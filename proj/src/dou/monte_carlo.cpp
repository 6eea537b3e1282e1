#include <array>

#include "mastermind/common/rng.hpp"
#include "mastermind/dou/agents.hpp"

namespace mastermind::dou {

namespace {

// The part of a DouState a playout needs, without history.
struct RolloutState {
  std::array<Cards, 3> hands;
  int seats = 3;
  int landlord = 0;
  int to_move = 0;
  bool has_dominant = false;
  Combo dominant;
  int passes = 0;

  Side side_of(int seat) const {
    return seat == landlord ? Side::Landlord : Side::Farmers;
  }

  // Returns the winning side once the mover empties their hand.
  std::optional<Side> play(const Combo& c) {
    const int seat = to_move;
    to_move = (to_move + 1) % seats;
    if (c.is_pass()) {
      if (++passes >= seats - 1) {
        has_dominant = false;
        passes = 0;
      }
      return std::nullopt;
    }
    hands[seat] -= c.cards();
    dominant = c;
    has_dominant = true;
    passes = 0;
    if (hands[seat].empty()) return side_of(seat);
    return std::nullopt;
  }
};

Side random_playout(RolloutState s, Rng& rng, std::vector<Combo>& buf) {
  while (true) {
    buf.clear();
    const Cards& hand = s.hands[s.to_move];
    Combo choice;
    if (s.has_dominant) {
      generate_beating(hand, s.dominant, buf);
      const std::size_t k = uniform_index(rng, buf.size() + 1);
      if (k < buf.size()) choice = buf[k];
    } else {
      generate_combos(hand, buf);
      choice = buf[uniform_index(rng, buf.size())];
    }
    if (auto winner = s.play(choice)) return *winner;
  }
}

}  // namespace

ScoredActions monte_carlo_policy(const DouState& state, int n_rollouts,
                                 std::uint64_t seed, bool visible) {
  if (n_rollouts < 1) throw std::invalid_argument("n_rollouts must be >= 1");
  const std::vector<Combo> legal = legal_actions(state);
  const std::size_t k = legal.size();
  const std::size_t total = std::max<std::size_t>(n_rollouts, k);
  const int me = state.to_move();
  const Side my_side = state.side_of(me);

  RolloutState base;
  base.seats = state.num_seats();
  base.landlord = state.landlord_seat();
  base.to_move = me;
  for (int s = 0; s < base.seats; ++s) base.hands[s] = state.hand(s);
  if (state.dominant()) {
    base.has_dominant = true;
    base.dominant = state.dominant()->combo;
  }
  base.passes = state.consecutive_passes();

  Cards unseen;
  std::vector<int> unseen_cards;
  if (!visible) {
    for (int s = 0; s < base.seats; ++s) {
      if (s != me) unseen += state.hand(s);
    }
    unseen_cards = unseen.sorted_indices();
  }

  std::vector<int> wins(k, 0), plays(k, 0);
  std::vector<Combo> buf;
  buf.reserve(4096);
  std::vector<int> deck;
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t a = i % k;
    Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(i)}));
    RolloutState s = base;
    if (!visible) {
      deck = unseen_cards;
      for (std::size_t j = deck.size(); j > 1; --j) {
        std::swap(deck[j - 1], deck[uniform_index(rng, j)]);
      }
      std::size_t pos = 0;
      for (int seat = 0; seat < s.seats; ++seat) {
        if (seat == me) continue;
        const int n = state.hand(seat).size();
        s.hands[seat] = Cards();
        for (int c = 0; c < n; ++c) s.hands[seat].add(deck[pos++]);
      }
    }
    ++plays[a];
    const std::optional<Side> early = s.play(legal[a]);
    const Side winner = early ? *early : random_playout(s, rng, buf);
    if (winner == my_side) ++wins[a];
  }

  ScoredActions out;
  for (std::size_t a = 0; a < k; ++a) {
    out.entries.emplace_back(legal[a], static_cast<double>(wins[a]) / plays[a]);
  }
  return out;
}

}  // namespace mastermind::dou
