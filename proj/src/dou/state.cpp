#include "mastermind/dou/state.hpp"

#include <algorithm>
#include <numeric>

#include "mastermind/common/rng.hpp"

namespace mastermind::dou {

std::string_view side_name(Side side) {
  return side == Side::Landlord ? "landlord" : "farmers";
}

IllegalAction::IllegalAction(std::string rule, const Combo& combo)
    : std::runtime_error("illegal action " + describe(combo) + ": " + rule),
      rule_(std::move(rule)) {}

DouState DouState::deal(std::uint64_t seed, int landlord_seat) {
  if (landlord_seat < 0 || landlord_seat > 2) {
    throw InvalidDeal("landlord seat out of range");
  }
  std::vector<int> deck = Cards::full_deck().sorted_indices();
  Rng rng(seed);
  for (std::size_t i = deck.size() - 1; i > 0; --i) {
    std::swap(deck[i], deck[uniform_index(rng, i + 1)]);
  }
  std::vector<Cards> hands(3);
  for (int i = 0; i < 51; ++i) hands[i / 17].add(deck[i]);
  for (int i = 51; i < kDeckSize; ++i) hands[landlord_seat].add(deck[i]);
  return from_hands(std::move(hands), landlord_seat, landlord_seat);
}

DouState DouState::from_hands(std::vector<Cards> hands, int landlord_seat,
                              int to_move) {
  const int seats = static_cast<int>(hands.size());
  if (seats < 2 || seats > 3) throw InvalidDeal("need 2 or 3 seats");
  if (landlord_seat < 0 || landlord_seat >= seats || to_move < 0 ||
      to_move >= seats) {
    throw InvalidDeal("seat index out of range");
  }
  Cards all;
  for (const Cards& h : hands) {
    if (h.size() > kMaxHandSize) throw HandTooLarge(h.size());
    all += h;  // throws MultiplicityExceeded on an impossible deck
  }
  DouState s;
  s.hands_ = std::move(hands);
  s.landlord_seat_ = landlord_seat;
  s.to_move_ = to_move;
  s.initial_total_ = all.size();
  return s;
}

int DouState::cards_in_history() const {
  int n = 0;
  for (const Play& p : history_) n += p.combo.size();
  return n;
}

std::optional<Side> is_terminal(const DouState& state) {
  for (int seat = 0; seat < state.num_seats(); ++seat) {
    if (state.hand(seat).empty()) return state.side_of(seat);
  }
  return std::nullopt;
}

DouState apply_unchecked(const DouState& state, const Combo& combo) {
  DouState next = state;
  const int seat = state.to_move_;
  next.history_.push_back(Play{seat, combo});
  if (combo.is_pass()) {
    if (++next.consecutive_passes_ >= state.num_seats() - 1) {
      next.dominant_.reset();
      next.consecutive_passes_ = 0;
    }
  } else {
    next.hands_[seat] -= combo.cards();
    next.dominant_ = Play{seat, combo};
    next.consecutive_passes_ = 0;
  }
  next.to_move_ = state.next_seat(seat);
  return next;
}

DouState apply_action(const DouState& state, const Combo& combo) {
  if (is_terminal(state)) throw TerminalState();
  if (combo.is_pass()) {
    if (!state.dominant()) throw IllegalAction("pass-when-leading", combo);
    return apply_unchecked(state, combo);
  }
  auto wellformed = Combo::try_make(combo.category(), combo.cards());
  if (!wellformed || !(*wellformed == combo)) {
    throw IllegalAction("malformed-combo", combo);
  }
  if (!state.hand(state.to_move()).contains(combo.cards())) {
    throw IllegalAction("not-in-hand", combo);
  }
  if (state.dominant() && !beats(combo, state.dominant()->combo)) {
    throw IllegalAction("does-not-beat", combo);
  }
  return apply_unchecked(state, combo);
}

void legal_actions_unsorted(const DouState& state, std::vector<Combo>& out) {
  if (is_terminal(state)) throw TerminalState();
  out.clear();
  const Cards& hand = state.hand(state.to_move());
  if (state.dominant()) {
    generate_beating(hand, state.dominant()->combo, out);
    out.push_back(Combo::pass());
  } else {
    generate_combos(hand, out);
  }
}

std::vector<Combo> legal_actions(const DouState& state) {
  std::vector<Combo> out;
  legal_actions_unsorted(state, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace mastermind::dou
