#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mastermind/dou/combo.hpp"

namespace mastermind::dou {

enum class Side : std::uint8_t { Landlord, Farmers };

std::string_view side_name(Side side);

struct Play {
  int seat = 0;
  Combo combo;

  friend bool operator==(const Play&, const Play&) = default;
};

class TerminalState : public std::runtime_error {
 public:
  TerminalState() : std::runtime_error("game is already over") {}
};

class IllegalAction : public std::runtime_error {
 public:
  IllegalAction(std::string rule, const Combo& combo);
  /// Short name of the violated rule, e.g. "not-in-hand".
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

class InvalidDeal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable game position. Seats play in cyclic order; the landlord's side
/// wins if the landlord empties their hand first, the farmers' side if any
/// farmer does. Dominance clears once every other seat has passed in a row.
class DouState {
 public:
  /// Shuffles a full deck with `seed`: 17 cards per seat and the 3 bonus
  /// cards to `landlord_seat`, who leads.
  static DouState deal(std::uint64_t seed, int landlord_seat = 0);

  /// Arbitrary starting hands (2 or 3 seats), e.g. endgames or fixed deals.
  static DouState from_hands(std::vector<Cards> hands, int landlord_seat,
                             int to_move);

  int num_seats() const { return static_cast<int>(hands_.size()); }
  const Cards& hand(int seat) const { return hands_[seat]; }
  const std::vector<Cards>& hands() const { return hands_; }
  int landlord_seat() const { return landlord_seat_; }
  int to_move() const { return to_move_; }
  const std::vector<Play>& history() const { return history_; }
  /// The combo the mover must beat; empty when leading.
  const std::optional<Play>& dominant() const { return dominant_; }
  int consecutive_passes() const { return consecutive_passes_; }
  /// Cards in play at the start; conserved across transitions.
  int initial_total() const { return initial_total_; }

  Side side_of(int seat) const {
    return seat == landlord_seat_ ? Side::Landlord : Side::Farmers;
  }
  int next_seat(int seat) const { return (seat + 1) % num_seats(); }
  /// Cards already played.
  int cards_in_history() const;

  friend bool operator==(const DouState&, const DouState&) = default;

 private:
  friend DouState apply_action(const DouState&, const Combo&);
  friend DouState apply_unchecked(const DouState&, const Combo&);

  std::vector<Cards> hands_;
  int landlord_seat_ = 0;
  int to_move_ = 0;
  std::vector<Play> history_;
  std::optional<Play> dominant_;
  int consecutive_passes_ = 0;
  int initial_total_ = 0;
};

/// Winner, once some hand is empty.
std::optional<Side> is_terminal(const DouState& state);

/// Legal combos for the mover in canonical order; PASS (last) only when
/// following. Throws TerminalState.
std::vector<Combo> legal_actions(const DouState& state);

/// Same set as legal_actions, written into `out` without the final sort.
/// Used on hot rollout paths.
void legal_actions_unsorted(const DouState& state, std::vector<Combo>& out);

/// Plays `combo` for the mover. Throws IllegalAction naming the rule, or
/// TerminalState.
DouState apply_action(const DouState& state, const Combo& combo);

/// apply_action without legality checks, for combos taken from
/// legal_actions.
DouState apply_unchecked(const DouState& state, const Combo& combo);

/// All combos formed from `available` (no dominance filter), unsorted.
void generate_combos(const Cards& available, std::vector<Combo>& out);

/// Combos from `available` that beat `dominant`, unsorted.
void generate_beating(const Cards& available, const Combo& dominant,
                      std::vector<Combo>& out);

}  // namespace mastermind::dou
