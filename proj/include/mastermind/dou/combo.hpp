#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mastermind/dou/cards.hpp"

namespace mastermind::dou {

enum class Category : std::uint8_t {
  Pass,
  Solo,
  Pair,
  Trio,
  TrioSolo,
  TrioPair,
  SoloChain,
  PairChain,
  Airplane,
  AirplaneSoloWings,
  AirplanePairWings,
  FourTwoSolo,
  FourTwoPair,
  Bomb,
  Rocket,
};

inline constexpr int kNumCategories = 15;

std::string_view category_name(Category category);

class InvalidCombo : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Kicker conventions (these fix the size of the action space):
//  * TrioSolo: one card of any other rank, jokers included.
//  * TrioPair: a pair of any other rank.
//  * AirplaneSoloWings: 2..5 consecutive trios within 3..A plus as many
//    kicker cards from ranks outside the chain; at most three kickers of one
//    rank, never both jokers, and never a kicker trio directly adjacent to
//    the chain (that would be a longer airplane).
//  * AirplanePairWings: 2..4 consecutive trios plus that many distinct
//    pairs from ranks outside the chain.
//  * FourTwoSolo: a quad plus two kicker cards of other ranks (a pair is
//    allowed, both jokers are not).
//  * FourTwoPair: a quad plus two distinct pairs of other ranks.
// Kickers are part of a combo's identity.
class Combo {
 public:
  Combo() = default;

  static Combo pass() { return Combo(); }

  /// Validates that `cards` form a combo of `category`.
  static std::optional<Combo> try_make(Category category, const Cards& cards);
  /// Like try_make but throws InvalidCombo.
  static Combo make(Category category, const Cards& cards);

  /// No validation; for generators that build combos by construction.
  static Combo assemble(Category category, int principal, int length,
                        const Cards& cards) {
    return Combo(category, principal, length, cards);
  }

  Category category() const { return category_; }
  bool is_pass() const { return category_ == Category::Pass; }
  /// Rank index of the defining group: the single rank for solo/pair/trio/
  /// bomb and the kicker categories, the lowest rank for chains and
  /// airplanes. -1 for PASS.
  int principal() const { return principal_; }
  int principal_code() const {
    return principal_ < 0 ? 0 : rank_code(principal_);
  }
  /// Number of ranks in the chain (1 for non-chain categories, 0 for PASS).
  int length() const { return length_; }
  const Cards& cards() const { return cards_; }
  int size() const { return cards_.size(); }

  friend bool operator==(const Combo&, const Combo&) = default;

 private:
  Combo(Category category, int principal, int length, const Cards& cards)
      : category_(category),
        principal_(static_cast<std::int8_t>(principal)),
        length_(static_cast<std::int8_t>(length)),
        cards_(cards) {}

  Category category_ = Category::Pass;
  std::int8_t principal_ = -1;
  std::int8_t length_ = 0;
  Cards cards_;
};

/// The unique combo formed by exactly these cards, if any. Empty cards give
/// PASS.
std::optional<Combo> classify(const Cards& cards);

/// Action text: encode_cards of the combo, or "pass".
std::string action_text(const Combo& combo);

/// Inverse of action_text. Throws InvalidCombo (or a CardError) for text
/// that is not a combo.
Combo parse_action(std::string_view text);

/// Dominance: ROCKET beats everything; BOMB beats non-bombs and lower bombs;
/// otherwise same category and length with a higher principal rank.
/// Neither argument may be PASS.
bool beats(const Combo& challenger, const Combo& dominant);

/// Canonical action order: category (declaration order, PASS last), then
/// principal rank, then the ascending card list.
bool canonical_less(const Combo& a, const Combo& b);

/// Human-readable form, e.g. "SOLO_CHAIN 3 4 5 6 7".
std::string describe(const Combo& combo);

}  // namespace mastermind::dou
