#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mastermind::dou {

// Card ranks are stored as dense indices 0..14; the public integer code of a
// rank follows the DouZero-style table: 3..14 for 3..A, 17 for 2, 20 for the
// black joker and 30 for the red joker.
inline constexpr int kNumRanks = 15;
inline constexpr std::array<int, kNumRanks> kRankCodes = {
    3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 17, 20, 30};

inline constexpr int kAce = 11;
inline constexpr int kTwo = 12;
inline constexpr int kBlackJoker = 13;
inline constexpr int kRedJoker = 14;
inline constexpr int kDeckSize = 54;
inline constexpr int kMaxHandSize = 20;

constexpr int max_copies(int index) { return index >= kBlackJoker ? 1 : 4; }

class CardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownRank : public CardError {
 public:
  explicit UnknownRank(std::string_view token);
};

class MultiplicityExceeded : public CardError {
 public:
  explicit MultiplicityExceeded(int code);
};

class HandTooLarge : public CardError {
 public:
  explicit HandTooLarge(int size);
};

/// Rank index for an integer code; throws UnknownRank for codes outside the
/// table.
int rank_index(int code);
constexpr int rank_code(int index) { return kRankCodes[index]; }

/// Face label ("3".."10", "J", "Q", "K", "A", "2", "BJ", "RJ").
std::string_view rank_face(int index);

/// A multiset of cards: count per rank, at most four of a normal rank and one
/// of each joker.
class Cards {
 public:
  Cards() = default;

  static Cards from_codes(std::initializer_list<int> codes);
  static Cards full_deck();

  int count(int index) const { return counts_[index]; }
  const std::array<std::uint8_t, kNumRanks>& counts() const { return counts_; }
  int size() const;
  bool empty() const { return size() == 0; }

  /// Adds n copies of the rank; throws MultiplicityExceeded past the cap.
  void add(int index, int n = 1);
  /// Removes n copies; the caller guarantees availability.
  void remove(int index, int n = 1);

  bool contains(const Cards& other) const;
  Cards& operator+=(const Cards& other);
  Cards& operator-=(const Cards& other);

  /// Rank indices in ascending order, one entry per card.
  std::vector<int> sorted_indices() const;

  friend bool operator==(const Cards&, const Cards&) = default;
  friend auto operator<=>(const Cards&, const Cards&) = default;

 private:
  std::array<std::uint8_t, kNumRanks> counts_{};
};

using Hand = Cards;

/// Ascending, space-separated integer codes ("3 3 14"); empty for no cards.
std::string encode_cards(const Cards& cards);

/// Inverse of encode_cards. Throws UnknownRank or MultiplicityExceeded.
Cards parse_cards(std::string_view text);

/// Lexicographic comparison of the ascending card lists.
bool card_list_less(const Cards& a, const Cards& b);

}  // namespace mastermind::dou
