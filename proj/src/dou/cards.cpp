#include "mastermind/dou/cards.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "mastermind/common/text.hpp"

namespace mastermind::dou {

UnknownRank::UnknownRank(std::string_view token)
    : CardError("unknown card rank '" + std::string(token) + "'") {}

MultiplicityExceeded::MultiplicityExceeded(int code)
    : CardError("too many copies of card " + std::to_string(code)) {}

HandTooLarge::HandTooLarge(int size)
    : CardError("hand of " + std::to_string(size) + " cards exceeds " +
                std::to_string(kMaxHandSize)) {}

int rank_index(int code) {
  for (int i = 0; i < kNumRanks; ++i) {
    if (kRankCodes[i] == code) return i;
  }
  throw UnknownRank(std::to_string(code));
}

std::string_view rank_face(int index) {
  static constexpr std::array<std::string_view, kNumRanks> kFaces = {
      "3", "4", "5", "6", "7", "8", "9", "10",
      "J", "Q", "K", "A", "2", "BJ", "RJ"};
  return kFaces[index];
}

Cards Cards::from_codes(std::initializer_list<int> codes) {
  Cards out;
  for (int c : codes) out.add(rank_index(c));
  return out;
}

Cards Cards::full_deck() {
  Cards out;
  for (int i = 0; i < kNumRanks; ++i) out.counts_[i] = max_copies(i);
  return out;
}

int Cards::size() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

void Cards::add(int index, int n) {
  if (counts_[index] + n > max_copies(index)) {
    throw MultiplicityExceeded(rank_code(index));
  }
  counts_[index] = static_cast<std::uint8_t>(counts_[index] + n);
}

void Cards::remove(int index, int n) {
  counts_[index] = static_cast<std::uint8_t>(counts_[index] - n);
}

bool Cards::contains(const Cards& other) const {
  for (int i = 0; i < kNumRanks; ++i) {
    if (other.counts_[i] > counts_[i]) return false;
  }
  return true;
}

Cards& Cards::operator+=(const Cards& other) {
  for (int i = 0; i < kNumRanks; ++i) {
    if (other.counts_[i]) add(i, other.counts_[i]);
  }
  return *this;
}

Cards& Cards::operator-=(const Cards& other) {
  for (int i = 0; i < kNumRanks; ++i) counts_[i] -= other.counts_[i];
  return *this;
}

std::vector<int> Cards::sorted_indices() const {
  std::vector<int> out;
  out.reserve(kMaxHandSize);
  for (int i = 0; i < kNumRanks; ++i) {
    for (int k = 0; k < counts_[i]; ++k) out.push_back(i);
  }
  return out;
}

std::string encode_cards(const Cards& cards) {
  std::string out;
  for (int i = 0; i < kNumRanks; ++i) {
    for (int k = 0; k < cards.count(i); ++k) {
      if (!out.empty()) out += ' ';
      out += std::to_string(rank_code(i));
    }
  }
  return out;
}

Cards parse_cards(std::string_view text) {
  Cards out;
  for (std::string_view token : split_whitespace(text)) {
    int code = 0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), code);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
      throw UnknownRank(token);
    }
    int index = -1;
    for (int i = 0; i < kNumRanks; ++i) {
      if (kRankCodes[i] == code) index = i;
    }
    if (index < 0) throw UnknownRank(token);
    out.add(index);
  }
  return out;
}

bool card_list_less(const Cards& a, const Cards& b) {
  // Walk both ascending lists without materializing them.
  int ia = 0, ib = 0, ka = 0, kb = 0;
  auto advance = [](const Cards& c, int& i, int& k) {
    while (i < kNumRanks && k >= c.count(i)) {
      ++i;
      k = 0;
    }
  };
  while (true) {
    advance(a, ia, ka);
    advance(b, ib, kb);
    if (ia == kNumRanks || ib == kNumRanks) {
      return ia == kNumRanks && ib != kNumRanks;
    }
    if (ia != ib) return ia < ib;
    ++ka;
    ++kb;
  }
}

}  // namespace mastermind::dou
