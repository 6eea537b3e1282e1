#include "mastermind/evalkit/rouge.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "mastermind/common/text.hpp"

namespace mastermind::evalkit {

namespace {

bool word_byte(unsigned char c) { return c >= 0x80 || std::isalnum(c); }

RougeScore from_counts(std::size_t hits, std::size_t cand, std::size_t ref) {
  if (cand == 0 && ref == 0) return {1.0, 1.0, 1.0};
  if (cand == 0 || ref == 0 || hits == 0) return {};
  RougeScore s;
  s.precision = static_cast<double>(hits) / cand;
  s.recall = static_cast<double>(hits) / ref;
  s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

// Indices into `a` that lie on one longest common subsequence with `b`.
std::vector<std::size_t> lcs_positions(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::vector<std::size_t>> t(n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      t[i][j] = a[i - 1] == b[j - 1] ? t[i - 1][j - 1] + 1
                                     : std::max(t[i - 1][j], t[i][j - 1]);
    }
  }
  std::vector<std::size_t> hits;
  for (std::size_t i = n, j = m; i > 0 && j > 0;) {
    if (a[i - 1] == b[j - 1]) {
      hits.push_back(i - 1);
      --i;
      --j;
    } else if (t[i - 1][j] >= t[i][j - 1]) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(hits.begin(), hits.end());
  return hits;
}

}  // namespace

std::vector<std::string> rouge_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (word_byte(c)) {
      cur += static_cast<char>(c < 0x80 ? std::tolower(c) : c);
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    const std::string_view t = trim(cur);
    if (!t.empty()) out.emplace_back(t);
    cur.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n' || c == '\r') {
      flush();
      continue;
    }
    cur += c;
    if ((c == '.' || c == '!' || c == '?') && i + 1 < text.size() &&
        std::isspace(static_cast<unsigned char>(text[i + 1]))) {
      flush();
    }
  }
  flush();
  return out;
}

std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

RougeScore rouge_l(std::string_view candidate, std::string_view reference) {
  const auto c = rouge_tokens(candidate);
  const auto r = rouge_tokens(reference);
  return from_counts(lcs_length(c, r), c.size(), r.size());
}

RougeScore rouge_lsum(std::string_view candidate, std::string_view reference) {
  std::vector<std::vector<std::string>> cand_sents, ref_sents;
  std::map<std::string, int> cand_left, ref_left;
  std::size_t cand_total = 0, ref_total = 0;
  for (const auto& s : split_sentences(candidate)) {
    cand_sents.push_back(rouge_tokens(s));
    for (const auto& t : cand_sents.back()) ++cand_left[t];
    cand_total += cand_sents.back().size();
  }
  for (const auto& s : split_sentences(reference)) {
    ref_sents.push_back(rouge_tokens(s));
    for (const auto& t : ref_sents.back()) ++ref_left[t];
    ref_total += ref_sents.back().size();
  }
  std::size_t hits = 0;
  for (const auto& ref : ref_sents) {
    std::vector<char> in_union(ref.size(), 0);
    for (const auto& cand : cand_sents) {
      for (std::size_t i : lcs_positions(ref, cand)) in_union[i] = 1;
    }
    for (std::size_t i = 0; i < ref.size(); ++i) {
      if (!in_union[i]) continue;
      int& c = cand_left[ref[i]];
      int& r = ref_left[ref[i]];
      if (c > 0 && r > 0) {
        --c;
        --r;
        ++hits;
      }
    }
  }
  return from_counts(hits, cand_total, ref_total);
}

double rl_sum(std::string_view candidate, std::string_view reference) {
  return rouge_lsum(candidate, reference).f1;
}

}  // namespace mastermind::evalkit
