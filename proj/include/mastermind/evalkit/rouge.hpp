#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mastermind::evalkit {

/// Lowercased runs of letters and digits; whitespace and ASCII punctuation
/// separate tokens and are dropped. Bytes >= 0x80 count as letters.
std::vector<std::string> rouge_tokens(std::string_view text);

/// Sentences split at line breaks and after '.', '!' or '?' followed by
/// whitespace. Empty pieces are dropped.
std::vector<std::string> split_sentences(std::string_view text);

std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b);

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Sentence-free Rouge-L: P = LCS/|candidate|, R = LCS/|reference|, F1 their
/// harmonic mean. Two empty texts score 1.0; one empty text scores 0.0.
RougeScore rouge_l(std::string_view candidate, std::string_view reference);

/// Summary-level Rouge-L. For each reference sentence the union of its LCS
/// hits against every candidate sentence is collected; hits are clipped by
/// the token counts of both texts. Returns the F1 with the same empty-text
/// conventions as rouge_l.
RougeScore rouge_lsum(std::string_view candidate, std::string_view reference);
double rl_sum(std::string_view candidate, std::string_view reference);

}  // namespace mastermind::evalkit
