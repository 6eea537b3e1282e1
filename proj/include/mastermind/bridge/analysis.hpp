#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mastermind/go/state.hpp"

namespace mastermind::bridge {

struct Candidate {
  go::GoMove move;
  int visits = 0;
  double win_rate = 0.5;    // black's view
  double score_lead = 0.0;  // black's view
  double prior = 0.0;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// One engine analysis, normalized to black's point of view with ownership
/// in GoState index order (row 1 first).
struct AnalysisRecord {
  std::vector<Candidate> candidates;
  std::vector<double> ownership;
  double win_rate = 0.5;
  double score_lead = 0.0;
  /// Bytes as received, for logging.
  std::string raw;
  friend bool operator==(const AnalysisRecord&, const AnalysisRecord&) = default;
};

/// Parses one kata-analyze style line:
///   info move D4 visits 120 winrate 0.46 scoreLead -0.8 prior 0.12 order 0
///   pv D4 Q16 info move ... ownership <size*size numbers, top row first>
/// Values are taken as reported for `to_move` and converted to black's view.
/// Throws MalformedResponse (with the raw line) on any defect: missing
/// fields, non-numbers, win rates outside [0,1], ownership outside [-1,1] or
/// of the wrong length. Never throws anything else.
AnalysisRecord parse_analysis_line(std::string_view line, int size,
                                   go::Color to_move);

/// Range and shape checks shared by every analysis source.
void validate_record(const AnalysisRecord& record, int size);

/// Renders a record back into the line format (black's view is converted to
/// `to_move`'s). Parsing the result gives back the record up to rounding in
/// the perspective flip.
std::string format_analysis_line(const AnalysisRecord& record, int size,
                                 go::Color to_move);

}  // namespace mastermind::bridge
