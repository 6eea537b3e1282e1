#include "mastermind/bridge/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "mastermind/bridge/errors.hpp"
#include "mastermind/common/text.hpp"

namespace mastermind::bridge {

namespace {

bool is_list_end(std::string_view t) {
  return t == "info" || t == "ownership" || t == "ownershipStdev" ||
         t == "pvVisits" || t == "pvEdgeVisits" || t == "pv";
}

double need_number(std::string_view token, const char* field,
                   const std::string& raw) {
  double v = 0.0;
  if (!parse_number(token, v)) {
    throw MalformedResponse(std::string("field ") + field + " is not a number: '" +
                                std::string(token) + "'",
                            raw);
  }
  return v;
}

struct RawCandidate {
  Candidate c;
  bool has_move = false, has_visits = false, has_winrate = false;
  int order = -1;
};

AnalysisRecord parse_impl(std::string_view line, int size, go::Color to_move) {
  const std::string raw(line);
  const auto tokens = split_whitespace(line);
  std::vector<RawCandidate> cands;
  std::vector<double> ownership;
  bool has_ownership = false;
  const double sign = to_move == go::Color::White ? -1.0 : 1.0;
  std::size_t i = 0;
  auto value = [&](const char* field) -> std::string_view {
    if (i + 1 >= tokens.size()) {
      throw MalformedResponse(std::string("field ") + field + " has no value",
                              raw);
    }
    return tokens[++i];
  };
  for (; i < tokens.size(); ++i) {
    const std::string_view t = tokens[i];
    if (t == "info") {
      cands.emplace_back();
      continue;
    }
    if (t == "ownership") {
      if (has_ownership) throw MalformedResponse("ownership given twice", raw);
      has_ownership = true;
      while (i + 1 < tokens.size() && !is_list_end(tokens[i + 1])) {
        ownership.push_back(need_number(tokens[++i], "ownership", raw));
      }
      continue;
    }
    if (t == "pv" || t == "pvVisits" || t == "pvEdgeVisits" ||
        t == "ownershipStdev") {
      while (i + 1 < tokens.size() && !is_list_end(tokens[i + 1])) ++i;
      continue;
    }
    if (cands.empty()) {
      throw MalformedResponse("data before the first 'info': '" +
                                  std::string(t) + "'",
                              raw);
    }
    RawCandidate& rc = cands.back();
    if (t == "move") {
      const std::string_view mv = value("move");
      rc.has_move = true;
      if (mv == "pass" || mv == "PASS") {
        rc.c.move = go::GoMove::pass(to_move);
      } else {
        auto p = go::parse_point(mv, size);
        if (!p) {
          throw MalformedResponse("bad move '" + std::string(mv) + "'", raw);
        }
        rc.c.move = go::GoMove::play(to_move, *p);
      }
    } else if (t == "visits") {
      long long v = 0;
      const std::string_view text = value("visits");
      if (!parse_int(text, v) || v < 0 || v > 2000000000LL) {
        throw MalformedResponse("bad visits '" + std::string(text) + "'", raw);
      }
      rc.c.visits = static_cast<int>(v);
      rc.has_visits = true;
    } else if (t == "winrate") {
      const double w = need_number(value("winrate"), "winrate", raw);
      if (w < 0.0 || w > 1.0) {
        throw MalformedResponse("winrate " + format_number(w) +
                                    " outside [0,1]",
                                raw);
      }
      rc.c.win_rate = to_move == go::Color::White ? 1.0 - w : w;
      rc.has_winrate = true;
    } else if (t == "scoreLead") {
      rc.c.score_lead = sign * need_number(value("scoreLead"), "scoreLead", raw);
    } else if (t == "prior") {
      rc.c.prior = need_number(value("prior"), "prior", raw);
    } else if (t == "order") {
      long long o = 0;
      if (!parse_int(value("order"), o)) {
        throw MalformedResponse("bad order", raw);
      }
      rc.order = static_cast<int>(o);
    } else {
      value("unknown");  // every other per-move field is a single value
    }
  }
  if (cands.empty()) throw MalformedResponse("no move candidates", raw);
  if (!has_ownership) throw MalformedResponse("ownership missing", raw);
  const std::size_t cells = static_cast<std::size_t>(size) * size;
  if (ownership.size() != cells) {
    throw MalformedResponse("ownership has " + std::to_string(ownership.size()) +
                                " values, expected " + std::to_string(cells),
                            raw);
  }
  AnalysisRecord rec;
  rec.raw = raw;
  rec.ownership.assign(cells, 0.0);
  for (std::size_t k = 0; k < cells; ++k) {
    const int top_row = static_cast<int>(k) / size;
    const int col = static_cast<int>(k) % size;
    const int row_from_bottom = size - 1 - top_row;
    rec.ownership[static_cast<std::size_t>(row_from_bottom) * size + col] =
        sign * ownership[k];
  }
  std::size_t best = 0;
  bool best_by_order = false;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    const RawCandidate& rc = cands[k];
    if (!rc.has_move || !rc.has_visits || !rc.has_winrate) {
      throw MalformedResponse("candidate " + std::to_string(k) +
                                  " lacks move, visits or winrate",
                              raw);
    }
    rec.candidates.push_back(rc.c);
    if (rc.order == 0 && !best_by_order) {
      best = k;
      best_by_order = true;
    } else if (!best_by_order && rc.c.visits > cands[best].c.visits) {
      best = k;
    }
  }
  rec.win_rate = cands[best].c.win_rate;
  rec.score_lead = cands[best].c.score_lead;
  validate_record(rec, size);
  return rec;
}

}  // namespace

void validate_record(const AnalysisRecord& record, int size) {
  const std::size_t cells = static_cast<std::size_t>(size) * size;
  if (record.ownership.size() != cells) {
    throw MalformedResponse("ownership has " +
                                std::to_string(record.ownership.size()) +
                                " values, expected " + std::to_string(cells),
                            record.raw);
  }
  for (double v : record.ownership) {
    if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
      throw MalformedResponse("ownership value " + format_number(v) +
                                  " outside [-1,1]",
                              record.raw);
    }
  }
  if (!(record.win_rate >= 0.0 && record.win_rate <= 1.0)) {
    throw MalformedResponse("winrate outside [0,1]", record.raw);
  }
  if (!std::isfinite(record.score_lead)) {
    throw MalformedResponse("score lead is not finite", record.raw);
  }
  for (const Candidate& c : record.candidates) {
    if (!(c.win_rate >= 0.0 && c.win_rate <= 1.0) ||
        !std::isfinite(c.score_lead) || !std::isfinite(c.prior)) {
      throw MalformedResponse("candidate values out of range", record.raw);
    }
  }
}

AnalysisRecord parse_analysis_line(std::string_view line, int size,
                                   go::Color to_move) {
  try {
    return parse_impl(line, size, to_move);
  } catch (const MalformedResponse&) {
    throw;
  } catch (const std::exception& e) {
    throw MalformedResponse(e.what(), std::string(line));
  }
}

std::string format_analysis_line(const AnalysisRecord& record, int size,
                                 go::Color to_move) {
  const double sign = to_move == go::Color::White ? -1.0 : 1.0;
  std::string out;
  int order = 0;
  for (const Candidate& c : record.candidates) {
    if (!out.empty()) out += ' ';
    out += "info move ";
    out += c.move.is_pass() ? "pass" : go::point_text(*c.move.point);
    out += " visits " + std::to_string(c.visits);
    out += " winrate " +
           format_number(to_move == go::Color::White ? 1.0 - c.win_rate
                                                     : c.win_rate);
    out += " scoreLead " + format_number(sign * c.score_lead);
    out += " prior " + format_number(c.prior);
    out += " order " + std::to_string(order++);
    out += " pv ";
    out += c.move.is_pass() ? "pass" : go::point_text(*c.move.point);
  }
  out += " ownership";
  for (int top_row = 0; top_row < size; ++top_row) {
    const int row = size - 1 - top_row;
    for (int col = 0; col < size; ++col) {
      out += ' ';
      out += format_number(sign *
                           record.ownership[static_cast<std::size_t>(row) * size + col]);
    }
  }
  return out;
}

}  // namespace mastermind::bridge
