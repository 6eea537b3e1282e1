#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mastermind {

std::vector<std::string_view> split_whitespace(std::string_view text);
std::string_view trim(std::string_view text);
bool starts_with(std::string_view text, std::string_view prefix);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);

/// Like format_number but always carries a sign ("+5", "-1.5", "+0").
std::string format_signed(double value);

/// Strict full-string number parse; returns false on any trailing garbage.
bool parse_number(std::string_view text, double& out);
bool parse_int(std::string_view text, long long& out);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace mastermind
