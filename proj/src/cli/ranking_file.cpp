#include <charconv>
#include <fstream>
#include <istream>

#include "vpfair/cli.hpp"
#include "vpfair/errors.hpp"

namespace vpfair::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

Ranking parse_ranking(std::istream& in) {
  std::vector<ViewpointLabel> items;
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view token = trim(line);
    if (token.empty()) continue;
    if (!seen_content && token == "label") {
      seen_content = true;
      continue;
    }
    seen_content = true;

    std::string_view digits = token;
    if (digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty()) {
      throw RankingParseError(line_no, "'" + std::string(token) + "' is not an integer label");
    }
    if (value < ViewpointLabel::kMin || value > ViewpointLabel::kMax) {
      throw RankingParseError(line_no, "label " + std::string(token) + " outside -3..+3");
    }
    items.emplace_back(value);
  }
  if (items.empty()) throw RankingParseError(0, "ranking file contains no labels");
  return Ranking(std::move(items));
}

Ranking load_ranking(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open ranking file '" + path.string() + "'");
  return parse_ranking(file);
}

}  // namespace vpfair::cli
