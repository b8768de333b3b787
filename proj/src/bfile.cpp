#include "partforge/bfile.hpp"

#include <charconv>
#include <sstream>

namespace partforge {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && is_blank(line[pos])) ++pos;
    std::size_t end = pos;
    while (end < line.size() && !is_blank(line[end])) ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

bool is_integer_token(std::string_view token) {
  std::size_t start = (token.front() == '-' || token.front() == '+') ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t p = start; p < token.size(); ++p) {
    if (token[p] < '0' || token[p] > '9') return false;
  }
  return true;
}

}  // namespace

std::vector<BFileRecord> parse_bfile(std::string_view text) {
  std::vector<BFileRecord> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++line_no;
    pos = nl + 1;

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (nl == text.size()) break;
      continue;
    }
    if (tokens.size() != 2 || !is_integer_token(tokens[0]) || !is_integer_token(tokens[1])) {
      throw BFileError(line_no, "malformed b-file line (expected \"index value\")");
    }

    std::int64_t index = 0;
    std::string_view idx = tokens[0];
    if (idx.front() == '+') idx.remove_prefix(1);
    auto [end, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), index);
    if (ec != std::errc{} || end != idx.data() + idx.size()) {
      throw BFileError(line_no, "b-file index out of range");
    }
    std::string value_text(tokens[1].front() == '+' ? tokens[1].substr(1) : tokens[1]);
    mpz_class value(value_text, 10);

    if (!records.empty() && index <= records.back().index) {
      throw BFileError(line_no, "non-increasing index");
    }
    records.push_back({index, std::move(value)});
    if (nl == text.size()) break;
  }
  return records;
}

ComparisonReport compare_sequence(std::span<const mpz_class> computed,
                                  std::span<const BFileRecord> reference, std::int64_t offset) {
  ComparisonReport report;
  report.offset_applied = offset;
  for (const auto& record : reference) {
    const std::int64_t local = record.index - offset;
    if (local < 0 || local >= static_cast<std::int64_t>(computed.size())) continue;
    ++report.overlap_length;
    if (report.first_mismatch) continue;
    const mpz_class& actual = computed[static_cast<std::size_t>(local)];
    if (actual == record.value) {
      ++report.matched_prefix_length;
    } else {
      report.first_mismatch = Mismatch{record.index, record.value, actual};
    }
  }
  if (report.overlap_length == 0) {
    throw std::invalid_argument("compare_sequence: computed and reference ranges do not overlap");
  }
  return report;
}

std::string render(const ComparisonReport& report) {
  std::ostringstream out;
  out << "overlap " << report.overlap_length << "\n";
  out << "offset " << report.offset_applied << "\n";
  out << "matched_prefix " << report.matched_prefix_length << "\n";
  if (report.first_mismatch) {
    const auto& m = *report.first_mismatch;
    out << "first_mismatch index=" << m.index << " expected=" << m.expected.get_str()
        << " actual=" << m.actual.get_str() << "\n";
    out << "result MISMATCH\n";
  } else {
    out << "result MATCH\n";
  }
  return out.str();
}

}  // namespace partforge
