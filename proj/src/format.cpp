#include "partforge/format.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace partforge {

namespace {

const char* kind_name(CoeffKind kind) {
  return kind == CoeffKind::Ogf ? "ogf" : "egf_numerator";
}

template <typename Value, typename ToString>
std::string serialize_values(const std::vector<Value>& values, OutputFormat format,
                             ToString to_str, nlohmann::json header) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Plain:
      for (std::size_t n = 0; n < values.size(); ++n) out << (n ? " " : "") << to_str(values[n]);
      out << "\n";
      break;
    case OutputFormat::BFile:
      for (std::size_t n = 0; n < values.size(); ++n) out << n << ' ' << to_str(values[n]) << '\n';
      break;
    case OutputFormat::Tsv:
      out << "n\tvalue\n";
      for (std::size_t n = 0; n < values.size(); ++n) out << n << '\t' << to_str(values[n]) << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::json doc = std::move(header);
      doc["values"] = nlohmann::json::array();
      for (const auto& v : values) doc["values"].push_back(to_str(v));
      out << doc.dump() << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "plain") return OutputFormat::Plain;
  if (text == "bfile") return OutputFormat::BFile;
  if (text == "tsv") return OutputFormat::Tsv;
  if (text == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

std::string serialize(const CoeffSequence& seq, OutputFormat format) {
  nlohmann::json header = {
      {"triple", {seq.triple.i(), seq.triple.j(), seq.triple.k()}},
      {"form", to_string(seq.form)},
      {"kind", kind_name(seq.kind)},
  };
  return serialize_values(seq.values, format, [](const mpz_class& v) { return v.get_str(); },
                          std::move(header));
}

std::string serialize(const WeightedSequence& seq, OutputFormat format) {
  nlohmann::json header = {
      {"triple", {seq.triple.i(), seq.triple.j(), seq.triple.k()}},
      {"form", "weighted"},
      {"v", seq.v.get_str()},
      {"kind", kind_name(CoeffKind::EgfNumerator)},
  };
  return serialize_values(seq.values, format, [](const mpq_class& v) { return v.get_str(); },
                          std::move(header));
}

std::string truncate_decimal(double x, int places) {
  // %.60f prints the exact binary expansion far enough for any |x| < 2^53,
  // so cutting the string truncates without a second rounding.
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.60f", x);
  std::string text(buf);
  const auto dot = text.find('.');
  text = text.substr(0, dot + 1 + places);
  if (places == 0) text.pop_back();
  if (text == "-0" || text.rfind("-0.", 0) == 0) {
    if (text.find_first_not_of("-0.") == std::string::npos) text.erase(0, 1);
  }
  return text;
}

std::string round_decimal(double x, int places) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", places, x);
  return buf;
}

}  // namespace partforge
