#pragma once

#include <string>
#include <string_view>

#include "partforge/series.hpp"

namespace partforge {

enum class OutputFormat { Plain, BFile, Tsv, Json };

OutputFormat parse_output_format(std::string_view text);

/// Plain: values separated by single spaces on one line.
/// BFile: "index SP value LF" per entry (ASCII).
/// Tsv:   "n<TAB>value" rows under a header row.
/// Json:  object with triple, form, kind and values as decimal strings.
std::string serialize(const CoeffSequence& seq, OutputFormat format);
std::string serialize(const WeightedSequence& seq, OutputFormat format);

/// Fixed-point text of x with `places` decimals, truncated toward zero.
std::string truncate_decimal(double x, int places);
/// Same, rounded to nearest with ties to even (on the exact binary value).
std::string round_decimal(double x, int places);

}  // namespace partforge
