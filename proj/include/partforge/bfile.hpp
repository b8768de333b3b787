#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace partforge {

/// One "index value" line of an OEIS b-file.
struct BFileRecord {
  std::int64_t index;
  mpz_class value;

  bool operator==(const BFileRecord&) const = default;
};

/// Malformed or out-of-order b-file input; the message names the line.
class BFileError : public std::runtime_error {
 public:
  BFileError(std::size_t line, const std::string& what)
      : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses b-file text. Blank lines and lines starting with '#' are skipped;
/// every other line must hold exactly two integer tokens, and indices must
/// strictly increase.
std::vector<BFileRecord> parse_bfile(std::string_view text);

struct Mismatch {
  std::int64_t index;  ///< reference index
  mpz_class expected;  ///< reference value
  mpz_class actual;    ///< computed value
};

struct ComparisonReport {
  std::size_t matched_prefix_length = 0;
  std::size_t overlap_length = 0;
  std::optional<Mismatch> first_mismatch;
  std::int64_t offset_applied = 0;

  bool full_match() const { return !first_mismatch.has_value(); }
};

/// Compares computed[n] with the reference entry of index n + offset, over
/// every reference record that has a computed counterpart. Throws
/// std::invalid_argument when there is no such record.
ComparisonReport compare_sequence(std::span<const mpz_class> computed,
                                  std::span<const BFileRecord> reference, std::int64_t offset);

std::string render(const ComparisonReport& report);

}  // namespace partforge
