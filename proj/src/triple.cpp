#include "partforge/triple.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace partforge {

AdmissibleTriple::AdmissibleTriple(unsigned i, unsigned j, unsigned k)
    : i_(i), j_(j), k_(k) {
  if (i + j + k == 0) {
    throw std::invalid_argument("triple (0,0,0) is not admissible: need i+j+k >= 1");
  }
}

AdmissibleTriple AdmissibleTriple::parse(std::string_view text) {
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
    unsigned value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw std::invalid_argument("malformed triple '" + std::string(text) +
                                  "': expected I,J,K with nonnegative integers");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (parts.size() != 3) {
    throw std::invalid_argument("malformed triple '" + std::string(text) +
                                "': expected exactly three components");
  }
  return AdmissibleTriple(parts[0], parts[1], parts[2]);
}

std::string AdmissibleTriple::to_string() const {
  return "(" + std::to_string(i_) + "," + std::to_string(j_) + "," + std::to_string(k_) + ")";
}

const char* to_string(Form form) { return form == Form::P ? "P" : "Q"; }

Form parse_form(std::string_view text) {
  if (text == "P") return Form::P;
  if (text == "Q") return Form::Q;
  throw std::invalid_argument("unknown form '" + std::string(text) + "': expected P or Q");
}

}  // namespace partforge
