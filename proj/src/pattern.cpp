#include "tdpp/pattern.hpp"

#include <stdexcept>

namespace tdpp {

Pattern Pattern::parse(std::string_view text) {
  std::vector<Constraint> out;
  out.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '1': out.push_back(Constraint::One); break;
      case '0': out.push_back(Constraint::Zero); break;
      case '.': out.push_back(Constraint::Free); break;
      default:
        throw std::invalid_argument(std::string("invalid pattern character '") + ch +
                                    "' (expected 1, 0 or .)");
    }
  }
  return Pattern(std::move(out));
}

Pattern Pattern::from_bits(unsigned long bits, std::size_t length) {
  std::vector<Constraint> out(length);
  for (std::size_t i = 0; i < length; ++i)
    out[i] = (bits >> i) & 1UL ? Constraint::One : Constraint::Zero;
  return Pattern(std::move(out));
}

Pattern Pattern::ones(std::size_t length) {
  return Pattern(std::vector<Constraint>(length, Constraint::One));
}

Pattern Pattern::flipped() const {
  Pattern out = *this;
  for (auto& c : out.constraints_) {
    if (c == Constraint::One) c = Constraint::Zero;
    else if (c == Constraint::Zero) c = Constraint::One;
  }
  return out;
}

std::string Pattern::to_string() const {
  std::string s;
  s.reserve(size());
  for (auto c : constraints_) s.push_back(c == Constraint::One ? '1' : c == Constraint::Zero ? '0' : '.');
  return s;
}

std::vector<Pattern> all_binary_patterns(std::size_t length) {
  std::vector<Pattern> out;
  out.reserve(std::size_t{1} << length);
  for (unsigned long bits = 0; bits < (1UL << length); ++bits)
    out.push_back(Pattern::from_bits(bits, length));
  return out;
}

std::vector<Pattern> all_ternary_patterns(std::size_t length) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < length; ++i) count *= 3;
  std::vector<Pattern> out;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<Constraint> c(length);
    std::size_t rest = code;
    for (std::size_t i = 0; i < length; ++i, rest /= 3)
      c[i] = static_cast<Constraint>(rest % 3);
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace tdpp
