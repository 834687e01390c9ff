#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tdpp {

enum class Constraint : unsigned char { Zero, One, Free };

/// Constraints on consecutive positions 0..size()-1 of a stationary 0/1
/// process. Text form: '1' One, '0' Zero, '.' Free.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<Constraint> constraints)
      : constraints_(std::move(constraints)) {}

  /// Throws std::invalid_argument on characters other than 0, 1 and '.'.
  static Pattern parse(std::string_view text);
  /// Pattern of `length` constraints taken from the low bits of `bits`
  /// (bit i set means position i is One, otherwise Zero).
  static Pattern from_bits(unsigned long bits, std::size_t length);
  static Pattern ones(std::size_t length);

  std::size_t size() const { return constraints_.size(); }
  bool empty() const { return constraints_.empty(); }
  Constraint operator[](std::size_t i) const { return constraints_[i]; }
  Constraint& operator[](std::size_t i) { return constraints_[i]; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  /// One <-> Zero, Free unchanged.
  Pattern flipped() const;
  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<Constraint> constraints_;
};

/// Every {Zero, One} pattern of exactly `length` positions, in binary order.
std::vector<Pattern> all_binary_patterns(std::size_t length);
/// Every {Zero, One, Free} pattern of exactly `length` positions.
std::vector<Pattern> all_ternary_patterns(std::size_t length);

}  // namespace tdpp
