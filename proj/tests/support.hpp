#pragma once

// Test-only oracles and generators, independent of the library code paths
// they are used to check.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "tdpp/pattern.hpp"
#include "tdpp/symbol.hpp"

namespace tdpp::testing {

/// Leibniz expansion by recursive cofactors along the first row.
inline std::complex<double> leibniz_det(const Eigen::MatrixXcd& m) {
  const auto n = m.rows();
  if (n == 0) return 1.0;
  if (n == 1) return m(0, 0);
  std::complex<double> total = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::MatrixXcd minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    total += (j % 2 == 0 ? 1.0 : -1.0) * m(0, j) * leibniz_det(minor);
  }
  return total;
}

/// Uniformly random admissible degree-one symbol.
inline TrigSymbolDeg1 random_symbol(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double b = unit(rng);
  const double a_max = 0.5 * std::min(b, 1.0 - b);
  return TrigSymbolDeg1::make(b, a_max * unit(rng), 2.0 * std::numbers::pi * unit(rng));
}

/// Random pattern over {One, Zero, Free} of the given length.
inline Pattern random_pattern(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::vector<Constraint> c(length);
  for (auto& x : c) x = static_cast<Constraint>(pick(rng));
  return Pattern(std::move(c));
}

/// Point i of the 2-D additive recurrence (R2) low-discrepancy sequence.
inline std::pair<double, double> r2_point(std::size_t i) {
  constexpr double g = 1.32471795724474602596;  // plastic number
  constexpr double a1 = 1.0 / g;
  constexpr double a2 = 1.0 / (g * g);
  const double t = static_cast<double>(i) + 1.0;
  return {std::fmod(0.5 + a1 * t, 1.0), std::fmod(0.5 + a2 * t, 1.0)};
}

/// Long-run variance of the sliding-window indicator of `pattern` divided by
/// p (1 - p), for a one-dependent stationary process given by `prob`.
/// Windows more than pattern.size() sites apart are independent.
inline double sliding_variance_factor(const std::function<double(const Pattern&)>& prob,
                                      const Pattern& pattern) {
  const double p = prob(pattern);
  const std::size_t len = pattern.size();
  double cov_sum = 0.0;
  for (std::size_t lag = 1; lag <= len; ++lag) {
    std::vector<Constraint> joint(lag + len, Constraint::Free);
    bool consistent = true;
    for (std::size_t i = 0; i < len; ++i) joint[i] = pattern[i];
    for (std::size_t i = 0; i < len; ++i) {
      auto& slot = joint[lag + i];
      if (pattern[i] == Constraint::Free) continue;
      if (slot != Constraint::Free && slot != pattern[i]) consistent = false;
      slot = pattern[i];
    }
    const double both = consistent ? prob(Pattern(joint)) : 0.0;
    cov_sum += both - p * p;
  }
  return (p * (1.0 - p) + 2.0 * cov_sum) / (p * (1.0 - p));
}

/// Occurrences of `pattern` over all alignments of a bit sequence.
inline std::size_t count_sliding(const std::vector<std::uint8_t>& bits, const Pattern& pattern) {
  std::size_t hits = 0;
  for (std::size_t start = 0; start + pattern.size() <= bits.size(); ++start) {
    bool ok = true;
    for (std::size_t i = 0; i < pattern.size() && ok; ++i) {
      if (pattern[i] == Constraint::Free) continue;
      ok = (bits[start + i] == 1) == (pattern[i] == Constraint::One);
    }
    hits += ok ? 1 : 0;
  }
  return hits;
}

}  // namespace tdpp::testing
