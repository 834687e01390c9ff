#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "tdpp/pattern.hpp"
#include "tdpp/symbol.hpp"

namespace tdpp {

using KernelMatrix = Eigen::MatrixXcd;

/// Imaginary residue above which a determinant is rejected.
inline constexpr double kNonRealTol = 1e-9;
/// Prefix probabilities below this are treated as impossible histories.
inline constexpr double kUnderflowGuard = 1e-300;
/// Inclusion-exclusion oracle refuses more Zero constraints than this.
inline constexpr std::size_t kMaxOracleZeros = 20;

namespace detail {
std::complex<double> determinant(const Eigen::MatrixXcd& m);
double real_determinant(const Eigen::MatrixXcd& m);
void check_distinct(std::span<const long> positions);
}  // namespace detail

/// Entry (i, j) is the Fourier coefficient at positions[j] - positions[i].
template <FourierSymbol S>
KernelMatrix kernel_matrix(const S& symbol, std::span<const long> positions) {
  detail::check_distinct(positions);
  const auto n = static_cast<Eigen::Index>(positions.size());
  KernelMatrix k(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      k(i, j) = symbol.fourier_coeff(positions[j] - positions[i]);
  return k;
}

/// P[X_e = 1 for every e in positions]; 1 for the empty list.
template <FourierSymbol S>
double ones_probability(const S& symbol, std::span<const long> positions) {
  if (positions.empty()) return 1.0;
  return detail::real_determinant(kernel_matrix(symbol, positions));
}

/// Probability of a cylinder event with One, Zero and Free constraints,
/// computed as (-1)^|Z| det(K_W - I_Z) over the constrained positions W and
/// the Zero positions Z.
template <FourierSymbol S>
double pattern_probability(const S& symbol, const Pattern& pattern) {
  std::vector<long> positions;
  std::vector<bool> is_zero;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] == Constraint::Free) continue;
    positions.push_back(static_cast<long>(i));
    is_zero.push_back(pattern[i] == Constraint::Zero);
  }
  if (positions.empty()) return 1.0;
  KernelMatrix k = kernel_matrix(symbol, positions);
  int sign = 1;
  for (std::size_t i = 0; i < is_zero.size(); ++i) {
    if (!is_zero[i]) continue;
    const auto d = static_cast<Eigen::Index>(i);
    k(d, d) -= 1.0;
    sign = -sign;
  }
  return sign * detail::real_determinant(k);
}

/// Inclusion-exclusion oracle: sum over subsets S of the Zero positions of
/// (-1)^|S| P[ones on One u S].
template <FourierSymbol S>
double pattern_probability_ie(const S& symbol, const Pattern& pattern) {
  std::vector<long> ones;
  std::vector<long> zeros;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] == Constraint::One) ones.push_back(static_cast<long>(i));
    if (pattern[i] == Constraint::Zero) zeros.push_back(static_cast<long>(i));
  }
  if (zeros.size() > kMaxOracleZeros)
    throw TooManyZeros("inclusion-exclusion oracle limited to " +
                       std::to_string(kMaxOracleZeros) + " Zero positions");
  double total = 0.0;
  const std::uint32_t subsets = std::uint32_t{1} << zeros.size();
  std::vector<long> positions;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    positions = ones;
    int sign = 1;
    for (std::size_t z = 0; z < zeros.size(); ++z) {
      if (mask & (std::uint32_t{1} << z)) {
        positions.push_back(zeros[z]);
        sign = -sign;
      }
    }
    total += sign * ones_probability(symbol, positions);
  }
  return total;
}

/// Conditional probability of a One following the history summarised by
/// `ratio`, the last continuant ratio of the signed tridiagonal kernel.
/// Exposed for testing the sampler against direct determinants.
class WindowSampler {
 public:
  explicit WindowSampler(const TrigSymbolDeg1& symbol)
      : b_(symbol.b()), a2_(symbol.a_mag() * symbol.a_mag()) {}

  /// P[next bit = 1 | bits pushed so far].
  double prob_one() const { return started_ ? b_ - a2_ / ratio_ : b_; }

  /// Append a bit; throws DegenerateConditional if the extended history has
  /// numerically zero probability.
  void push(bool bit) {
    const double p1 = prob_one();
    const double conditional = bit ? p1 : 1.0 - p1;
    if (!(conditional >= kUnderflowGuard))
      throw DegenerateConditional("history probability underflowed at position " +
                                  std::to_string(length_));
    // ratio of consecutive signed continuants e_i / e_{i-1}
    ratio_ = bit ? conditional : -conditional;
    started_ = true;
    ++length_;
  }

  std::size_t length() const { return length_; }

 private:
  double b_;
  double a2_;
  double ratio_ = 1.0;
  bool started_ = false;
  std::size_t length_ = 0;
};

/// Exact sample of n consecutive sites by sequential conditioning.
template <typename URBG>
std::vector<std::uint8_t> sample_window(const TrigSymbolDeg1& symbol, std::size_t n,
                                        URBG& rng) {
  std::vector<std::uint8_t> bits;
  bits.reserve(n);
  WindowSampler sampler(symbol);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const bool bit = unif(rng) < sampler.prob_one();
    sampler.push(bit);
    bits.push_back(bit ? 1 : 0);
  }
  return bits;
}

}  // namespace tdpp
