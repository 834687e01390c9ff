#pragma once

#include <complex>
#include <concepts>
#include <vector>

#include "tdpp/errors.hpp"

namespace tdpp {

/// Slack applied to the closed admissibility predicates b - 2|a| >= 0 and
/// b + 2|a| <= 1, and to grid-based admissibility checks.
inline constexpr double kAdmissibilityTol = 1e-12;

/// Degree-one trigonometric symbol f(x) = b + 2|a| cos(2 pi x - phi).
///
/// The Fourier coefficient at +1 is a = |a| e^{i phi}, which places `a` on
/// the superdiagonal of the Toeplitz kernel. Every probability is invariant
/// under a <-> conj(a), so the orientation only matters for the sign of the
/// phase. The phase is kept in [0, 2 pi).
class TrigSymbolDeg1 {
 public:
  /// Validating constructor; throws Inadmissible when f leaves [0, 1].
  static TrigSymbolDeg1 make(double b, double a_mag, double a_phase = 0.0);

  double b() const { return b_; }
  double a_mag() const { return a_mag_; }
  double a_phase() const { return a_phase_; }
  std::complex<double> a() const { return std::polar(a_mag_, a_phase_); }

  static constexpr int degree() { return 1; }

  std::complex<double> fourier_coeff(long k) const;
  double evaluate(double x) const;

  friend bool operator==(const TrigSymbolDeg1&, const TrigSymbolDeg1&) = default;

 private:
  TrigSymbolDeg1(double b, double a_mag, double a_phase)
      : b_(b), a_mag_(a_mag), a_phase_(a_phase) {}

  double b_;
  double a_mag_;
  double a_phase_;
};

/// Symbol of 1 - f: constant 1 - b, same |a|, phase shifted by pi.
TrigSymbolDeg1 complement(const TrigSymbolDeg1& symbol);

/// Trigonometric polynomial of arbitrary degree, given by its nonnegative
/// Fourier coefficients c_0..c_m. Negative coefficients are the conjugates,
/// so f(x) = c_0 + 2 Re sum_{k>=1} c_k e^{-i 2 pi k x} is real.
class TrigSymbolGeneral {
 public:
  /// Throws Error when c_0 has a nonzero imaginary part or coeffs is empty.
  explicit TrigSymbolGeneral(std::vector<std::complex<double>> coeffs);
  explicit TrigSymbolGeneral(const TrigSymbolDeg1& symbol);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

  std::complex<double> fourier_coeff(long k) const;
  double evaluate(double x) const;

 private:
  std::vector<std::complex<double>> coeffs_;
};

/// Anything that can fill a Toeplitz kernel.
template <typename S>
concept FourierSymbol = requires(const S& s, long k) {
  { s.fourier_coeff(k) } -> std::convertible_to<std::complex<double>>;
  { s.degree() } -> std::convertible_to<int>;
};

inline std::complex<double> fourier_coeff(const TrigSymbolDeg1& s, long k) {
  return s.fourier_coeff(k);
}
inline std::complex<double> fourier_coeff(const TrigSymbolGeneral& s, long k) {
  return s.fourier_coeff(k);
}
inline double evaluate(const TrigSymbolDeg1& s, double x) { return s.evaluate(x); }

/// Grid check that min/max of f over `grid_size` uniform points of [0, 1)
/// lie in [-tol, 1 + tol].
bool admissible_general(const TrigSymbolGeneral& symbol, int grid_size = 10000,
                        double tol = kAdmissibilityTol);

}  // namespace tdpp
