#include "tdpp/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace tdpp {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_phase(double phase) {
  double p = std::fmod(phase, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  if (p >= kTwoPi) p = 0.0;
  return p;
}

}  // namespace

TrigSymbolDeg1 TrigSymbolDeg1::make(double b, double a_mag, double a_phase) {
  if (!std::isfinite(b) || !std::isfinite(a_mag) || !std::isfinite(a_phase))
    throw Inadmissible("symbol parameters must be finite");
  if (a_mag < 0.0) throw Inadmissible("|a| must be nonnegative");
  if (b - 2.0 * a_mag < -kAdmissibilityTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "b - 2|a| < 0 (b = " << b << ", |a| = " << a_mag << "): f takes negative values";
    throw Inadmissible(msg.str());
  }
  if (b + 2.0 * a_mag > 1.0 + kAdmissibilityTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "b + 2|a| > 1 (b = " << b << ", |a| = " << a_mag << "): f exceeds 1";
    throw Inadmissible(msg.str());
  }
  return TrigSymbolDeg1(b, a_mag, reduce_phase(a_phase));
}

std::complex<double> TrigSymbolDeg1::fourier_coeff(long k) const {
  if (k == 0) return b_;
  if (k == 1) return a();
  if (k == -1) return std::conj(a());
  return 0.0;
}

double TrigSymbolDeg1::evaluate(double x) const {
  return b_ + 2.0 * a_mag_ * std::cos(kTwoPi * x - a_phase_);
}

TrigSymbolDeg1 complement(const TrigSymbolDeg1& symbol) {
  // -2|a| cos(t - phi) = 2|a| cos(t - (phi + pi))
  return TrigSymbolDeg1::make(1.0 - symbol.b(), symbol.a_mag(),
                              symbol.a_phase() + std::numbers::pi);
}

TrigSymbolGeneral::TrigSymbolGeneral(std::vector<std::complex<double>> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error("a symbol needs at least the constant coefficient");
  if (coeffs_.front().imag() != 0.0) throw Error("constant coefficient must be real");
}

TrigSymbolGeneral::TrigSymbolGeneral(const TrigSymbolDeg1& symbol)
    : coeffs_{symbol.b(), symbol.a()} {}

std::complex<double> TrigSymbolGeneral::fourier_coeff(long k) const {
  const auto m = static_cast<long>(coeffs_.size()) - 1;
  if (k > m || k < -m) return 0.0;
  return k >= 0 ? coeffs_[static_cast<std::size_t>(k)]
                : std::conj(coeffs_[static_cast<std::size_t>(-k)]);
}

double TrigSymbolGeneral::evaluate(double x) const {
  double value = coeffs_.front().real();
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    const double t = -kTwoPi * static_cast<double>(k) * x;
    value += 2.0 * (coeffs_[k] * std::complex<double>(std::cos(t), std::sin(t))).real();
  }
  return value;
}

bool admissible_general(const TrigSymbolGeneral& symbol, int grid_size, double tol) {
  if (grid_size < 2) throw Error("admissibility grid needs at least two points");
  double lo = symbol.evaluate(0.0);
  double hi = lo;
  for (int i = 1; i < grid_size; ++i) {
    const double v = symbol.evaluate(static_cast<double>(i) / grid_size);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return lo >= -tol && hi <= 1.0 + tol;
}

}  // namespace tdpp
