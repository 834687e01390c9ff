#include "tdpp/recurrence.hpp"

#include <algorithm>
#include <cmath>

namespace tdpp {

Roots char_roots(const TrigSymbolDeg1& symbol) {
  const double half_b = 0.5 * symbol.b();
  const double a = symbol.a_mag();
  Roots roots;
  // factored form keeps b = 2|a| inputs at an exact zero
  roots.discriminant = (half_b - a) * (half_b + a);
  const double s = std::sqrt(std::max(roots.discriminant, 0.0));
  roots.r1 = half_b + s;
  roots.r2 = half_b - s;
  // r1 r2 = |a|^2 recovers the small root without cancellation
  if (roots.r1 > 0.0 && s > 0.0) roots.r2 = a * a / roots.r1;
  roots.equal = std::abs(roots.r1 - roots.r2) <= kEqualRootTol;
  if (roots.equal) {
    roots.r1 = roots.r2 = half_b;
  } else {
    const double gap = roots.r1 - roots.r2;
    roots.C1 = roots.r1 * roots.r1 / gap;
    roots.C2 = -roots.r2 * roots.r2 / gap;
  }
  if (symbol.b() > 0.0) roots.C = 1.0 / (2.0 * (roots.r1 + roots.r2));
  return roots;
}

std::vector<double> d_recurrence(const TrigSymbolDeg1& symbol, int k_max) {
  std::vector<double> d;
  if (k_max < 0) return d;
  const double b = symbol.b();
  const double a2 = symbol.a_mag() * symbol.a_mag();
  d.reserve(static_cast<std::size_t>(k_max) + 1);
  d.push_back(b);
  if (k_max >= 1) d.push_back(b * b - a2);
  for (int k = 2; k <= k_max; ++k) d.push_back(b * d[k - 1] - a2 * d[k - 2]);
  return d;
}

double d_closed(const Roots& roots, double b, int k) {
  if (roots.equal) {
    const double r = 0.5 * b;
    return (k * r + 2.0 * r) * std::pow(r, k);
  }
  const double gap = roots.r1 - roots.r2;
  if (gap < kCancellationGuard) {
    // sum_{j=0}^{k+1} r1^j r2^{k+1-j}
    double sum = 0.0;
    double r1_pow = 1.0;
    for (int j = 0; j <= k + 1; ++j) {
      sum += r1_pow * std::pow(roots.r2, k + 1 - j);
      r1_pow *= roots.r1;
    }
    return sum;
  }
  return (std::pow(roots.r1, k + 2) - std::pow(roots.r2, k + 2)) / gap;
}

double d_step(const Roots& roots, double d_prev, int k) {
  return std::pow(roots.r1, k + 1) + roots.r2 * d_prev;
}

}  // namespace tdpp
