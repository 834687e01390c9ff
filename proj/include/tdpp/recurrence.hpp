#pragma once

#include <optional>
#include <vector>

#include "tdpp/symbol.hpp"

namespace tdpp {

/// Absolute threshold on |r1 - r2| below which the roots count as equal.
inline constexpr double kEqualRootTol = 1e-12;
/// Below this root gap the closed form switches to the divided-difference sum.
inline constexpr double kCancellationGuard = 1e-6;

/// Roots of r^2 - b r + |a|^2 = 0 and the constants derived from them.
struct Roots {
  double r1 = 0.0;  ///< larger root
  double r2 = 0.0;  ///< smaller root
  double discriminant = 0.0;  ///< b^2/4 - |a|^2
  bool equal = false;
  std::optional<double> C;   ///< 1 / (2 (r1 + r2)), only when b > 0
  std::optional<double> C1;  ///< r1^2 / (r1 - r2), distinct roots only
  std::optional<double> C2;  ///< -r2^2 / (r1 - r2), distinct roots only
};

Roots char_roots(const TrigSymbolDeg1& symbol);

/// D_0..D_{k_max} from D_k = b D_{k-1} - |a|^2 D_{k-2}.
std::vector<double> d_recurrence(const TrigSymbolDeg1& symbol, int k_max);

/// D_k from the roots: (k r + 2 r) r^k with r = b / 2 for equal roots,
/// otherwise (r1^{k+2} - r2^{k+2}) / (r1 - r2).
double d_closed(const Roots& roots, double b, int k);

/// D_k = r1^{k+1} + r2 D_{k-1}.
double d_step(const Roots& roots, double d_prev, int k);

}  // namespace tdpp
