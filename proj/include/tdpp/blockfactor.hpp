#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "tdpp/symbol.hpp"

namespace tdpp {

/// Half-open rectangle [x_lo, x_hi) x [y_lo, y_hi) carrying a label 1..8.
struct LabeledBox {
  int label = 0;
  double x_lo = 0.0;
  double x_hi = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;

  double area() const { return (x_hi - x_lo) * (y_hi - y_lo); }
  bool contains(double u, double v) const {
    return x_lo <= u && u < x_hi && y_lo <= v && v < y_hi;
  }
};

enum class RegionCase { Empty, EqualRoots, DistinctRoots };

const char* to_string(RegionCase c);

/// Union of disjoint labeled boxes A in the unit square; h = I_A, or 1 - I_A
/// when `complemented` is set. For complemented regions the boxes are the
/// geometry built for 1 - f.
struct Region {
  std::vector<LabeledBox> boxes;
  RegionCase case_tag = RegionCase::Empty;
  bool complemented = false;
  TrigSymbolDeg1 source = TrigSymbolDeg1::make(0.0, 0.0);
};

using TransitionDigraph = std::map<int, std::set<int>>;

/// Equal-roots geometry with r = b / 2 on four columns of width 1/4.
Region region_case1(double b);
/// Distinct-roots geometry with C = 1 / (2 (r1 + r2)); zero-area boxes dropped.
Region region_case2(double r1, double r2);
/// Picks the construction for the symbol, going through 1 - f when b > 1/2.
Region build_region(const TrigSymbolDeg1& symbol);

/// h(u, v): membership in the box union, flipped for complemented regions.
bool h_eval(const Region& region, double u, double v);
/// Sum of box areas of the stored geometry (before any flip).
double region_area(const Region& region);

/// Successors of each label: the boxes whose x-interval contains the box's
/// y-interval. Throws AmbiguousTransition on a straddling y-interval.
TransitionDigraph transition_digraph(const Region& region);

/// Number of label sequences j_0..j_k admitted by the digraph.
std::uint64_t count_label_sequences(const TransitionDigraph& digraph, int k);
/// All label sequences of length k + 1, lexicographic.
std::vector<std::vector<int>> label_sequences(const TransitionDigraph& digraph, int k);

/// Emits h(Y_i, Y_{i+1}) for i = 1..n from n + 1 i.i.d. uniforms.
template <typename URBG>
std::vector<std::uint8_t> sample_factor(const Region& region, std::size_t n, URBG& rng) {
  std::vector<std::uint8_t> bits;
  if (n == 0) return bits;
  bits.reserve(n);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double prev = unif(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const double next = unif(rng);
    bits.push_back(h_eval(region, prev, next) ? 1 : 0);
    prev = next;
  }
  return bits;
}

}  // namespace tdpp
