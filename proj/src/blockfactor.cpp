#include "tdpp/blockfactor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tdpp/recurrence.hpp"

namespace tdpp {
namespace {

// Band [lo, lo + height) clipped to `ceiling`; the clip only absorbs rounding
// where a band is meant to end exactly on a column edge.
LabeledBox make_box(int label, double x_lo, double x_hi, double y_lo, double height,
                    double ceiling) {
  return {label, x_lo, x_hi, y_lo, std::min(y_lo + height, ceiling)};
}

void drop_degenerate(std::vector<LabeledBox>& boxes) {
  std::erase_if(boxes, [](const LabeledBox& b) { return !(b.x_hi > b.x_lo && b.y_hi > b.y_lo); });
}

}  // namespace

const char* to_string(RegionCase c) {
  switch (c) {
    case RegionCase::Empty: return "empty";
    case RegionCase::EqualRoots: return "equal_roots";
    case RegionCase::DistinctRoots: return "distinct_roots";
  }
  return "unknown";
}

Region region_case1(double b) {
  if (!(b > 0.0 && b <= 0.5 + kAdmissibilityTol)) {
    std::ostringstream msg;
    msg << "equal-roots region needs 0 < b <= 1/2, got b = " << b;
    throw OutOfRange(msg.str());
  }
  const double r = std::min(0.5 * b, 0.25);
  Region region;
  region.case_tag = RegionCase::EqualRoots;
  region.boxes = {
      make_box(1, 0.00, 0.25, 0.00, r, 0.25), make_box(3, 0.00, 0.25, 0.50, r, 0.75),
      make_box(5, 0.00, 0.25, 0.75, r, 1.00), make_box(2, 0.25, 0.50, 0.25, r, 0.50),
      make_box(4, 0.25, 0.50, 0.50, r, 0.75), make_box(6, 0.25, 0.50, 0.75, r, 1.00),
      make_box(7, 0.50, 0.75, 0.50, r, 0.75), make_box(8, 0.75, 1.00, 0.75, r, 1.00),
  };
  region.source = TrigSymbolDeg1::make(b, 0.5 * b);
  return region;
}

Region region_case2(double r1, double r2) {
  if (!(r1 > 0.0 && r1 >= r2 && r2 >= 0.0)) {
    std::ostringstream msg;
    msg << "distinct-roots region needs r1 >= r2 >= 0 and r1 > 0, got r1 = " << r1
        << ", r2 = " << r2;
    throw OutOfRange(msg.str());
  }
  if (r1 + r2 > 0.5 + kAdmissibilityTol) {
    std::ostringstream msg;
    msg << "distinct-roots region needs r1 + r2 <= 1/2, got " << r1 + r2;
    throw OutOfRange(msg.str());
  }
  const double c = 1.0 / (2.0 * (r1 + r2));
  // column edges 0 < c1 <= c2 <= c3 <= 1
  const double c1 = std::min(c * r1, 0.5);
  const double c2 = 2.0 * c1;
  const double c3 = std::min(c2 + c * r2, 1.0);

  Region region;
  region.case_tag = RegionCase::DistinctRoots;
  region.boxes = {
      make_box(1, 0.0, c1, 0.0, r1, c1), make_box(3, 0.0, c1, c2, r2, c3),
      make_box(5, 0.0, c1, c3, r2, 1.0), make_box(2, c1, c2, c1, r1, c2),
      make_box(4, c1, c2, c2, r2, c3),   make_box(6, c1, c2, c3, r2, 1.0),
      make_box(7, c2, c3, c2, r2, c3),   make_box(8, c3, 1.0, c3, r2, 1.0),
  };
  drop_degenerate(region.boxes);
  region.source = TrigSymbolDeg1::make(r1 + r2, std::sqrt(r1 * r2));
  return region;
}

Region build_region(const TrigSymbolDeg1& symbol) {
  if (symbol.b() > 0.5) {
    Region region = build_region(complement(symbol));
    region.complemented = true;
    region.source = symbol;
    return region;
  }
  Region region;
  if (symbol.b() > 0.0) {
    const Roots roots = char_roots(symbol);
    region = roots.equal ? region_case1(symbol.b()) : region_case2(roots.r1, roots.r2);
  }
  region.source = symbol;
  return region;
}

bool h_eval(const Region& region, double u, double v) {
  const bool inside = std::any_of(region.boxes.begin(), region.boxes.end(),
                                  [&](const LabeledBox& box) { return box.contains(u, v); });
  return inside != region.complemented;
}

double region_area(const Region& region) {
  double area = 0.0;
  for (const auto& box : region.boxes) area += box.area();
  return area;
}

TransitionDigraph transition_digraph(const Region& region) {
  TransitionDigraph digraph;
  for (const auto& from : region.boxes) {
    auto& successors = digraph[from.label];
    const LabeledBox* column = nullptr;
    for (const auto& to : region.boxes) {
      const bool overlaps = from.y_lo < to.x_hi && to.x_lo < from.y_hi;
      if (!overlaps) continue;
      const bool contained = to.x_lo <= from.y_lo && from.y_hi <= to.x_hi;
      const bool same_column =
          column == nullptr || (column->x_lo == to.x_lo && column->x_hi == to.x_hi);
      if (!contained || !same_column) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "y-interval [" << from.y_lo << ", " << from.y_hi << ") of box " << from.label
            << " straddles x-columns";
        throw AmbiguousTransition(msg.str());
      }
      column = &to;
      successors.insert(to.label);
    }
  }
  return digraph;
}

std::uint64_t count_label_sequences(const TransitionDigraph& digraph, int k) {
  if (k < 0) return 0;
  std::map<int, std::uint64_t> ending;
  for (const auto& [label, _] : digraph) ending[label] = 1;
  for (int step = 0; step < k; ++step) {
    std::map<int, std::uint64_t> next;
    for (const auto& [label, count] : ending)
      for (int succ : digraph.at(label)) next[succ] += count;
    ending = std::move(next);
  }
  std::uint64_t total = 0;
  for (const auto& [_, count] : ending) total += count;
  return total;
}

std::vector<std::vector<int>> label_sequences(const TransitionDigraph& digraph, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0) return out;
  for (const auto& [label, _] : digraph) out.push_back({label});
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<int>> next;
    for (const auto& seq : out) {
      for (int succ : digraph.at(seq.back())) {
        next.push_back(seq);
        next.back().push_back(succ);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace tdpp
