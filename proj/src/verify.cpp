#include "tdpp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <thread>

#include "tdpp/determinantal.hpp"
#include "tdpp/recurrence.hpp"

namespace tdpp {
namespace {

bool interval_within(double lo, double hi, double outer_lo, double outer_hi) {
  return outer_lo <= lo && hi <= outer_hi;
}

bool intervals_overlap(double lo, double hi, double other_lo, double other_hi) {
  return other_lo < hi && lo < other_hi;
}

}  // namespace

const Eigen::MatrixXd& TransferSystem::matrix(Constraint c) const {
  switch (c) {
    case Constraint::One: return flip ? m_zero : m_one;
    case Constraint::Zero: return flip ? m_one : m_zero;
    case Constraint::Free: break;
  }
  return m_free;
}

Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> cell_membership(
    const Region& region, const std::vector<double>& cuts) {
  const auto p = static_cast<Eigen::Index>(cuts.size()) - 1;
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> inside;
  inside.setConstant(p, p, false);
  for (Eigen::Index s = 0; s < p; ++s) {
    for (Eigen::Index t = 0; t < p; ++t) {
      const double x_lo = cuts[s], x_hi = cuts[s + 1];
      const double y_lo = cuts[t], y_hi = cuts[t + 1];
      for (const auto& box : region.boxes) {
        const bool overlaps = intervals_overlap(x_lo, x_hi, box.x_lo, box.x_hi) &&
                              intervals_overlap(y_lo, y_hi, box.y_lo, box.y_hi);
        if (!overlaps) continue;
        const bool covered = interval_within(x_lo, x_hi, box.x_lo, box.x_hi) &&
                             interval_within(y_lo, y_hi, box.y_lo, box.y_hi);
        if (!covered) {
          std::ostringstream msg;
          msg.precision(17);
          msg << "cell [" << x_lo << ", " << x_hi << ") x [" << y_lo << ", " << y_hi
              << ") is partially covered by box " << box.label;
          throw PartitionMismatch(msg.str());
        }
        inside(s, t) = true;
      }
    }
  }
  return inside;
}

TransferSystem build_transfer(const Region& region) {
  TransferSystem ts;
  ts.flip = region.complemented;
  std::vector<double> cuts{0.0, 1.0};
  for (const auto& box : region.boxes) {
    cuts.insert(cuts.end(), {box.x_lo, box.x_hi, box.y_lo, box.y_hi});
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  ts.breakpoints = cuts;

  const auto p = static_cast<Eigen::Index>(cuts.size()) - 1;
  ts.lengths.resize(p);
  for (Eigen::Index s = 0; s < p; ++s) ts.lengths(s) = cuts[s + 1] - cuts[s];

  ts.inside = cell_membership(region, cuts);

  ts.m_one.setZero(p, p);
  ts.m_zero.setZero(p, p);
  ts.m_free.resize(p, p);
  for (Eigen::Index s = 0; s < p; ++s) {
    for (Eigen::Index t = 0; t < p; ++t) {
      ts.m_free(s, t) = ts.lengths(t);
      (ts.inside(s, t) ? ts.m_one : ts.m_zero)(s, t) = ts.lengths(t);
    }
  }
  return ts;
}

double factor_pattern_probability(const TransferSystem& transfer, const Pattern& pattern) {
  Eigen::RowVectorXd mass = transfer.lengths.transpose();
  for (std::size_t i = 0; i < pattern.size(); ++i) mass = mass * transfer.matrix(pattern[i]);
  return mass.sum();
}

double label_path_mass(const Region& region, const TransferSystem& transfer,
                       const std::vector<int>& labels) {
  const Eigen::Index p = transfer.intervals();
  const auto& cuts = transfer.breakpoints;
  Eigen::RowVectorXd mass = transfer.lengths.transpose();
  for (int label : labels) {
    const auto box = std::find_if(region.boxes.begin(), region.boxes.end(),
                                  [&](const LabeledBox& b) { return b.label == label; });
    if (box == region.boxes.end())
      throw OutOfRange("region has no box labeled " + std::to_string(label));
    Eigen::MatrixXd step = Eigen::MatrixXd::Zero(p, p);
    for (Eigen::Index s = 0; s < p; ++s) {
      if (!interval_within(cuts[s], cuts[s + 1], box->x_lo, box->x_hi)) continue;
      for (Eigen::Index t = 0; t < p; ++t)
        if (interval_within(cuts[t], cuts[t + 1], box->y_lo, box->y_hi))
          step(s, t) = transfer.lengths(t);
    }
    mass = mass * step;
  }
  return mass.sum();
}

void ComparisonReport::record(std::string pattern, double lhs, double rhs) {
  const double diff = std::abs(lhs - rhs);
  // a NaN sticks and fails the report
  if (std::isnan(diff) || diff > max_abs_diff) max_abs_diff = diff;
  diffs.push_back({std::move(pattern), lhs, rhs, diff});
}

void ComparisonReport::finish() { pass = max_abs_diff <= tolerance; }

namespace {

ComparisonReport make_report(const TrigSymbolDeg1& symbol, int max_len, double tol) {
  ComparisonReport report;
  report.b = symbol.b();
  report.a_mag = symbol.a_mag();
  report.a_phase = symbol.a_phase();
  report.max_len = max_len;
  report.tolerance = tol;
  return report;
}

void check_max_len(int max_len) {
  if (max_len < 1 || max_len > 12)
    throw OutOfRange("pattern window length must be in [1, 12], got " + std::to_string(max_len));
}

}  // namespace

ComparisonReport compare_patterns(const TrigSymbolDeg1& symbol, int max_len, double tol,
                                  bool with_free) {
  check_max_len(max_len);
  const TransferSystem transfer = build_transfer(build_region(symbol));
  ComparisonReport report = make_report(symbol, max_len, tol);
  for (int len = 1; len <= max_len; ++len) {
    const auto patterns = with_free ? all_ternary_patterns(static_cast<std::size_t>(len))
                                    : all_binary_patterns(static_cast<std::size_t>(len));
    for (const auto& p : patterns)
      report.record(p.to_string(), factor_pattern_probability(transfer, p),
                    pattern_probability(symbol, p));
  }
  report.finish();
  return report;
}

std::vector<ComparisonReport> compare_sweep(const std::vector<TrigSymbolDeg1>& symbols,
                                            int max_len, double tol, unsigned threads) {
  check_max_len(max_len);
  std::vector<ComparisonReport> reports(symbols.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(symbols.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < symbols.size(); i = next++) {
      try {
        reports[i] = compare_patterns(symbols[i], max_len, tol);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

ComparisonReport one_dependence_check(const PatternProbability& prob, int max_len, double tol) {
  check_max_len(max_len);
  ComparisonReport report;
  report.max_len = max_len;
  report.tolerance = tol;
  for (int left = 1; left < max_len; ++left) {
    for (int right = 1; left + right <= max_len; ++right) {
      const auto lefts = all_binary_patterns(static_cast<std::size_t>(left));
      const auto rights = all_binary_patterns(static_cast<std::size_t>(right));
      std::vector<double> p_left, p_right;
      for (const auto& p : lefts) p_left.push_back(prob(p));
      for (const auto& q : rights) p_right.push_back(prob(q));
      // distance between the last left site and the first right site
      for (int distance = 1; left + (distance - 1) + right <= max_len; ++distance) {
        for (std::size_t i = 0; i < lefts.size(); ++i) {
          for (std::size_t j = 0; j < rights.size(); ++j) {
            std::vector<Constraint> joint = lefts[i].constraints();
            joint.insert(joint.end(), static_cast<std::size_t>(distance - 1), Constraint::Free);
            joint.insert(joint.end(), rights[j].constraints().begin(),
                         rights[j].constraints().end());
            const Pattern pattern(std::move(joint));
            const double product = p_left[i] * p_right[j];
            const double joint_p = prob(pattern);
            if (distance == 1) {
              report.max_adjacent_dependence =
                  std::max(report.max_adjacent_dependence, std::abs(joint_p - product));
            } else {
              report.record(pattern.to_string(), joint_p, product);
            }
          }
        }
      }
    }
  }
  report.finish();
  return report;
}

ComparisonReport one_dependence_check(const TrigSymbolDeg1& symbol, int max_len, double tol) {
  ComparisonReport report = one_dependence_check(
      [&](const Pattern& p) { return pattern_probability(symbol, p); }, max_len, tol);
  report.b = symbol.b();
  report.a_mag = symbol.a_mag();
  report.a_phase = symbol.a_phase();
  return report;
}

ComparisonReport complement_duality_check(const TrigSymbolDeg1& symbol, int max_len,
                                          double tol) {
  check_max_len(max_len);
  const TrigSymbolDeg1 dual = complement(symbol);
  ComparisonReport report = make_report(symbol, max_len, tol);
  for (int len = 1; len <= max_len; ++len) {
    for (const auto& p : all_binary_patterns(static_cast<std::size_t>(len)))
      report.record(p.to_string(), pattern_probability(symbol, p),
                    pattern_probability(dual, p.flipped()));
  }
  report.finish();
  return report;
}

std::vector<RunLengthRow> run_length_table(const TrigSymbolDeg1& symbol, int k_max) {
  if (k_max < 0 || k_max > 30)
    throw OutOfRange("run-length table needs 0 <= k_max <= 30, got " + std::to_string(k_max));
  const auto recurrence = d_recurrence(symbol, k_max);
  const Roots roots = char_roots(symbol);
  const TransferSystem transfer = build_transfer(build_region(symbol));
  std::vector<RunLengthRow> rows;
  std::vector<long> positions;
  for (int k = 0; k <= k_max; ++k) {
    positions.push_back(k);
    rows.push_back({k, ones_probability(symbol, positions), recurrence[static_cast<std::size_t>(k)],
                    d_closed(roots, symbol.b(), k),
                    factor_pattern_probability(transfer, Pattern::ones(static_cast<std::size_t>(k) + 1))});
  }
  return rows;
}

bool close_rel(double value, double reference, double tol) {
  const double scale = std::abs(reference) >= 1e-12 ? std::abs(reference) : 1.0;
  return std::abs(value - reference) <= tol * scale;
}

double row_spread(const RunLengthRow& row) {
  const double scale = std::abs(row.det) >= 1e-12 ? std::abs(row.det) : 1.0;
  double spread = 0.0;
  for (double v : {row.recurrence, row.closed, row.factor})
    spread = std::max(spread, std::abs(v - row.det) / scale);
  return spread;
}

McEstimate make_estimate(const Pattern& pattern, std::size_t hits, std::size_t n, double exact) {
  McEstimate est;
  est.pattern = pattern.to_string();
  est.samples = n;
  est.exact = exact;
  if (n == 0) return est;
  const double dn = static_cast<double>(n);
  est.frequency = static_cast<double>(hits) / dn;
  est.std_error = std::sqrt(est.frequency * (1.0 - est.frequency) / dn);
  if (est.std_error == 0.0) est.std_error = std::sqrt(std::max(exact * (1.0 - exact), 0.0) / dn);
  const double delta = est.frequency - exact;
  if (est.std_error > 0.0) {
    est.z = delta / est.std_error;
  } else {
    est.z = std::abs(delta) <= 1e-15 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), delta);
  }
  return est;
}

std::vector<TrigSymbolDeg1> standard_symbol_grid() {
  std::vector<TrigSymbolDeg1> grid;
  int index = 0;
  auto add = [&](double b, double a) {
    // spread the phases over the circle; probabilities must not depend on them
    grid.push_back(TrigSymbolDeg1::make(b, a, 0.37 * index++));
  };
  for (double b : {0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9}) add(b, 0.0);
  for (double b : {0.1, 0.2, 0.3, 0.4, 0.5}) add(b, 0.5 * b);
  for (double b : {0.25, 0.4, 0.5})
    for (double frac : {0.1, 0.25, 0.5, 0.75, 0.9}) add(b, frac * 0.5 * b);
  for (double b : {0.6, 0.75, 0.9}) {
    const double g = 1.0 - b;
    add(b, 0.5 * g);
    for (double frac : {0.1, 0.3, 0.5, 0.7, 0.9}) add(b, frac * 0.5 * g);
  }
  add(0.0, 0.0);
  add(1.0, 0.0);
  add(0.5, 0.25 * (1.0 - 1e-9));
  add(0.3, 0.15 * (1.0 - 1e-13));
  add(0.45, 0.1);
  return grid;
}

}  // namespace tdpp
