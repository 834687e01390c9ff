#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tdpp/blockfactor.hpp"
#include "tdpp/pattern.hpp"
#include "tdpp/symbol.hpp"

namespace tdpp {

/// Exact evaluator for the two-block-factor process of a region. The unit
/// interval is cut at every box endpoint; M_c(s, t) = |I_t| when the cell
/// I_s x I_t satisfies constraint c.
struct TransferSystem {
  std::vector<double> breakpoints;
  Eigen::VectorXd lengths;
  Eigen::MatrixXd m_one;
  Eigen::MatrixXd m_zero;
  Eigen::MatrixXd m_free;
  /// Cell membership in the stored box union (before any flip).
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> inside;
  bool flip = false;

  Eigen::Index intervals() const { return lengths.size(); }
  const Eigen::MatrixXd& matrix(Constraint c) const;
};

TransferSystem build_transfer(const Region& region);

/// Cell-by-cell membership of the box union on the grid given by
/// `breakpoints`; throws PartitionMismatch if a cell is partially covered.
Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> cell_membership(
    const Region& region, const std::vector<double>& breakpoints);

double factor_pattern_probability(const TransferSystem& transfer, const Pattern& pattern);

/// Probability that consecutive pairs (Y_l, Y_{l+1}) fall in the boxes
/// labels[0], labels[1], ... of the stored geometry.
double label_path_mass(const Region& region, const TransferSystem& transfer,
                       const std::vector<int>& labels);

using PatternProbability = std::function<double(const Pattern&)>;

struct PatternDiff {
  std::string pattern;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
};

struct ComparisonReport {
  double b = 0.0;
  double a_mag = 0.0;
  double a_phase = 0.0;
  int max_len = 0;
  double tolerance = 0.0;
  std::vector<PatternDiff> diffs;
  double max_abs_diff = 0.0;
  bool pass = true;
  /// One-dependence checks only: largest |joint - product| at distance 1.
  double max_adjacent_dependence = 0.0;

  void record(std::string pattern, double lhs, double rhs);
  void finish();
};

/// Determinantal vs block-factor probabilities on every {One, Zero} pattern
/// of length 1..max_len (also Free when `with_free`).
ComparisonReport compare_patterns(const TrigSymbolDeg1& symbol, int max_len, double tol,
                                  bool with_free = false);

/// Runs compare_patterns over many symbols on `threads` workers (0 = all
/// hardware threads). Output order follows `symbols`.
std::vector<ComparisonReport> compare_sweep(const std::vector<TrigSymbolDeg1>& symbols,
                                            int max_len, double tol, unsigned threads = 0);

/// Pairs of windows at distance >= 2 must factorise.
ComparisonReport one_dependence_check(const PatternProbability& prob, int max_len, double tol);
ComparisonReport one_dependence_check(const TrigSymbolDeg1& symbol, int max_len, double tol);

/// P^f[p] against P^{1-f}[p flipped].
ComparisonReport complement_duality_check(const TrigSymbolDeg1& symbol, int max_len,
                                          double tol);

struct RunLengthRow {
  int k = 0;
  double det = 0.0;
  double recurrence = 0.0;
  double closed = 0.0;
  double factor = 0.0;
};

std::vector<RunLengthRow> run_length_table(const TrigSymbolDeg1& symbol, int k_max);

/// Relative agreement with an absolute fallback when |reference| < 1e-12.
bool close_rel(double value, double reference, double tol);
/// Largest deviation of a row's columns from its determinant column, scaled
/// as in close_rel.
double row_spread(const RunLengthRow& row);

struct McEstimate {
  std::string pattern;
  std::size_t samples = 0;
  double frequency = 0.0;
  double std_error = 0.0;
  double exact = 0.0;
  double z = 0.0;
};

/// z-score with the estimator's standard error; falls back to the exact
/// binomial error when the observed frequency is 0 or 1.
McEstimate make_estimate(const Pattern& pattern, std::size_t hits, std::size_t n, double exact);

/// Independent replications of the block-factor window: each draws fresh
/// uniforms Y_0..Y_L and tests the pattern on h(Y_l, Y_{l+1}).
template <typename URBG>
McEstimate mc_estimate(const Region& region, const Pattern& pattern, std::size_t n, URBG& rng) {
  const double exact = factor_pattern_probability(build_transfer(region), pattern);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> y(pattern.size() + 1);
  std::size_t hits = 0;
  for (std::size_t rep = 0; rep < n; ++rep) {
    for (auto& v : y) v = unif(rng);
    bool hit = true;
    for (std::size_t l = 0; l < pattern.size() && hit; ++l) {
      if (pattern[l] == Constraint::Free) continue;
      hit = h_eval(region, y[l], y[l + 1]) == (pattern[l] == Constraint::One);
    }
    hits += hit ? 1 : 0;
  }
  return make_estimate(pattern, hits, n, exact);
}

/// Fixed set of 50 admissible symbols spanning every construction path.
std::vector<TrigSymbolDeg1> standard_symbol_grid();

}  // namespace tdpp
