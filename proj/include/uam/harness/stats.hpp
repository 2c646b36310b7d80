#pragma once

#include <cstddef>
#include <span>

namespace uam::harness {

struct Summary {
  std::size_t n = 0;
  double mean = 0.0;
  double std_dev = 0.0;  // sample (n - 1) standard deviation; 0 when n < 2
};

Summary summarize(std::span<const double> values);

struct TTestResult {
  std::size_t n = 0;
  double mean = 0.0;
  double std_dev = 0.0;
  double t = 0.0;
  double p = 1.0;
  /// Zero variance: t is undefined and p is reported as 1 (all-zero
  /// deltas) or 0 (identical nonzero deltas).
  bool degenerate = false;
};

/// Two-sided paired t-test on per-scenario differences, n - 1 degrees of
/// freedom. Throws std::invalid_argument for fewer than two deltas.
TTestResult paired_t_test(std::span<const double> deltas);

}  // namespace uam::harness
