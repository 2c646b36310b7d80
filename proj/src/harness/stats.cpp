#include "uam/harness/stats.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

namespace uam::harness {

Summary summarize(std::span<const double> values) {
  Summary s;
  s.n = values.size();
  if (s.n == 0) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.n);
  if (s.n < 2) return s;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.std_dev = std::sqrt(ss / static_cast<double>(s.n - 1));
  return s;
}

TTestResult paired_t_test(std::span<const double> deltas) {
  if (deltas.size() < 2) throw std::invalid_argument("paired_t_test: need at least two deltas");
  const Summary s = summarize(deltas);
  TTestResult r;
  r.n = s.n;
  r.mean = s.mean;
  r.std_dev = s.std_dev;
  if (s.std_dev == 0.0) {
    r.degenerate = true;
    r.t = 0.0;
    r.p = s.mean == 0.0 ? 1.0 : 0.0;
    return r;
  }
  r.t = s.mean / (s.std_dev / std::sqrt(static_cast<double>(s.n)));
  const boost::math::students_t dist(static_cast<double>(s.n - 1));
  r.p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(r.t)));
  return r;
}

}  // namespace uam::harness
