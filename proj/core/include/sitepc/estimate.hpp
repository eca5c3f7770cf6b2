#pragma once

#include <cmath>
#include <cstddef>
#include <span>

#include "sitepc/errors.hpp"

namespace sitepc {

/// Monte Carlo mean with standard error sd / sqrt(n).
struct Estimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t n = 0;

  double stderr() const { return stderr_; }
};

/// Welford accumulator; merge() is Chan's pairwise update.
class RunningStats {
 public:
  void add(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
  }

  void merge(const RunningStats& o) {
    if (o.n_ == 0) return;
    if (n_ == 0) {
      *this = o;
      return;
    }
    const double n = static_cast<double>(n_ + o.n_);
    const double delta = o.mean_ - mean_;
    mean_ += delta * static_cast<double>(o.n_) / n;
    m2_ += o.m2_ + delta * delta * static_cast<double>(n_) * static_cast<double>(o.n_) / n;
    n_ += o.n_;
  }

  std::size_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }

  Estimate estimate() const {
    if (n_ == 0) throw DomainError("estimate needs at least one sample");
    return {mean_, std::sqrt(variance() / static_cast<double>(n_)), n_};
  }

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Sequential reduction in sample order, so the result does not depend on
/// how the samples were scheduled.
inline Estimate summarize(std::span<const double> samples) {
  RunningStats s;
  for (double x : samples) s.add(x);
  return s.estimate();
}

}  // namespace sitepc
