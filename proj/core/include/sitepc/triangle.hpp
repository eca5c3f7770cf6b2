#pragma once

// Triangle diagrams from a full-torus estimate of tau_p.

#include <cstdint>
#include <vector>

#include "sitepc/configuration.hpp"
#include "sitepc/percolation.hpp"

namespace sitepc {

/// Largest torus handled by the dense tau field and the transforms.
inline constexpr std::uint64_t kMaxFieldSites = std::uint64_t{1} << 24;

/// tau_p(x) for every site x of the torus (tau(0) = 0), averaged over all
/// source sites of every sample by translation invariance.
std::vector<double> estimate_tau_field(const TorusGeometry& g, double p, const RunOptions& run);

/// Per-displacement counts of connected ordered pairs (s, s + x) in one
/// configuration; the oracle-friendly core of estimate_tau_field.
std::vector<std::uint64_t> connected_pair_counts(const Configuration& c);

/// Cyclic convolution (a * b)(x) = sum_y a(y) b(x - y) on the torus.
std::vector<double> torus_convolve(const TorusGeometry& g, const std::vector<double>& a, const std::vector<double>& b);

struct TriangleResult {
  double bullet = 0.0;                // sup over x != 0 of p (tau* . tau . tau)(x)
  double bullet_circ = 0.0;           // sup over x != 0 of p (tau* . tau° . tau)(x)
  double bullet_bullet_circ = 0.0;    // sup over all x of (tau* . tau* . tau°)(x)
  double bullet_at_0 = 0.0;
  double bullet_circ_at_0 = 0.0;
  double seam_tau = 0.0;              // max tau with some coordinate at -L/2
  bool finite_size_warning = false;   // seam_tau > floor
};

inline constexpr double kDefaultSeamFloor = 1e-3;

/// tau° = delta + tau and tau* = delta + p tau; convolutions by FFT.
TriangleResult triangles_from_tau(const TorusGeometry& g, double p, const std::vector<double>& tau,
                                  double seam_floor = kDefaultSeamFloor);
TriangleResult triangle_diagrams(const TorusGeometry& g, double p, const RunOptions& run,
                                 double seam_floor = kDefaultSeamFloor);

}  // namespace sitepc
