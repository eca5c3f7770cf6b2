#pragma once

// Exact counting oracles: walk counts, point classes, cycle families and
// occupation polynomials.

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sitepc/lattice.hpp"
#include "sitepc/series.hpp"

namespace sitepc {

/// J^{*m}(x) for every x in the radius-m ball.
struct WalkTable {
  int d = 0;
  int m = 0;
  std::unordered_map<Point, BigInt> counts;

  /// Zero outside the table.
  BigInt at(const Point& x) const;
};

inline constexpr std::uint64_t kDefaultWalkTableBudget = 4'000'000;

/// Throws ResourceError if the ball has more than `budget` points or if
/// (2d)^m does not fit in 64 bits.
WalkTable walk_counts(int d, int m, std::uint64_t budget = kDefaultWalkTableBudget);

/// Number of points of Z^d with the given l1 and l-infinity norms, from the
/// partition formula.
BigInt class_count(int d, int l1, int linf);
/// Same count by scanning the l1 ball; only for small d.
BigInt class_count_by_enumeration(int d, int l1, int linf);

/// Polynomial in Omega = 2d with rational coefficients, lowest degree first.
struct OmegaPolynomial {
  std::vector<Rational> coefficients;

  Rational operator()(const Rational& omega) const;
  int degree() const;
  std::string to_string() const;
};

/// Interpolates count(d) on d = d_min, ..., d_min + k as a degree-k
/// polynomial in Omega and checks it at d_min + k + 1 (NotPolynomialError on
/// mismatch).
OmegaPolynomial polynomial_in_omega(const std::function<BigInt(int)>& count, int degree_bound, int d_min = 1);

/// Self-avoiding cycles of one length through the origin and `base`.
///
/// Each cycle is stored starting at the origin, with its direction chosen so
/// the second vertex is lexicographically smaller than the last; rotations
/// and reflections are therefore counted once.
struct CycleFamily {
  Point base;
  int length = 0;
  std::vector<std::vector<Point>> cycles;
  std::vector<std::vector<Point>> interiors;  // cycle vertices minus {0, base}, sorted

  std::size_t size() const { return cycles.size(); }
  /// Distinct interior sites over all cycles, sorted.
  std::vector<Point> interior_sites() const;
};

/// Throws DomainError unless length is even and in [4, 8].
CycleFamily enumerate_cycles(int d, const Point& x, int length);
/// Union of the families of every even length 4..max_length.
CycleFamily enumerate_cycles_up_to(int d, const Point& x, int max_length);

/// Polynomial in p with integer coefficients, lowest degree first.
class ProbabilityPolynomial {
 public:
  ProbabilityPolynomial() = default;
  explicit ProbabilityPolynomial(std::vector<BigInt> coefficients);

  const std::vector<BigInt>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  double operator()(double p) const;
  Rational operator()(const Rational& p) const;

  ProbabilityPolynomial& operator+=(const ProbabilityPolynomial& o);
  friend bool operator==(const ProbabilityPolynomial&, const ProbabilityPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coefficients_;
};

inline constexpr int kMaxUnionSites = 30;
inline constexpr int kMaxUnionCycles = 26;

/// P(some cycle of the family has all interior sites occupied) by
/// inclusion-exclusion over sub-families. Endpoints are never required.
ProbabilityPolynomial union_occupation_probability(const CycleFamily& family);

}  // namespace sitepc
