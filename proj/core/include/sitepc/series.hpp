#pragma once

// Exact truncated power series in t = 1/(2d) (or s = 1/(2d-1)) and the
// fixed-point solver for the critical-point expansion.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sitepc {

using BigInt = boost::multiprecision::cpp_int;
// Always normalised: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);
nlohmann::json rational_to_json(const Rational& r);  // [num, den]
Rational rational_from_json(const nlohmann::json& j);

enum class Variable {
  t,  // 1/(2d), also written 1/Omega
  s,  // 1/sigma with sigma = 2d - 1
};

const char* variable_name(Variable v);

/// Dense power series c_0 + c_1 x + ... + c_M x^M + O(x^{M+1}).
///
/// Coefficients past the order are unknown, not zero. An order of -1 means
/// nothing is known (empty coefficient list); it only shows up as an
/// intermediate when a factor is O(1).
class TruncatedSeries {
 public:
  TruncatedSeries(Variable var, std::vector<Rational> coefficients);

  static TruncatedSeries constant(Variable var, const Rational& c, int order);
  static TruncatedSeries zero(Variable var, int order) { return constant(var, 0, order); }
  /// The series x itself, truncated at `order` (>= 1).
  static TruncatedSeries variable(Variable var, int order);

  Variable var() const { return var_; }
  int order() const { return static_cast<int>(coefficients_.size()) - 1; }
  std::span<const Rational> coefficients() const { return coefficients_; }
  const Rational& operator[](int i) const { return coefficients_.at(static_cast<std::size_t>(i)); }

  TruncatedSeries truncated(int order) const;
  /// Multiply by the variable: shifts coefficients up and raises the order by one.
  TruncatedSeries shifted() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  Variable var_;
  std::vector<Rational> coefficients_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);

/// Cauchy product truncated at min(order(a), order(b)).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_mul(a, b);
}
TruncatedSeries series_pow(const TruncatedSeries& a, int exponent);

/// Multiplicative inverse; throws NonInvertibleError for a zero constant term.
TruncatedSeries series_inverse(const TruncatedSeries& a);

/// Composition a(inner(x)); inner must have zero constant term.
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner,
                               Variable result_var);

/// s-series -> t-series through s = t/(1-t). Input must start at order 1.
TruncatedSeries substitute_sigma_to_2d(const TruncatedSeries& a);
/// t-series -> s-series through t = s/(1+s).
TruncatedSeries substitute_2d_to_sigma(const TruncatedSeries& a);

/// Exact value at t = 1/(2d) of the known part of the series.
Rational evaluate_series(const TruncatedSeries& a, int d);

std::string to_string(const TruncatedSeries& a);
nlohmann::json to_json(const TruncatedSeries& a);
TruncatedSeries series_from_json(const nlohmann::json& j);

/// Sparse polynomial in (q, t), trusted strictly below t^error_order.
class BivariatePoly {
 public:
  using Key = std::pair<int, int>;  // (q power, t power)

  explicit BivariatePoly(int error_order);
  BivariatePoly(int error_order, std::initializer_list<std::pair<Key, Rational>> terms);

  BivariatePoly& add_term(int q_power, int t_power, const Rational& c);

  int error_order() const { return error_order_; }
  const std::map<Key, Rational>& terms() const { return terms_; }

  /// Substitutes a t-series for q. Result order is min(order(q), error_order - 1).
  TruncatedSeries evaluate(const TruncatedSeries& q) const;

 private:
  int error_order_;
  std::map<Key, Rational> terms_;
};

struct SignedPoly {
  int sign;  // +1 or -1
  BivariatePoly poly;
};

/// Leading expansions of the first three lace-expansion coefficients in
/// q = Omega p and t = 1/Omega, signs (+, -, +), each trusted below t^2.
std::vector<SignedPoly> lace_coefficient_expansions();

struct FixedPointSolution {
  TruncatedSeries q;  // Omega p_c
  int rounds;

  /// p_c = t q, one order higher than q.
  TruncatedSeries pc() const { return q.shifted(); }
};

/// Iterates q <- 1 / (1 + t Pi(q, t)) from q = 1. Each input trusted below
/// t^k bounds the order at M <= k; larger M throws DomainError.
FixedPointSolution solve_pc_fixed_point(std::span<const SignedPoly> pi_terms, int order);

/// q (1 + t Pi(q,t)) - 1, truncated at order(q). Zero for a solution.
TruncatedSeries fixed_point_residual(std::span<const SignedPoly> pi_terms, const TruncatedSeries& q);

}  // namespace sitepc
