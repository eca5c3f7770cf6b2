#include "sitepc/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "sitepc/errors.hpp"

namespace sitepc {

namespace {

nlohmann::json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw DomainError("expected an integer, got " + j.dump());
}

void require_same_var(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.var() != b.var()) {
    throw TagMismatchError(std::string("series variables differ: ") + variable_name(a.var()) + " vs " +
                           variable_name(b.var()));
  }
}

}  // namespace

std::string to_string(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

nlohmann::json rational_to_json(const Rational& r) {
  return nlohmann::json::array(
      {bigint_to_json(boost::multiprecision::numerator(r)), bigint_to_json(boost::multiprecision::denominator(r))});
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_array() && j.size() == 2) {
    BigInt den = bigint_from_json(j[1]);
    if (den == 0) throw DomainError("zero denominator in " + j.dump());
    return Rational(bigint_from_json(j[0]), den);
  }
  if (j.is_number_integer() || j.is_string()) return Rational(bigint_from_json(j));
  throw DomainError("expected [num, den], got " + j.dump());
}

const char* variable_name(Variable v) { return v == Variable::t ? "t" : "s"; }

TruncatedSeries::TruncatedSeries(Variable var, std::vector<Rational> coefficients)
    : var_(var), coefficients_(std::move(coefficients)) {}

TruncatedSeries TruncatedSeries::constant(Variable var, const Rational& c, int order) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(order + 1, 0)));
  if (!coeffs.empty()) coeffs[0] = c;
  return TruncatedSeries(var, std::move(coeffs));
}

TruncatedSeries TruncatedSeries::variable(Variable var, int order) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(order + 1, 0)));
  if (order >= 1) coeffs[1] = 1;
  return TruncatedSeries(var, std::move(coeffs));
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  const int keep = std::min(order, this->order());
  return TruncatedSeries(var_, std::vector<Rational>(coefficients_.begin(), coefficients_.begin() + (keep + 1)));
}

TruncatedSeries TruncatedSeries::shifted() const {
  std::vector<Rational> coeffs;
  coeffs.reserve(coefficients_.size() + 1);
  coeffs.emplace_back(0);
  coeffs.insert(coeffs.end(), coefficients_.begin(), coefficients_.end());
  return TruncatedSeries(var_, std::move(coeffs));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_var(a, b);
  const int m = std::min(a.order(), b.order());
  std::vector<Rational> coeffs(static_cast<std::size_t>(m + 1));
  for (int i = 0; i <= m; ++i) coeffs[i] = a[i] + b[i];
  return TruncatedSeries(a.var(), std::move(coeffs));
}

TruncatedSeries operator-(const TruncatedSeries& a) { return Rational(-1) * a; }

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
  std::vector<Rational> coeffs(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : coeffs) x *= c;
  return TruncatedSeries(a.var(), std::move(coeffs));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_var(a, b);
  const int m = std::min(a.order(), b.order());
  std::vector<Rational> coeffs(static_cast<std::size_t>(m + 1));
  for (int i = 0; i <= m; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= m; ++j) coeffs[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(a.var(), std::move(coeffs));
}

TruncatedSeries series_pow(const TruncatedSeries& a, int exponent) {
  if (exponent < 0) return series_pow(series_inverse(a), -exponent);
  TruncatedSeries result = TruncatedSeries::constant(a.var(), 1, a.order());
  for (int k = 0; k < exponent; ++k) result = series_mul(result, a);
  return result;
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  if (a.order() < 0 || a[0] == 0) throw NonInvertibleError("series with zero constant term has no inverse");
  const int m = a.order();
  std::vector<Rational> inv(static_cast<std::size_t>(m + 1));
  inv[0] = 1 / a[0];
  for (int n = 1; n <= m; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += a[k] * inv[n - k];
    inv[n] = -acc * inv[0];
  }
  return TruncatedSeries(a.var(), std::move(inv));
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner, Variable result_var) {
  if (inner.order() >= 0 && inner[0] != 0) throw DomainError("inner series of a composition must vanish at 0");
  const int m = std::min(outer.order(), inner.order());
  const TruncatedSeries x(result_var, std::vector<Rational>(inner.coefficients().begin(),
                                                            inner.coefficients().begin() + (m + 1)));
  // Horner from the top coefficient down.
  TruncatedSeries acc = TruncatedSeries::constant(result_var, m >= 0 ? outer[m] : Rational(0), m);
  for (int k = m - 1; k >= 0; --k) {
    acc = series_mul(acc, x) + TruncatedSeries::constant(result_var, outer[k], m);
  }
  return acc;
}

TruncatedSeries substitute_sigma_to_2d(const TruncatedSeries& a) {
  if (a.var() != Variable::s) throw TagMismatchError("sigma-to-2d conversion expects an s-series");
  if (a.order() >= 0 && a[0] != 0) throw DomainError("sigma-to-2d conversion expects a zero constant term");
  // s = t/(1-t) = t + t^2 + ...
  std::vector<Rational> inner(static_cast<std::size_t>(a.order() + 1), Rational(1));
  if (!inner.empty()) inner[0] = 0;
  return series_compose(a, TruncatedSeries(Variable::t, std::move(inner)), Variable::t);
}

TruncatedSeries substitute_2d_to_sigma(const TruncatedSeries& a) {
  if (a.var() != Variable::t) throw TagMismatchError("2d-to-sigma conversion expects a t-series");
  if (a.order() >= 0 && a[0] != 0) throw DomainError("2d-to-sigma conversion expects a zero constant term");
  // t = s/(1+s) = s - s^2 + s^3 - ...
  std::vector<Rational> inner(static_cast<std::size_t>(a.order() + 1));
  for (std::size_t k = 1; k < inner.size(); ++k) inner[k] = (k % 2 == 1) ? 1 : -1;
  return series_compose(a, TruncatedSeries(Variable::s, std::move(inner)), Variable::s);
}

Rational evaluate_series(const TruncatedSeries& a, int d) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  const Rational x = a.var() == Variable::t ? Rational(1, 2 * d) : Rational(1, 2 * d - 1);
  Rational acc = 0;
  for (int k = a.order(); k >= 0; --k) acc = acc * x + a[k];
  return acc;
}

std::string to_string(const TruncatedSeries& a) {
  const char* v = variable_name(a.var());
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= a.order(); ++i) {
    const Rational& c = a[i];
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << to_string(mag);
      continue;
    }
    out << to_string(mag) << "*" << v;
    if (i > 1) out << "^" << i;
  }
  if (first) out << "0";
  out << " + O(" << v << "^" << (a.order() + 1) << ")";
  return out.str();
}

nlohmann::json to_json(const TruncatedSeries& a) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : a.coefficients()) coeffs.push_back(rational_to_json(c));
  return {{"variable", variable_name(a.var())}, {"order", a.order()}, {"coefficients", coeffs}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  const std::string var = j.at("variable").get<std::string>();
  Variable v;
  if (var == "t") {
    v = Variable::t;
  } else if (var == "s") {
    v = Variable::s;
  } else {
    throw DomainError("unknown series variable '" + var + "'");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.push_back(rational_from_json(c));
  if (j.contains("order")) {
    const int order = j.at("order").get<int>();
    if (order + 1 != static_cast<int>(coeffs.size())) {
      throw DomainError("series order " + std::to_string(order) + " does not match " +
                        std::to_string(coeffs.size()) + " coefficients");
    }
  }
  return TruncatedSeries(v, std::move(coeffs));
}

BivariatePoly::BivariatePoly(int error_order) : error_order_(error_order) {
  if (error_order < 0) throw DomainError("declared error order must be >= 0");
}

BivariatePoly::BivariatePoly(int error_order, std::initializer_list<std::pair<Key, Rational>> terms)
    : BivariatePoly(error_order) {
  for (const auto& [key, c] : terms) add_term(key.first, key.second, c);
}

BivariatePoly& BivariatePoly::add_term(int q_power, int t_power, const Rational& c) {
  if (q_power < 0 || t_power < 0) throw DomainError("negative exponent in bivariate polynomial");
  const Key key{q_power, t_power};
  Rational sum = c;
  if (auto it = terms_.find(key); it != terms_.end()) sum += it->second;
  if (sum == 0) {
    terms_.erase(key);
  } else {
    terms_[key] = sum;
  }
  return *this;
}

TruncatedSeries BivariatePoly::evaluate(const TruncatedSeries& q) const {
  if (q.var() != Variable::t) throw TagMismatchError("bivariate polynomials take a t-series for q");
  const int m = std::min(q.order(), error_order_ - 1);
  TruncatedSeries acc = TruncatedSeries::zero(Variable::t, m);
  if (m < 0) return acc;
  const TruncatedSeries qm = q.truncated(m);
  for (const auto& [key, c] : terms_) {
    const auto [qp, tp] = key;
    if (tp > m) continue;
    TruncatedSeries term = c * series_pow(qm, qp);
    for (int k = 0; k < tp; ++k) term = term.shifted();
    acc = acc + term.truncated(m);
  }
  return acc;
}

std::vector<SignedPoly> lace_coefficient_expansions() {
  using K = BivariatePoly::Key;
  return {
      {+1, BivariatePoly(2, {{K{2, 0}, Rational(1, 2)}, {K{0, 1}, Rational(5, 2)}})},
      {-1, BivariatePoly(2, {{K{1, 0}, Rational(1)}, {K{2, 0}, Rational(2)}, {K{0, 1}, Rational(4)}})},
      {+1, BivariatePoly(2, {{K{0, 1}, Rational(10)}})},
  };
}

namespace {

TruncatedSeries combined_pi(std::span<const SignedPoly> pi_terms, const TruncatedSeries& q) {
  TruncatedSeries pi = TruncatedSeries::zero(Variable::t, q.order());
  for (const auto& term : pi_terms) {
    pi = pi + Rational(term.sign) * term.poly.evaluate(q);
  }
  return pi;
}

}  // namespace

FixedPointSolution solve_pc_fixed_point(std::span<const SignedPoly> pi_terms, int order) {
  if (order < 0) throw DomainError("expansion order must be >= 0");
  for (const auto& term : pi_terms) {
    if (term.sign != 1 && term.sign != -1) throw DomainError("lace coefficient signs must be +1 or -1");
    if (order > term.poly.error_order()) {
      throw DomainError("order " + std::to_string(order) + " exceeds what an input trusted below t^" +
                        std::to_string(term.poly.error_order()) + " supports");
    }
  }
  TruncatedSeries q = TruncatedSeries::constant(Variable::t, 1, order);
  const TruncatedSeries one = TruncatedSeries::constant(Variable::t, 1, order);
  for (int round = 1; round <= order + 2; ++round) {
    const TruncatedSeries pi = combined_pi(pi_terms, q);
    const TruncatedSeries denominator = one + pi.shifted().truncated(order);
    TruncatedSeries next = series_inverse(denominator).truncated(order);
    if (next.order() < order) throw NoConvergenceError("inputs lost precision during the iteration");
    if (next == q) return {std::move(q), round};
    q = std::move(next);
  }
  throw NoConvergenceError("fixed-point iteration did not stabilise within " + std::to_string(order + 2) +
                           " rounds");
}

TruncatedSeries fixed_point_residual(std::span<const SignedPoly> pi_terms, const TruncatedSeries& q) {
  const TruncatedSeries pi = combined_pi(pi_terms, q);
  const TruncatedSeries one = TruncatedSeries::constant(Variable::t, 1, q.order());
  return (series_mul(q, one + pi.shifted().truncated(q.order())) - one);
}

}  // namespace sitepc
