#include "sitepc/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "sitepc/errors.hpp"

namespace sitepc {

BigInt WalkTable::at(const Point& x) const {
  auto it = counts.find(x);
  return it == counts.end() ? BigInt(0) : it->second;
}

WalkTable walk_counts(int d, int m, std::uint64_t budget) {
  if (d < 1 || m < 0) throw DomainError("walk counts need d >= 1 and m >= 0");
  const std::uint64_t points = ball_size(d, m);
  if (points > budget) {
    throw ResourceError("walk table for d=" + std::to_string(d) + ", m=" + std::to_string(m) + " needs " +
                        std::to_string(points) + " entries, budget is " + std::to_string(budget));
  }
  // Counts stay below (2d)^m; also the mixed-radix key must fit.
  const double bits = m * std::log2(2.0 * d);
  const double key_bits = d * std::log2(2.0 * m + 1.0);
  if (bits >= 63.0 || key_bits >= 63.0) throw ResourceError("walk table values or keys exceed 64 bits");

  const std::uint64_t radix = static_cast<std::uint64_t>(2 * m + 1);
  std::vector<std::uint64_t> stride(static_cast<std::size_t>(d));
  std::uint64_t s = 1;
  for (int a = 0; a < d; ++a) {
    stride[static_cast<std::size_t>(a)] = s;
    s *= radix;
  }
  std::uint64_t origin_key = 0;
  for (int a = 0; a < d; ++a) origin_key += static_cast<std::uint64_t>(m) * stride[static_cast<std::size_t>(a)];

  std::unordered_map<std::uint64_t, std::uint64_t> cur{{origin_key, 1}};
  for (int step = 0; step < m; ++step) {
    std::unordered_map<std::uint64_t, std::uint64_t> next;
    next.reserve(cur.size() * 4);
    for (const auto& [key, count] : cur) {
      for (int a = 0; a < d; ++a) {
        const std::uint64_t st = stride[static_cast<std::size_t>(a)];
        next[key - st] += count;
        next[key + st] += count;
      }
    }
    cur = std::move(next);
  }

  WalkTable table{d, m, {}};
  table.counts.reserve(cur.size());
  for (const auto& [key, count] : cur) {
    Point x = Point::origin(d);
    std::uint64_t k = key;
    for (int a = 0; a < d; ++a) {
      x[a] = static_cast<int>(k % radix) - m;
      k /= radix;
    }
    table.counts.emplace(std::move(x), BigInt(count));
  }
  return table;
}

namespace {

// Partitions of `remaining` into parts <= max_part, non-increasing.
void partitions(int remaining, int max_part, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (remaining == 0) {
    f(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(remaining - part, part, cur, f);
    cur.pop_back();
  }
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

BigInt class_count(int d, int l1, int linf) {
  if (d < 1 || linf < 0 || l1 < linf) throw DomainError("class_count needs d >= 1 and l1 >= linf >= 0");
  if (l1 == 0) return linf == 0 ? 1 : 0;
  if (linf == 0) return 0;
  BigInt total = 0;
  std::vector<int> cur;
  partitions(l1, linf, cur, [&](const std::vector<int>& parts) {
    if (parts.front() != linf) return;
    const int k = static_cast<int>(parts.size());
    if (k > d) return;
    // d!/(d-k)! ordered placements of the parts onto axes, divided by the
    // permutations of equal parts, times a sign per nonzero coordinate.
    BigInt ways = 1;
    for (int i = 0; i < k; ++i) ways *= (d - i);
    std::map<int, int> mult;
    for (int part : parts) ++mult[part];
    for (const auto& [part, count] : mult) ways /= factorial(count);
    ways <<= k;
    total += ways;
  });
  return total;
}

BigInt class_count_by_enumeration(int d, int l1, int linf) {
  if (d < 1 || linf < 0 || l1 < linf) throw DomainError("class_count needs d >= 1 and l1 >= linf >= 0");
  BigInt n = 0;
  for (const auto& x : ball(d, l1)) {
    if (l1_norm(x) == l1 && linf_norm(x) == linf) ++n;
  }
  return n;
}

Rational OmegaPolynomial::operator()(const Rational& omega) const {
  Rational acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * omega + *it;
  return acc;
}

int OmegaPolynomial::degree() const {
  for (int i = static_cast<int>(coefficients.size()) - 1; i >= 0; --i) {
    if (coefficients[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

std::string OmegaPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coefficients[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << sitepc::to_string(mag);
    } else {
      if (mag != 1) out << sitepc::to_string(mag) << "*";
      out << "W";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

OmegaPolynomial polynomial_in_omega(const std::function<BigInt(int)>& count, int degree_bound, int d_min) {
  if (degree_bound < 0 || d_min < 1) throw DomainError("interpolation needs degree >= 0 and d_min >= 1");
  const int n = degree_bound + 1;
  std::vector<Rational> xs(static_cast<std::size_t>(n)), dd(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    xs[static_cast<std::size_t>(i)] = 2 * (d_min + i);
    dd[static_cast<std::size_t>(i)] = Rational(count(d_min + i));
  }
  // Newton divided differences in place.
  for (int j = 1; j < n; ++j) {
    for (int i = n - 1; i >= j; --i) {
      dd[static_cast<std::size_t>(i)] = (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) /
                                        (xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(i - j)]);
    }
  }
  // Expand the Newton form into monomials, innermost factor first.
  std::vector<Rational> poly{dd[static_cast<std::size_t>(n - 1)]};
  for (int i = n - 2; i >= 0; --i) {
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * xs[static_cast<std::size_t>(i)];
    }
    next[0] += dd[static_cast<std::size_t>(i)];
    poly = std::move(next);
  }
  OmegaPolynomial result{std::move(poly)};

  const int check_d = d_min + n;
  const Rational predicted = result(Rational(2 * check_d));
  const Rational actual(count(check_d));
  if (predicted != actual) {
    throw NotPolynomialError("count at d=" + std::to_string(check_d) + " is " + sitepc::to_string(actual) +
                             " but the degree-" + std::to_string(degree_bound) + " interpolant predicts " +
                             sitepc::to_string(predicted));
  }
  return result;
}

std::vector<Point> CycleFamily::interior_sites() const {
  std::set<Point> sites;
  for (const auto& in : interiors) sites.insert(in.begin(), in.end());
  return {sites.begin(), sites.end()};
}

namespace {

struct CycleSearch {
  int length;
  Point target;
  Point origin;
  std::vector<Point> path;
  std::vector<std::vector<Point>>* out;

  bool on_path(const Point& w) const { return std::find(path.begin(), path.end(), w) != path.end(); }

  void run(const Point& v) {
    const int edges = static_cast<int>(path.size()) - 1;
    if (edges == length - 1) {
      if (l1_norm(v) == 1 && on_path(target) && path[1] < path.back()) out->push_back(path);
      return;
    }
    const bool have_target = on_path(target);
    for (const auto& w : neighbors(v)) {
      if (w == origin || on_path(w)) continue;
      const int remaining = length - (edges + 1);
      if (l1_norm(w) > remaining) continue;
      if (!have_target && w != target && l1_norm(w - target) + l1_norm(target) > remaining) continue;
      path.push_back(w);
      run(w);
      path.pop_back();
    }
  }
};

}  // namespace

CycleFamily enumerate_cycles(int d, const Point& x, int length) {
  if (length % 2 != 0 || length < 4 || length > 8) {
    throw DomainError("cycle length must be even and in [4, 8], got " + std::to_string(length));
  }
  if (x.dim() != d) throw GeometryError("base point dimension does not match d");
  CycleFamily family{x, length, {}, {}};
  CycleSearch search{length, x, Point::origin(d), {Point::origin(d)}, &family.cycles};
  search.run(search.origin);
  std::sort(family.cycles.begin(), family.cycles.end());
  for (const auto& cycle : family.cycles) {
    std::vector<Point> interior;
    for (const auto& v : cycle) {
      if (v != search.origin && v != x) interior.push_back(v);
    }
    std::sort(interior.begin(), interior.end());
    family.interiors.push_back(std::move(interior));
  }
  return family;
}

CycleFamily enumerate_cycles_up_to(int d, const Point& x, int max_length) {
  CycleFamily all{x, max_length, {}, {}};
  for (int len = 4; len <= max_length; len += 2) {
    CycleFamily f = enumerate_cycles(d, x, len);
    all.cycles.insert(all.cycles.end(), f.cycles.begin(), f.cycles.end());
    all.interiors.insert(all.interiors.end(), f.interiors.begin(), f.interiors.end());
  }
  return all;
}

ProbabilityPolynomial::ProbabilityPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

void ProbabilityPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

double ProbabilityPolynomial::operator()(double p) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * p + it->convert_to<double>();
  return acc;
}

Rational ProbabilityPolynomial::operator()(const Rational& p) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * p + *it;
  return acc;
}

ProbabilityPolynomial& ProbabilityPolynomial::operator+=(const ProbabilityPolynomial& o) {
  if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size());
  for (std::size_t i = 0; i < o.coefficients_.size(); ++i) coefficients_[i] += o.coefficients_[i];
  trim();
  return *this;
}

std::string ProbabilityPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const BigInt& c = coefficients_[i];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << "p";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

namespace {

void inclusion_exclusion(const std::vector<std::uint32_t>& masks, std::size_t start, std::uint32_t mask, int size,
                         std::vector<std::int64_t>& acc) {
  for (std::size_t i = start; i < masks.size(); ++i) {
    const std::uint32_t m = mask | masks[i];
    acc[static_cast<std::size_t>(std::popcount(m))] += (size % 2 == 0) ? 1 : -1;
    inclusion_exclusion(masks, i + 1, m, size + 1, acc);
  }
}

}  // namespace

ProbabilityPolynomial union_occupation_probability(const CycleFamily& family) {
  const auto sites = family.interior_sites();
  if (sites.size() > static_cast<std::size_t>(kMaxUnionSites)) {
    throw ResourceError("cycle family has " + std::to_string(sites.size()) + " interior sites, limit is " +
                        std::to_string(kMaxUnionSites));
  }
  if (family.size() > static_cast<std::size_t>(kMaxUnionCycles)) {
    throw ResourceError("cycle family has " + std::to_string(family.size()) + " cycles, limit is " +
                        std::to_string(kMaxUnionCycles));
  }
  std::vector<std::uint32_t> masks;
  for (const auto& interior : family.interiors) {
    std::uint32_t m = 0;
    for (const auto& v : interior) {
      const auto pos = std::lower_bound(sites.begin(), sites.end(), v) - sites.begin();
      m |= std::uint32_t{1} << pos;
    }
    masks.push_back(m);
  }
  std::vector<std::int64_t> acc(sites.size() + 1, 0);
  inclusion_exclusion(masks, 0, 0, 0, acc);
  std::vector<BigInt> coeffs(acc.begin(), acc.end());
  return ProbabilityPolynomial(std::move(coeffs));
}

}  // namespace sitepc
