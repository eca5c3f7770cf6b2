#include "sitepc/lattice.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>

#include "sitepc/errors.hpp"

namespace sitepc {

Point Point::unit(int d, int axis, int sign) {
  Point p = origin(d);
  p[axis] = sign;
  return p;
}

Point& Point::operator+=(const Point& o) {
  if (o.dim() != dim()) throw GeometryError("dimension mismatch in point arithmetic");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  if (o.dim() != dim()) throw GeometryError("dimension mismatch in point arithmetic");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Point operator-(Point a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

std::string to_string(const Point& x) {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < x.dim(); ++i) {
    if (i) out << ",";
    out << x[i];
  }
  out << ")";
  return out.str();
}

Point parse_point(const std::string& text) {
  std::string body;
  for (char ch : text) {
    if (ch != '(' && ch != ')' && ch != ' ') body.push_back(ch);
  }
  std::vector<int> coords;
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw DomainError("cannot parse point '" + text + "'");
    coords.push_back(v);
  }
  if (coords.empty()) throw DomainError("cannot parse point '" + text + "'");
  return Point(std::move(coords));
}

int l1_norm(const Point& x) {
  int n = 0;
  for (int c : x.coords()) n += std::abs(c);
  return n;
}

int linf_norm(const Point& x) {
  int n = 0;
  for (int c : x.coords()) n = std::max(n, std::abs(c));
  return n;
}

std::vector<Point> neighbors(const Point& x) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(2 * x.dim()));
  for (int axis = 0; axis < x.dim(); ++axis) {
    for (int sign : {-1, +1}) {
      Point y = x;
      y[axis] += sign;
      out.push_back(std::move(y));
    }
  }
  return out;
}

namespace {

void ball_rec(Point& cur, int axis, int budget, std::vector<Point>& out) {
  if (axis == cur.dim()) {
    out.push_back(cur);
    return;
  }
  for (int c = -budget; c <= budget; ++c) {
    cur[axis] = c;
    ball_rec(cur, axis + 1, budget - std::abs(c), out);
  }
  cur[axis] = 0;
}

}  // namespace

std::vector<Point> ball(int d, int r) {
  if (d < 1 || r < 0) throw DomainError("ball needs d >= 1 and r >= 0");
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(ball_size(d, r)));
  Point cur = Point::origin(d);
  ball_rec(cur, 0, r, out);
  return out;
}

std::uint64_t ball_size(int d, int r) {
  // D(d, r) = sum_k 2^k C(d,k) C(r,k)
  std::uint64_t total = 0;
  std::uint64_t cd = 1, cr = 1, pow2 = 1;
  for (int k = 0; k <= std::min(d, r); ++k) {
    total += pow2 * cd * cr;
    cd = cd * static_cast<std::uint64_t>(d - k) / static_cast<std::uint64_t>(k + 1);
    cr = cr * static_cast<std::uint64_t>(r - k) / static_cast<std::uint64_t>(k + 1);
    pow2 *= 2;
  }
  return total;
}

TorusGeometry::TorusGeometry(int d, int L) : d_(d), L_(L), size_(1) {
  if (d < 1) throw GeometryError("torus dimension must be >= 1");
  if (L < 4 || L % 2 != 0) throw GeometryError("torus side L must be even and >= 4, got " + std::to_string(L));
  strides_.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    strides_.push_back(size_);
    if (size_ > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(L) / 2) {
      throw GeometryError("torus with L^d sites does not fit a 64-bit index");
    }
    size_ *= static_cast<std::uint64_t>(L);
  }
}

int TorusGeometry::reduce(int c) const {
  int r = ((c % L_) + L_) % L_;
  if (r >= L_ / 2) r -= L_;
  return r;
}

SiteIndex TorusGeometry::index(const Point& x) const {
  if (x.dim() != d_) throw GeometryError("point dimension does not match torus");
  SiteIndex i = 0;
  for (int a = 0; a < d_; ++a) {
    const int c = ((x[a] % L_) + L_) % L_;
    i += static_cast<SiteIndex>(c) * strides_[static_cast<std::size_t>(a)];
  }
  return i;
}

Point TorusGeometry::point(SiteIndex i) const {
  Point p = Point::origin(d_);
  for (int a = 0; a < d_; ++a) p[a] = reduce(raw_coord(i, a));
  return p;
}

SiteIndex TorusGeometry::displacement(SiteIndex a, SiteIndex b) const {
  SiteIndex i = 0;
  for (int axis = 0; axis < d_; ++axis) {
    const int c = ((raw_coord(b, axis) - raw_coord(a, axis)) % L_ + L_) % L_;
    i += static_cast<SiteIndex>(c) * strides_[static_cast<std::size_t>(axis)];
  }
  return i;
}

int TorusGeometry::distance(SiteIndex a, SiteIndex b) const {
  int n = 0;
  for (int axis = 0; axis < d_; ++axis) n += std::abs(reduce(raw_coord(b, axis) - raw_coord(a, axis)));
  return n;
}

int TorusGeometry::norm(SiteIndex i) const {
  int n = 0;
  for (int axis = 0; axis < d_; ++axis) n += std::abs(reduce(raw_coord(i, axis)));
  return n;
}

}  // namespace sitepc

std::size_t std::hash<sitepc::Point>::operator()(const sitepc::Point& x) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int c : x.coords()) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(c));
    h *= 0x100000001b3ull;
  }
  return h;
}
