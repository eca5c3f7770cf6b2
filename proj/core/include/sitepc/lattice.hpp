#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sitepc {

/// A point of Z^d.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<int> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<int> coords) : coords_(coords) {}

  static Point origin(int d) { return Point(std::vector<int>(static_cast<std::size_t>(d), 0)); }
  /// sign * e_axis
  static Point unit(int d, int axis, int sign);

  int dim() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coords() const { return coords_; }

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator-(Point a);

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::vector<int> coords_;
};

std::string to_string(const Point& x);
/// Parses "1,0,-1" or "(1,0,-1)".
Point parse_point(const std::string& text);

int l1_norm(const Point& x);
int linf_norm(const Point& x);

/// The 2d lattice neighbours, axis ascending with -e_i before +e_i.
std::vector<Point> neighbors(const Point& x);

/// All points with l1 norm <= r, in lexicographic order.
std::vector<Point> ball(int d, int r);

/// Number of points of Z^d with l1 norm <= r (Delannoy number D(d, r)).
std::uint64_t ball_size(int d, int r);

using SiteIndex = std::uint64_t;

/// Periodic box {-L/2, ..., L/2 - 1}^d approximating Z^d.
///
/// Sites are numbered by sum_i ((x_i mod L) * L^i). Directions 0..2d-1 map to
/// axis dir/2 with sign - for even dir and + for odd dir, matching neighbors().
class TorusGeometry {
 public:
  TorusGeometry(int d, int L);

  int d() const { return d_; }
  int L() const { return L_; }
  int degree() const { return 2 * d_; }
  std::uint64_t size() const { return size_; }

  SiteIndex index(const Point& x) const;
  /// Point in the symmetric window [-L/2, L/2)^d.
  Point point(SiteIndex i) const;
  SiteIndex origin() const { return 0; }

  /// Coordinate of site i along `axis` in [0, L).
  int raw_coord(SiteIndex i, int axis) const {
    return static_cast<int>((i / strides_[static_cast<std::size_t>(axis)]) % static_cast<std::uint64_t>(L_));
  }
  SiteIndex neighbor(SiteIndex i, int dir) const {
    const int axis = dir >> 1;
    const std::uint64_t stride = strides_[static_cast<std::size_t>(axis)];
    const int c = raw_coord(i, axis);
    if (dir & 1) return c == L_ - 1 ? i - stride * static_cast<std::uint64_t>(L_ - 1) : i + stride;
    return c == 0 ? i + stride * static_cast<std::uint64_t>(L_ - 1) : i - stride;
  }
  template <class F>
  void for_each_neighbor(SiteIndex i, F&& f) const {
    for (int dir = 0; dir < 2 * d_; ++dir) f(neighbor(i, dir));
  }

  /// Site of the displacement b - a, i.e. index(point(b) - point(a)).
  SiteIndex displacement(SiteIndex a, SiteIndex b) const;
  /// l1 norm of the reduced displacement b - a.
  int distance(SiteIndex a, SiteIndex b) const;
  /// l1 norm of point(i).
  int norm(SiteIndex i) const;

  friend bool operator==(const TorusGeometry& a, const TorusGeometry& b) { return a.d_ == b.d_ && a.L_ == b.L_; }

 private:
  int reduce(int c) const;  // into [-L/2, L/2)

  int d_;
  int L_;
  std::uint64_t size_;
  std::vector<std::uint64_t> strides_;
};

}  // namespace sitepc

template <>
struct std::hash<sitepc::Point> {
  std::size_t operator()(const sitepc::Point& x) const noexcept;
};
