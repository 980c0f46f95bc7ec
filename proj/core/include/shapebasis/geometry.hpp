#pragma once

#include <array>
#include <span>
#include <vector>

namespace shapebasis {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 a);

/// Unit vector at `angle`; exact for the two axis directions 0 and pi/2.
Point2 direction(double angle);

/// Rotation of `p` about the origin.
Point2 rotate(Point2 p, double angle);

/// Oriented rectangle. `theta` is the angle from the horizontal line to the
/// long side, normalized into [0, pi).
class Rectangle {
 public:
  /// Throws InvalidArgument unless long_side >= short_side > 0 and all inputs
  /// are finite.
  Rectangle(Point2 center, double theta, double long_side, double short_side);

  /// Axis-parallel rectangle with the given horizontal and vertical extents;
  /// theta becomes 0 or pi/2 so that long >= short.
  static Rectangle axis_parallel(Point2 center, double width, double height);

  Point2 center() const { return center_; }
  double theta() const { return theta_; }
  double long_side() const { return long_; }
  double short_side() const { return short_; }
  double area() const { return long_ * short_; }
  double shape() const { return long_ / short_; }

  Point2 long_axis() const { return direction(theta_); }
  Point2 short_axis() const;

  bool is_axis_parallel() const { return theta_ == 0.0 || theta_ == kHalfPi; }

  /// Horizontal and vertical extents of the axis-parallel bounding box.
  double width() const;
  double height() const;

  /// Coordinates of `p` relative to the center along (long axis, short axis).
  Point2 to_local(Point2 p) const;
  Point2 from_local(Point2 local) const;

  /// Closed containment with an absolute slack `tol` on each half-extent.
  bool contains(Point2 p, double tol = 0.0) const;

  /// Counterclockwise corners, starting at center - L/2 u - l/2 v.
  std::array<Point2, 4> corners() const;

  Rectangle translated(Point2 offset) const;

 private:
  Point2 center_;
  double theta_;
  double long_;
  double short_;
};

/// Convex polygon with counterclockwise vertices. The default-constructed value
/// is the distinguished EMPTY polygon (area 0, contains nothing).
class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  /// Drops repeated and collinear vertices (cross-product tolerance 1e-12
  /// times the squared diameter). Collapses to EMPTY when fewer than three
  /// vertices survive. Throws InvalidArgument for clockwise or non-convex
  /// input.
  explicit ConvexPolygon(std::vector<Point2> ccw_vertices);

  static ConvexPolygon empty() { return {}; }

  bool is_empty() const { return vertices_.empty(); }
  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  double area() const;
  double diameter() const;
  Point2 centroid() const;

  /// Closed containment; `tol` is an absolute distance slack.
  bool contains(Point2 p, double tol = 0.0) const;

 private:
  friend ConvexPolygon clip_convex(const ConvexPolygon& p, const ConvexPolygon& q);

  // Vertices known to be convex up to rounding; near-zero or slightly negative
  // turns are dropped instead of rejected.
  static ConvexPolygon from_rounded(std::vector<Point2> vertices);

  std::vector<Point2> vertices_;
};

ConvexPolygon rect_polygon(const Rectangle& r);

double polygon_area(const ConvexPolygon& p);

/// Intersection of two convex polygons (Sutherland-Hodgman), EMPTY when the
/// overlap has no area.
ConvexPolygon clip_convex(const ConvexPolygon& p, const ConvexPolygon& q);

/// Smallest axis-parallel rectangle containing `r`, same center.
Rectangle hat_rect(const Rectangle& r);

/// Axis-parallel rectangle inscribed in `r` whose opposite corners sit on the
/// long sides of `r`, at distance t*L from the nearest corner of that side.
/// For 0 < theta < pi/2 the lower anchor is measured from the right corner and
/// the upper anchor from the left corner; theta in (pi/2, pi) is the mirror
/// image. Throws InvalidArgument unless 0 < t < 1/2 and NonPositiveCheck when
/// the inscribed rectangle degenerates (shape >= critical shape).
/// The other two corners stay inside `r` only while
/// (1-2t) cos 2theta + sin 2theta / shape <= 1 (theta folded into [0, pi/2]);
/// this always holds for t >= 0.147 and shape >= 1/(1-2t), but not for small t.
Rectangle check_rect(const Rectangle& r, double t);

/// The two corners of check_rect(r, t) that lie on the long sides of `r`:
/// [0] on the lower side, [1] on the upper side.
std::array<Point2, 2> check_rect_anchors(const Rectangle& r, double t);

/// Concentric rectangle with power-of-two sides, the smallest such containing
/// `r`. Throws PreconditionViolated for a rotated input.
Rectangle dyadic_parent(const Rectangle& r);

/// Axis-parallel bounding box of a set of rectangles.
Rectangle bounding_box(std::span<const Rectangle> rects);

}  // namespace shapebasis
