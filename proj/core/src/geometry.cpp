#include "shapebasis/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "shapebasis/errors.hpp"

namespace shapebasis {

namespace {

constexpr double kCollinearTolerance = 1e-12;

double normalize_angle(double theta) {
  double out = std::fmod(theta, kPi);
  if (out < 0.0) out += kPi;
  if (out >= kPi) out = 0.0;
  return out;
}

bool all_finite(std::initializer_list<double> values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); });
}

double squared_diameter(const std::vector<Point2>& vs) {
  double best = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Point2 d = vs[j] - vs[i];
      best = std::max(best, dot(d, d));
    }
  }
  return best;
}

void drop_repeats(std::vector<Point2>& vs) {
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  while (vs.size() > 1 && vs.front() == vs.back()) vs.pop_back();
}

double turn(const std::vector<Point2>& vs, std::size_t i) {
  const std::size_t n = vs.size();
  const Point2& a = vs[(i + n - 1) % n];
  const Point2& b = vs[i];
  const Point2& c = vs[(i + 1) % n];
  return cross(b - a, c - b);
}

// Removes every vertex whose turn is at most `tol` (or, when `drop_negative`,
// any vertex turning clockwise). Returns false if a clockwise turn beyond
// tolerance remains and `drop_negative` is off.
bool drop_flat_turns(std::vector<Point2>& vs, double tol, bool drop_negative) {
  bool changed = true;
  while (changed && vs.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const double c = turn(vs, i);
      if (std::abs(c) <= tol || (drop_negative && c < 0.0)) {
        vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (vs.size() < 3) return true;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (turn(vs, i) < 0.0) return false;
  }
  return true;
}

double signed_area(std::span<const Point2> vs) {
  double twice = 0.0;
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    twice += cross(vs[i], vs[(i + 1) % n]);
  }
  return 0.5 * twice;
}

}  // namespace

double norm(Point2 a) { return std::hypot(a.x, a.y); }

Point2 direction(double angle) {
  if (angle == 0.0) return {1.0, 0.0};
  if (angle == kHalfPi) return {0.0, 1.0};
  return {std::cos(angle), std::sin(angle)};
}

Point2 rotate(Point2 p, double angle) {
  const Point2 u = direction(angle);
  return {u.x * p.x - u.y * p.y, u.y * p.x + u.x * p.y};
}

// ---------------------------------------------------------------------------
// Rectangle

Rectangle::Rectangle(Point2 center, double theta, double long_side,
                     double short_side)
    : center_(center),
      theta_(normalize_angle(theta)),
      long_(long_side),
      short_(short_side) {
  if (!all_finite({center.x, center.y, theta, long_side, short_side})) {
    throw Error(ErrorCode::InvalidArgument, "rectangle with non-finite data");
  }
  if (!(short_side > 0.0) || long_side < short_side) {
    throw Error(ErrorCode::InvalidArgument,
                "rectangle needs long >= short > 0, got long=" +
                    std::to_string(long_side) +
                    " short=" + std::to_string(short_side));
  }
}

Rectangle Rectangle::axis_parallel(Point2 center, double width, double height) {
  if (width >= height) return Rectangle(center, 0.0, width, height);
  return Rectangle(center, kHalfPi, height, width);
}

Point2 Rectangle::short_axis() const {
  const Point2 u = long_axis();
  return {-u.y, u.x};
}

double Rectangle::width() const {
  const Point2 u = long_axis();
  return long_ * std::abs(u.x) + short_ * std::abs(u.y);
}

double Rectangle::height() const {
  const Point2 u = long_axis();
  return long_ * std::abs(u.y) + short_ * std::abs(u.x);
}

Point2 Rectangle::to_local(Point2 p) const {
  const Point2 d = p - center_;
  return {dot(d, long_axis()), dot(d, short_axis())};
}

Point2 Rectangle::from_local(Point2 local) const {
  return center_ + local.x * long_axis() + local.y * short_axis();
}

bool Rectangle::contains(Point2 p, double tol) const {
  const Point2 l = to_local(p);
  return std::abs(l.x) <= 0.5 * long_ + tol && std::abs(l.y) <= 0.5 * short_ + tol;
}

std::array<Point2, 4> Rectangle::corners() const {
  const Point2 hu = (0.5 * long_) * long_axis();
  const Point2 hv = (0.5 * short_) * short_axis();
  return {center_ - hu - hv, center_ + hu - hv, center_ + hu + hv,
          center_ - hu + hv};
}

Rectangle Rectangle::translated(Point2 offset) const {
  return Rectangle(center_ + offset, theta_, long_, short_);
}

// ---------------------------------------------------------------------------
// ConvexPolygon

ConvexPolygon::ConvexPolygon(std::vector<Point2> ccw_vertices) {
  for (const Point2& p : ccw_vertices) {
    if (!all_finite({p.x, p.y})) {
      throw Error(ErrorCode::InvalidArgument, "polygon with non-finite vertex");
    }
  }
  drop_repeats(ccw_vertices);
  if (ccw_vertices.size() < 3) return;
  const double tol = kCollinearTolerance * squared_diameter(ccw_vertices);
  if (!drop_flat_turns(ccw_vertices, tol, false)) {
    throw Error(ErrorCode::InvalidArgument,
                "polygon is not convex with counterclockwise orientation");
  }
  if (ccw_vertices.size() < 3) return;
  if (!(signed_area(ccw_vertices) > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "polygon has non-positive area");
  }
  vertices_ = std::move(ccw_vertices);
}

ConvexPolygon ConvexPolygon::from_rounded(std::vector<Point2> vertices) {
  ConvexPolygon out;
  drop_repeats(vertices);
  if (vertices.size() < 3) return out;
  const double tol = kCollinearTolerance * squared_diameter(vertices);
  drop_flat_turns(vertices, tol, true);
  if (vertices.size() < 3 || !(signed_area(vertices) > 0.0)) return out;
  out.vertices_ = std::move(vertices);
  return out;
}

double ConvexPolygon::area() const {
  if (is_empty()) return 0.0;
  return signed_area(vertices_);
}

double ConvexPolygon::diameter() const {
  return std::sqrt(squared_diameter(vertices_));
}

Point2 ConvexPolygon::centroid() const {
  if (is_empty()) {
    return {std::numeric_limits<double>::quiet_NaN(),
            std::numeric_limits<double>::quiet_NaN()};
  }
  // Shift to the first vertex to limit cancellation for far-away polygons.
  const Point2 o = vertices_.front();
  double a2 = 0.0;
  Point2 acc;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 p = vertices_[i] - o;
    const Point2 q = vertices_[(i + 1) % n] - o;
    const double c = cross(p, q);
    a2 += c;
    acc = acc + c * (p + q);
  }
  return o + (1.0 / (3.0 * a2)) * acc;
}

bool ConvexPolygon::contains(Point2 p, double tol) const {
  if (is_empty()) return false;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = vertices_[i];
    const Point2 edge = vertices_[(i + 1) % n] - a;
    if (cross(edge, p - a) < -tol * norm(edge)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Operations

ConvexPolygon rect_polygon(const Rectangle& r) {
  const auto c = r.corners();
  return ConvexPolygon(std::vector<Point2>(c.begin(), c.end()));
}

double polygon_area(const ConvexPolygon& p) { return p.area(); }

ConvexPolygon clip_convex(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (p.is_empty() || q.is_empty()) return {};
  std::vector<Point2> output(p.vertices().begin(), p.vertices().end());
  std::vector<Point2> input;
  const auto clipper = q.vertices();
  const std::size_t m = clipper.size();
  for (std::size_t e = 0; e < m && !output.empty(); ++e) {
    const Point2 a = clipper[e];
    const Point2 edge = clipper[(e + 1) % m] - a;
    input.swap(output);
    output.clear();
    const std::size_t n = input.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 prev = input[(i + n - 1) % n];
      const Point2 cur = input[i];
      const double dp = cross(edge, prev - a);
      const double dc = cross(edge, cur - a);
      if (dc >= 0.0) {
        if (dp < 0.0) output.push_back(prev + (dp / (dp - dc)) * (cur - prev));
        output.push_back(cur);
      } else if (dp >= 0.0) {
        output.push_back(prev + (dp / (dp - dc)) * (cur - prev));
      }
    }
  }
  return ConvexPolygon::from_rounded(std::move(output));
}

Rectangle hat_rect(const Rectangle& r) {
  return Rectangle::axis_parallel(r.center(), r.width(), r.height());
}

std::array<Point2, 2> check_rect_anchors(const Rectangle& r, double t) {
  if (!(t > 0.0 && t < 0.5)) {
    throw Error(ErrorCode::InvalidArgument, "t must lie in (0, 1/2)");
  }
  const bool mirrored = r.theta() > kHalfPi;
  const double theta = mirrored ? kPi - r.theta() : r.theta();
  const Point2 u = direction(theta);
  const Point2 v{-u.y, u.x};
  // Lower anchor relative to the center; the upper anchor is its opposite.
  Point2 lower = ((0.5 - t) * r.long_side()) * u - (0.5 * r.short_side()) * v;
  if (mirrored) lower.x = -lower.x;
  return {r.center() + lower, r.center() - lower};
}

Rectangle check_rect(const Rectangle& r, double t) {
  const auto [lower, upper] = check_rect_anchors(r, t);
  const double horizontal = std::abs(lower.x - upper.x);
  const double vertical = upper.y - lower.y;
  if (!(vertical > 0.0) || !(horizontal > 0.0)) {
    throw Error(ErrorCode::NonPositiveCheck,
                "inscribed rectangle degenerates (shape " +
                    std::to_string(r.shape()) + " at angle " +
                    std::to_string(r.theta()) + ")");
  }
  return Rectangle::axis_parallel(r.center(), horizontal, vertical);
}

namespace {

double dyadic_ceiling(double s) {
  int e = 0;
  const double m = std::frexp(s, &e);  // s = m 2^e, m in [1/2, 1)
  if (m == 0.5) return s;
  return std::ldexp(1.0, e);
}

}  // namespace

Rectangle dyadic_parent(const Rectangle& r) {
  if (!r.is_axis_parallel()) {
    throw Error(ErrorCode::PreconditionViolated,
                "dyadic parent needs an axis-parallel rectangle");
  }
  return Rectangle::axis_parallel(r.center(), dyadic_ceiling(r.width()),
                                  dyadic_ceiling(r.height()));
}

Rectangle bounding_box(std::span<const Rectangle> rects) {
  if (rects.empty()) {
    throw Error(ErrorCode::EmptyInput, "bounding box of no rectangles");
  }
  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x;
  double hi_x = -lo_x;
  double hi_y = -lo_x;
  for (const Rectangle& r : rects) {
    for (const Point2& c : r.corners()) {
      lo_x = std::min(lo_x, c.x);
      lo_y = std::min(lo_y, c.y);
      hi_x = std::max(hi_x, c.x);
      hi_y = std::max(hi_y, c.y);
    }
  }
  return Rectangle::axis_parallel({0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y)},
                                  hi_x - lo_x, hi_y - lo_y);
}

}  // namespace shapebasis
