// Copyright 2026 The Plantopo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "plantopo/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace plantopo {

PolyCurve::PolyCurve(std::vector<Point2> vertices, bool closed)
    : vertices_(std::move(vertices)), closed_(closed) {
  if (closed_ && vertices_.size() >= 2 && vertices_.front() == vertices_.back()) {
    vertices_.pop_back();  // closure is implicit
  }
  if (vertices_.size() < 2) {
    throw InvalidArgument("curve needs at least 2 vertices");
  }
  if (closed_ && vertices_.size() < 3) {
    throw InvalidArgument("closed curve needs at least 3 distinct vertices");
  }
  for (const Point2& v : vertices_) {
    if (!v.finite()) throw InvalidArgument("curve vertex is not finite");
  }
  const std::size_t n = vertices_.size();
  const std::size_t edges = closed_ ? n : n - 1;
  for (std::size_t i = 0; i < edges; ++i) {
    if (vertices_[i] == vertices_[(i + 1) % n]) {
      throw InvalidArgument("consecutive curve vertices coincide");
    }
  }
}

PolyCurve PolyCurve::reversed() const {
  std::vector<Point2> v(vertices_.rbegin(), vertices_.rend());
  return PolyCurve(std::move(v), closed_);
}

PolyCurve PolyCurve::rotated(std::size_t first) const {
  if (!closed_) throw InvalidArgument("rotated() requires a closed curve");
  const std::size_t n = vertices_.size();
  std::vector<Point2> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(vertices_[(first + i) % n]);
  return PolyCurve(std::move(v), true);
}

double PolyCurve::length() const {
  double total = 0.0;
  for (std::size_t i = 0; i < segment_count(); ++i) total += segment(i).length();
  return total;
}

double PolyCurve::signed_area() const {
  if (!closed_) throw InvalidArgument("signed_area requires a closed curve");
  double twice = 0.0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = vertices_[i];
    const Point2& b = vertices_[(i + 1) % n];
    twice += cross(a, b);
  }
  return 0.5 * twice;
}

void PolyCurve::aabb(Point2& lo, Point2& hi) const {
  lo = hi = vertices_.front();
  for (const Point2& v : vertices_) {
    lo.x = std::min(lo.x, v.x);
    lo.y = std::min(lo.y, v.y);
    hi.x = std::max(hi.x, v.x);
    hi.y = std::max(hi.y, v.y);
  }
}

bool PolyCurve::is_simple(double tol) const {
  const std::size_t m = segment_count();
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool adjacent =
          (j == i + 1) || (closed_ && i == 0 && j == m - 1);
      const SegmentIntersection r = segments_intersect(segment(i), segment(j), tol);
      if (adjacent) {
        // Adjacent edges may share exactly their common endpoint.
        if (std::holds_alternative<SegOverlap>(r)) return false;
        if (const auto* pt = std::get_if<SegPoint>(&r)) {
          const Point2 shared = (j == i + 1) ? vertices_[(i + 1) % n] : vertices_[0];
          if (distance(pt->at, shared) > tol) return false;
        }
      } else if (!is_disjoint(r)) {
        return false;
      }
    }
  }
  return true;
}

bool is_disjoint(const SegmentIntersection& r) {
  return std::holds_alternative<SegDisjoint>(r);
}

double distance_point_segment(Point2 p, const Segment& s) {
  const Point2 d = s.b - s.a;
  const double dd = norm2(d);
  if (dd == 0.0) return distance(p, s.a);
  double t = dot(p - s.a, d) / dd;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, s.at(t));
}

double distance_point_curve(Point2 p, const PolyCurve& c) {
  double best = distance_point_segment(p, c.segment(0));
  for (std::size_t i = 1; i < c.segment_count(); ++i) {
    best = std::min(best, distance_point_segment(p, c.segment(i)));
  }
  return best;
}

SegmentIntersection segments_intersect(const Segment& s1, const Segment& s2, double tol) {
  const Point2 a = s1.a, b = s1.b, c = s2.a, d = s2.b;
  const Point2 r = b - a, s = d - c;
  const double rlen = norm(r), slen = norm(s);
  if (rlen == 0.0 || slen == 0.0) throw InvalidArgument("degenerate segment");

  // Perpendicular distances of each endpoint to the other supporting line.
  const double d_c = cross(r, c - a) / rlen;
  const double d_d = cross(r, d - a) / rlen;
  const double d_a = cross(s, a - c) / slen;
  const double d_b = cross(s, b - c) / slen;

  const bool collinear = std::abs(d_c) <= tol && std::abs(d_d) <= tol &&
                         std::abs(d_a) <= tol && std::abs(d_b) <= tol;
  if (collinear) {
    // Project s2 onto s1's parameter.
    const double t0 = dot(c - a, r) / (rlen * rlen);
    const double t1 = dot(d - a, r) / (rlen * rlen);
    const double lo = std::min(t0, t1), hi = std::max(t0, t1);
    const double ov_lo = std::max(0.0, lo), ov_hi = std::min(1.0, hi);
    if (ov_hi < ov_lo - tol / rlen) return SegDisjoint{};
    if (ov_hi - ov_lo <= tol / rlen) {
      return SegPoint{s1.at(std::clamp(0.5 * (ov_lo + ov_hi), 0.0, 1.0))};
    }
    return SegOverlap{};
  }

  const double denom = cross(r, s);
  if (denom != 0.0) {
    const double t = cross(c - a, s) / denom;
    const double u = cross(c - a, r) / denom;
    const double tp = tol / rlen, up = tol / slen;
    if (t >= -tp && t <= 1.0 + tp && u >= -up && u <= 1.0 + up) {
      return SegPoint{s1.at(std::clamp(t, 0.0, 1.0))};
    }
    return SegDisjoint{};
  }

  // Parallel but not collinear within tolerance.
  return SegDisjoint{};
}

PointLocation point_in_polygon(Point2 p, const PolyCurve& c, double tol) {
  if (!c.closed()) throw InvalidArgument("point_in_polygon requires a closed curve");
  if (std::abs(c.signed_area()) < tol) throw DegenerateCurve("polygon area below tolerance");
  if (distance_point_curve(p, c) <= tol) return PointLocation::OnBoundary;

  // Even-odd crossing count with the half-open rule on a rightward ray.
  const std::size_t n = c.vertex_count();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& vi = c.vertex(i);
    const Point2& vj = c.vertex((i + 1) % n);
    if ((vi.y <= p.y) != (vj.y <= p.y)) {
      const double x_cross = vi.x + (p.y - vi.y) / (vj.y - vi.y) * (vj.x - vi.x);
      if (x_cross > p.x) inside = !inside;
    }
  }
  return inside ? PointLocation::Inside : PointLocation::Outside;
}

Orientation curve_orientation(const PolyCurve& c, double tol) {
  if (!c.closed()) throw InvalidArgument("curve_orientation requires a closed curve");
  const double area = c.signed_area();
  if (std::abs(area) < tol) throw DegenerateCurve("signed area below tolerance");
  return area > 0.0 ? Orientation::Positive : Orientation::Negative;
}

bool segment_intersects_rect(const Segment& s, Point2 lo, Point2 hi) {
  // Liang-Barsky style clipping against the closed box.
  double t0 = 0.0, t1 = 1.0;
  const double dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
  const double p[4] = {-dx, dx, -dy, dy};
  const double q[4] = {s.a.x - lo.x, hi.x - s.a.x, s.a.y - lo.y, hi.y - s.a.y};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0.0) return false;
    } else {
      const double t = q[i] / p[i];
      if (p[i] < 0.0) {
        t0 = std::max(t0, t);
      } else {
        t1 = std::min(t1, t);
      }
      if (t0 > t1) return false;
    }
  }
  return true;
}

PolyCurve make_circle(double radius, std::size_t sides, Point2 center) {
  if (sides < 3) throw InvalidArgument("circle needs at least 3 sides");
  if (!(radius > 0.0)) throw InvalidArgument("circle radius must be positive");
  std::vector<Point2> v;
  v.reserve(sides);
  for (std::size_t i = 0; i < sides; ++i) {
    const double a = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(sides);
    v.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
  }
  return PolyCurve(std::move(v), true);
}

PolyCurve make_rect(Point2 lo, Point2 hi) {
  if (!(lo.x < hi.x && lo.y < hi.y)) throw InvalidArgument("empty rectangle");
  return PolyCurve({{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}}, true);
}

}  // namespace plantopo
