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

#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "plantopo/errors.hpp"
#include "plantopo/types.hpp"

namespace plantopo {

/// Default fuzz band for on-boundary / collinearity classification.
inline constexpr double kDefaultOnTolerance = 1e-9;

enum class Orientation { Positive, Negative };

inline Orientation flip(Orientation o) {
  return o == Orientation::Positive ? Orientation::Negative : Orientation::Positive;
}

enum class PointLocation { Inside, Outside, OnBoundary };

/// An ordered polygonal curve: an open arc or, when `closed`, a polygon whose
/// last vertex connects back to the first (the closing vertex is not stored).
class PolyCurve {
 public:
  PolyCurve(std::vector<Point2> vertices, bool closed);

  bool closed() const { return closed_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  /// Number of straight edges (wraps around when closed).
  std::size_t segment_count() const {
    return closed_ ? vertices_.size() : vertices_.size() - 1;
  }
  const Point2& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<Point2>& vertices() const { return vertices_; }
  Segment segment(std::size_t i) const {
    return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
  }

  PolyCurve reversed() const;
  /// Same curve listed from a different starting vertex (closed curves only).
  PolyCurve rotated(std::size_t first) const;

  double length() const;
  /// Shoelace area; requires a closed curve.
  double signed_area() const;
  void aabb(Point2& lo, Point2& hi) const;

  /// Pairwise non-adjacent edge intersection scan. Quadratic; meant for
  /// curves up to a few thousand vertices.
  bool is_simple(double tol = kDefaultOnTolerance) const;

 private:
  std::vector<Point2> vertices_;
  bool closed_;
};

struct SegDisjoint {};
struct SegPoint {
  Point2 at;
};
struct SegOverlap {};
using SegmentIntersection = std::variant<SegDisjoint, SegPoint, SegOverlap>;

/// Classifies how two segments meet. Near-collinear contact within `tol`
/// resolves to Overlap; callers treat Overlap as a disjointness failure.
SegmentIntersection segments_intersect(const Segment& s1, const Segment& s2,
                                       double tol = kDefaultOnTolerance);

bool is_disjoint(const SegmentIntersection& r);

double distance_point_segment(Point2 p, const Segment& s);
/// Distance to the polyline (edges, closing edge included when closed).
double distance_point_curve(Point2 p, const PolyCurve& c);

/// Even-odd location of `p` against a closed simple curve; points within
/// `tol` of an edge report OnBoundary.
PointLocation point_in_polygon(Point2 p, const PolyCurve& c, double tol = kDefaultOnTolerance);

/// Positive when the bounded complementary component lies on the left of the
/// traversal (counter-clockwise). Throws DegenerateCurve when the signed area
/// is below `tol`.
Orientation curve_orientation(const PolyCurve& c, double tol = kDefaultOnTolerance);

/// True if the segment meets the closed axis-aligned rectangle.
bool segment_intersects_rect(const Segment& s, Point2 lo, Point2 hi);

/// Regular n-gon inscribed in the circle of radius r about `center`,
/// counter-clockwise, starting at angle 0.
PolyCurve make_circle(double radius, std::size_t sides, Point2 center = {0.0, 0.0});

/// Axis-aligned rectangle boundary, counter-clockwise.
PolyCurve make_rect(Point2 lo, Point2 hi);

}  // namespace plantopo
