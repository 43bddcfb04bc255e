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

#include <cmath>
#include <ostream>

namespace plantopo {

/// A point (or displacement) in the plane. Coordinates must stay finite;
/// constructors of higher-level types enforce this.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend constexpr Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
  friend constexpr Point2 operator-(Point2 p) { return {-p.x, -p.y}; }
  friend constexpr bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
  friend constexpr bool operator!=(Point2 a, Point2 b) { return !(a == b); }

  constexpr bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline constexpr double norm2(Point2 a) { return a.x * a.x + a.y * a.y; }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

inline std::ostream& operator<<(std::ostream& os, Point2 p) {
  return os << "(" << p.x << ", " << p.y << ")";
}

/// A straight segment with distinct endpoints.
struct Segment {
  Point2 a;
  Point2 b;

  Point2 at(double t) const { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }
  double length() const { return distance(a, b); }
};

}  // namespace plantopo
