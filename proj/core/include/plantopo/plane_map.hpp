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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "plantopo/geometry.hpp"

namespace plantopo {

/// Invertible affine map x' = A x + t.
struct AffineMap {
  double a = 1.0, b = 0.0;  // first row of A
  double c = 0.0, d = 1.0;  // second row of A
  double tx = 0.0, ty = 0.0;

  Point2 operator()(Point2 p) const {
    return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
  }
  double det() const { return a * d - b * c; }
  AffineMap inverse() const;
  /// Composition: apply `this` first, then `next`.
  AffineMap then(const AffineMap& next) const;
  /// Operator norm of the linear part.
  double linear_norm() const;

  static AffineMap rotation(double angle, Point2 center = {0.0, 0.0});
  static AffineMap translation(Point2 v);
  static AffineMap scaling(double s, Point2 center = {0.0, 0.0});
  static AffineMap linear(double a, double b, double c, double d);
};

PolyCurve transform_curve(const AffineMap& g, const PolyCurve& curve);

/// An evaluable orientation-preserving homeomorphism of the plane: a catalog
/// entry with its exact (or numerically integrated) inverse.
class PlaneMap {
 public:
  using Fn = std::function<Point2(Point2)>;

  PlaneMap(std::string id, Fn forward, Fn inverse);

  const std::string& id() const { return id_; }
  Point2 operator()(Point2 p) const { return check(forward_(p)); }
  Point2 forward(Point2 p) const { return check(forward_(p)); }
  Point2 inverse(Point2 p) const { return check(inverse_(p)); }

  bool orientation_preserving = true;
  bool smooth = true;  // enables the sampled-Jacobian spot check
  /// Declared for catalog entries whose dynamics preserve the two sides of
  /// an invariant arc (used only in reports).
  bool side_preserving = false;
  std::optional<double> lipschitz;
  std::optional<AffineMap> affine;
  /// Box in which the inverse round-trip is certified to meet tau_inv.
  Point2 check_lo{-2.0, -2.0};
  Point2 check_hi{2.0, 2.0};

 private:
  static Point2 check(Point2 p) {
    if (!p.finite()) throw Error("map produced a non-finite point");
    return p;
  }

  std::string id_;
  Fn forward_;
  Fn inverse_;
};

namespace maps {

PlaneMap from_affine(const std::string& id, const AffineMap& m);
PlaneMap rotation(double angle, Point2 center = {0.0, 0.0});
PlaneMap translation(Point2 v);
PlaneMap scaling(double s, Point2 center = {0.0, 0.0});
PlaneMap linear(double a, double b, double c, double d);
/// Time-1 map of the planar flow x' = x(1-x^2), y' = -y, integrated with
/// fixed-step RK4 (step 1e-3). The x-field is smoothly switched off beyond
/// |x| ~ 1.75 so backward orbits stay bounded; dynamics near the invariant
/// segment are untouched. Fixed points: (-1,0), (0,0), (1,0).
PlaneMap cubic_flow();
/// Apply `first`, then `second`.
PlaneMap compose(const PlaneMap& first, const PlaneMap& second);

/// Parses a catalog spec such as "rot:pi", "rot:1.0:0.25:0.25",
/// "trans:3:0", "scale:0.5", "linear:2:0:0:0.5", "pirot", "flow:cubic",
/// or a '|'-separated composition applied left to right.
PlaneMap parse(const std::string& spec);

}  // namespace maps

struct MapCheckReport {
  double max_inverse_error = 0.0;
  double min_jacobian_det = 0.0;
  int samples = 0;

  bool ok(double tau_inv = 1e-9) const {
    return max_inverse_error <= tau_inv && min_jacobian_det > 0.0;
  }
};

/// Samples inverse round-trips and (for smooth maps) central-difference
/// Jacobian determinants at random points of the map's check box.
MapCheckReport spot_check(const PlaneMap& map, std::uint64_t seed = 1, int samples = 100);

}  // namespace plantopo
