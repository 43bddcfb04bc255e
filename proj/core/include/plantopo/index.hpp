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
#include <string>

#include "plantopo/geometry.hpp"
#include "plantopo/plane_map.hpp"

namespace plantopo {

struct IndexConfig {
  /// Displacements at or below this magnitude flag a fixed point on the curve.
  double delta_fix = 1e-9;
  /// Distance from the nearest integer tolerated before snapping closed-curve
  /// totals; larger deviations are reported as refinement failures, since
  /// integrality is guaranteed for closed curves.
  double eps_int = 1e-6;
  /// Total sample budget for the adaptive lift.
  std::size_t max_samples = std::size_t{1} << 20;
};

/// Net rotation of the displacement field along a curve, in full turns.
struct IndexValue {
  double turns = 0.0;
  /// Present for closed curves: `turns` snapped to the nearest integer.
  std::optional<long long> integer;

  long long as_integer() const {
    if (!integer) throw InvalidArgument("index of an open arc is not integral");
    return *integer;
  }
};

struct IndexCertificate {
  IndexValue index;
  std::size_t samples_used = 0;
  double min_displacement = 0.0;
  std::string curve_id;
  std::string map_id;
};

/// Computes the index of the displacement field f(x) - x along `alpha` by
/// continuous angle lifting. Sampling starts at the curve's vertices and
/// bisects every interval whose raw angle gap reaches pi/2; closed-curve
/// totals snap to an integer within eps_int.
///
/// Throws FixedPointOnCurve when a sampled displacement is <= delta_fix, and
/// RefinementExhausted when the sample budget runs out or a closed total
/// fails the integer snap.
IndexCertificate index_along(const PlaneMap& f, const PolyCurve& alpha,
                             const IndexConfig& cfg = {}, const std::string& curve_id = "");

/// True when index(f, alpha) + index(f, alpha reversed) vanishes (exactly
/// after snapping for closed curves, within eps_int for arcs).
bool index_reverse_check(const PlaneMap& f, const PolyCurve& alpha, const IndexConfig& cfg = {});

/// True when index(g f g^-1, g(c)) equals index(f, c) for an
/// orientation-preserving affine g and a closed curve c.
bool conjugation_invariance_check(const PlaneMap& f, const AffineMap& g, const PolyCurve& c,
                                  const IndexConfig& cfg = {});

/// Geometric hypothesis the caller asserts for an arc-index difference; the
/// difference is computed either way, the hypothesis is not verified.
enum class ArcHypothesis {
  HalfLineAvoidance,      // both images avoid a half-line from an endpoint
  JordanEnclosure,        // the two images close up around the arc
  InteriorExteriorSplit,  // one image inside, one outside a surrounding curve
};

struct ArcConfig {
  ArcHypothesis hypothesis = ArcHypothesis::HalfLineAvoidance;
  IndexConfig index;
  double endpoint_tol = kDefaultOnTolerance;
};

/// Integer difference index(f, alpha) - index(g, alpha) for an open arc on
/// which f and g agree at both endpoints.
long long arc_index_difference(const PlaneMap& f, const PlaneMap& g, const PolyCurve& alpha,
                               const ArcConfig& cfg = {});

/// Best-effort check that the f- and g-images of the arc close up into a
/// positively-oriented simple curve enclosing the arc. Not a gate: sampled,
/// and silent about near-degenerate data (returns false).
bool verify_jordan_enclosure(const PlaneMap& f, const PlaneMap& g, const PolyCurve& alpha,
                             std::size_t samples_per_edge = 16);

}  // namespace plantopo
