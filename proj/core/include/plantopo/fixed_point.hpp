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

#include <array>
#include <cmath>
#include <variant>
#include <vector>

#include "plantopo/grid.hpp"
#include "plantopo/index.hpp"
#include "plantopo/plane_map.hpp"

namespace plantopo {

struct PipelineConfig {
  IndexConfig index;
  /// Invariance slack: boundary samples may drift up to kappa * 2^-n.
  double kappa = 1.5;
  /// Check h(K) stays near K but skip the h^-1 leg. Used for scenarios whose
  /// continuum is forward-absorbed rather than two-sided invariant.
  bool forward_only_invariance = false;
  double tau_inv = 1e-9;
  /// Disc approximation depth range; min_depth < 0 means start at g.n().
  int min_depth = -1;
  int max_depth = kMaxGridDepth;
  /// Witness mode: stop after the boundary certificate and cut census
  /// instead of locating the fixed point.
  bool witness_only = false;
  /// Subdivision stops when the region diameter reaches this.
  double radius = 0x1p-20;
  /// Jitter retries for dividing lines obstructed by a fixed point.
  int retries = 8;
  /// Half-side limit for the expanding-square scan.
  double search_radius = 1024.0;
  /// Vertical strips used when searching for additional fixed points.
  int strips = 8;
};

struct InvarianceReport {
  double max_forward_distance = 0.0;
  double max_backward_distance = 0.0;
  double threshold = 0.0;
  bool forward_only = false;
  bool invariant = false;
  std::size_t samples = 0;
};

/// Samples the continuum's cell-set boundary and measures how far h and h^-1
/// move it off the point set. Invariant iff both maxima (one in forward-only
/// mode) stay within kappa * cell side. Report-valued.
InvarianceReport check_invariance(const PlaneMap& h, const GridContinuum& g,
                                  const PipelineConfig& cfg = {});

enum class CutClass { Disjoint, Contracting, Expanding, Violated };

const char* to_string(CutClass c);

/// A cut: an open arc meeting the continuum exactly at its two endpoints,
/// together with an interior witness of the bounded pocket it closes off.
struct CutRegion {
  PolyCurve cut;
  Point2 region_probe;
};

/// Classifies how h moves the bounded pocket determined by the continuum and
/// the cut: image disjoint from the pocket, contracted into it, or expanded
/// over it. Decided on a probe mesh of pitch 2^-(m+2); straddling meshes
/// raise AmbiguousRegion (retry finer), a cut whose image meets the cut
/// reports Violated.
CutClass classify_cut(const PlaneMap& h, const CutRegion& cut, const GridContinuum& g, int m,
                      const PipelineConfig& cfg = {});

struct SubdivisionLevel {
  Point2 lo, hi;  // parent rectangle
  long long parent_index = 0;
  std::array<long long, 4> child_indices{0, 0, 0, 0};
  bool sum_consistent = false;
  int jitter_retries = 0;
};

struct FixedPointResult {
  Point2 point;
  double radius = 0.0;
  /// One boundary certificate per descended region, outermost first.
  std::vector<IndexCertificate> certificate_chain;
  std::vector<SubdivisionLevel> levels;
};

/// Boundary-index witness produced in witness mode: the certificate, the cut
/// census, and whether index == 1 + (number of expanding cuts) held.
struct IndexWitness {
  IndexCertificate certificate;
  int cut_count = 0;
  int expanding_count = 0;
  int contracting_count = 0;
  int disjoint_count = 0;
  bool cuts_clean = false;
  bool consistent = false;
};

struct CertifyOutcome {
  std::variant<FixedPointResult, IndexWitness> result;
  int resolution = 0;  // disc depth the pipeline settled on
  DiscApproximation disc;
  std::vector<AccessSegment> accesses;  // witness mode only
  InvarianceReport invariance;

  bool found() const { return std::holds_alternative<FixedPointResult>(result); }
  const FixedPointResult& fixed_point() const { return std::get<FixedPointResult>(result); }
  const IndexWitness& witness() const { return std::get<IndexWitness>(result); }
};

/// Certification pipeline for an invariant continuum: checks invariance,
/// builds the disc approximation, computes the boundary index, and either
/// locates a fixed point by degree bisection or (witness mode) classifies
/// the boundary cuts and reports the index census.
CertifyOutcome certify_invariant_continuum(const PlaneMap& h, const GridContinuum& g,
                                           const PipelineConfig& cfg = {});

/// Quadtree degree bisection: starting from a simple closed curve with
/// nonzero index, repeatedly splits the bounding rectangle in four and
/// descends into a child with nonzero boundary index, jittering dividing
/// lines that a fixed point obstructs.
FixedPointResult locate_by_subdivision(const PlaneMap& h, const PolyCurve& c,
                                       const PipelineConfig& cfg = {});

/// Locates a fixed point of h given a finite set it permutes (e.g. a periodic
/// orbit): scans expanding lattice squares for a nonzero boundary index and
/// then bisects. Throws SearchExhausted past cfg.search_radius.
FixedPointResult locate_from_invariant_set(const PlaneMap& h, const std::vector<Point2>& orbit,
                                           const PipelineConfig& cfg = {});

/// Locates the fixed points of h on an invariant thin continuum: runs the
/// certification pipeline, then re-certifies vertical strips of the disc
/// (dividing lines jittered off any fixed point) and returns every distinct
/// fixed point found, sorted by coordinates.
std::vector<FixedPointResult> multi_fixed_point_search(const PlaneMap& h, const GridContinuum& g,
                                                       const PipelineConfig& cfg = {});

}  // namespace plantopo
