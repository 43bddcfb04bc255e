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
#include <iosfwd>
#include <string>
#include <vector>

#include "plantopo/geometry.hpp"

namespace plantopo {

/// Deepest admitted resolution exponent: keeps every k/2^m coordinate and
/// every within-cell squared distance exactly representable in doubles.
inline constexpr int kMaxGridDepth = 24;

/// Index of the closed square cell centered at (k/2^n, l/2^n) with side 1/2^n.
struct CellIndex {
  std::int64_t k = 0;
  std::int64_t l = 0;

  friend constexpr bool operator==(CellIndex a, CellIndex b) = default;
  friend constexpr bool operator<(CellIndex a, CellIndex b) {
    return a.k != b.k ? a.k < b.k : a.l < b.l;
  }
};

/// A connected, non-separating union of closed dyadic grid cells. The point
/// set it denotes is the union of the closed squares of its cells.
class GridContinuum {
 public:
  GridContinuum(int n, std::vector<CellIndex> cells);

  int n() const { return n_; }
  const std::vector<CellIndex>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  double cell_side() const;

  bool contains_cell(CellIndex c) const;
  /// True if p lies in the closed point set.
  bool covers_point(Point2 p) const;
  /// Euclidean distance from p to the closed point set (0 when covered).
  double distance_to(Point2 p) const;

  void cell_bounds(CellIndex& lo, CellIndex& hi) const;
  /// Corner coordinates of one cell's closed square.
  void cell_square(CellIndex c, Point2& lo, Point2& hi) const;

 private:
  int n_;
  std::vector<CellIndex> cells_;  // sorted, unique
};

struct ValidationReport {
  bool connected = false;
  bool non_separating = false;
  std::size_t cell_count = 0;
  std::size_t component_count = 0;
  std::size_t hole_cell_count = 0;

  bool admissible() const { return connected && non_separating; }
};

/// Checks 4-connectivity of the cell set and connectivity of the complement
/// to the surrounding frame. Report-valued; never throws on bad input.
ValidationReport validate_continuum(const GridContinuum& g);

/// The filled dyadic approximation at resolution m: cells meeting the
/// continuum plus every bounded hole of their complement, with its traced
/// positively-oriented boundary.
struct DiscApproximation {
  int m = 0;
  std::vector<CellIndex> region;  // sorted
  PolyCurve boundary;
  GridContinuum source;
};

/// Builds the level-m approximation. `m` must satisfy g.n() <= m <=
/// kMaxGridDepth. Throws NotADisc if the filled region fails the
/// topological-disc checks (an inadmissible input slipped through).
DiscApproximation build_disc(const GridContinuum& g, int m);

/// Traces the boundary of a filled cell region at resolution m into one
/// simple closed lattice polygon, counter-clockwise (region on the left).
/// Vertices are the lattice corners of the unit cell edges.
PolyCurve trace_boundary(const std::vector<CellIndex>& region, int m);

/// Re-expresses the continuum at a finer resolution m >= g.n(). Cells are
/// those whose square overlaps the point set with positive area, so
/// refine(g, g.n()) == g; for m > g.n() the cover is a superset of the point
/// set within Hausdorff distance sqrt(2)/2^(m+1) (the finer tiling's grid
/// lines never align with the coarser one's).
GridContinuum refine(const GridContinuum& g, int m);

/// A straight access from a boundary point into the continuum.
struct AccessSegment {
  Point2 b;      // site on the disc boundary
  Point2 x_b;    // nearest continuum point within the site's cell
  Segment segment;  // degenerate (b == x_b) allowed
};

/// Nearest-point access segments for sites on the disc boundary. Segments of
/// distinct sites intersect in at most one point, which lies in the
/// continuum. Sites must lie on d.boundary within tol.
std::vector<AccessSegment> access_segments(const DiscApproximation& d,
                                           const std::vector<Point2>& sites,
                                           double tol = kDefaultOnTolerance);

/// True when the closed square of the level `fine_m` cell is contained in the
/// union of the region's level `coarse_m` squares. Exact integer arithmetic.
bool region_covers_cell(const std::vector<CellIndex>& region, int coarse_m,
                        CellIndex fine, int fine_m);

/// Distance from p to the union of closed level-m squares.
double distance_to_cells(Point2 p, const std::vector<CellIndex>& cells, int m);

/// Rectangular block of cells [klo..khi] x [llo..lhi] at resolution n.
GridContinuum make_cell_box(int n, std::int64_t klo, std::int64_t khi, std::int64_t llo,
                            std::int64_t lhi);

/// Plus-shaped block: horizontal and vertical arms of half-length `arm`.
GridContinuum make_cell_cross(int n, std::int64_t arm);

// --- text format -----------------------------------------------------------
//
// Line 1:        n <exponent>
// Further lines: <k> <l>      (one cell per line)
// '#' starts a comment; blank lines are skipped. Round-trips bit-exactly.

GridContinuum load_grid(std::istream& in, const std::string& path_for_errors = "<stream>");
GridContinuum load_grid_file(const std::string& path);
void save_grid(const GridContinuum& g, std::ostream& out);
void save_grid_file(const GridContinuum& g, const std::string& path);

}  // namespace plantopo
