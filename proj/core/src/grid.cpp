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

#include "plantopo/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace plantopo {
namespace {

constexpr std::int64_t kMaxCellIndexMag = std::int64_t{1} << 28;

double pow2(int e) { return std::ldexp(1.0, e); }

// Dense bitmap over an inclusive cell box, for flood fills.
struct Raster {
  std::int64_t k0 = 0, l0 = 0;
  std::int64_t w = 0, h = 0;
  std::vector<std::uint8_t> v;

  Raster(std::int64_t k0, std::int64_t l0, std::int64_t w, std::int64_t h)
      : k0(k0), l0(l0), w(w), h(h) {
    if (w <= 0 || h <= 0 || w * h > (std::int64_t{1} << 28)) {
      throw DepthLimitExceeded("cell raster too large");
    }
    v.assign(static_cast<std::size_t>(w * h), 0);
  }

  bool inb(std::int64_t k, std::int64_t l) const {
    return k >= k0 && k < k0 + w && l >= l0 && l < l0 + h;
  }
  std::size_t idx(std::int64_t k, std::int64_t l) const {
    return static_cast<std::size_t>((l - l0) * w + (k - k0));
  }
  std::uint8_t get(std::int64_t k, std::int64_t l) const { return v[idx(k, l)]; }
  void set(std::int64_t k, std::int64_t l, std::uint8_t x) { v[idx(k, l)] = x; }
};

// 4-connected flood fill of `from`-valued cells starting at (k,l),
// rewriting them to `to`. Returns the number of cells rewritten.
std::size_t flood(Raster& r, std::int64_t k, std::int64_t l, std::uint8_t from, std::uint8_t to) {
  if (!r.inb(k, l) || r.get(k, l) != from) return 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> stack{{k, l}};
  r.set(k, l, to);
  std::size_t count = 0;
  while (!stack.empty()) {
    auto [ck, cl] = stack.back();
    stack.pop_back();
    ++count;
    const std::pair<std::int64_t, std::int64_t> nb[4] = {
        {ck + 1, cl}, {ck - 1, cl}, {ck, cl + 1}, {ck, cl - 1}};
    for (auto [nk, nl] : nb) {
      if (r.inb(nk, nl) && r.get(nk, nl) == from) {
        r.set(nk, nl, to);
        stack.push_back({nk, nl});
      }
    }
  }
  return count;
}

void bounds_of(const std::vector<CellIndex>& cells, CellIndex& lo, CellIndex& hi) {
  lo = hi = cells.front();
  for (const CellIndex& c : cells) {
    lo.k = std::min(lo.k, c.k);
    lo.l = std::min(lo.l, c.l);
    hi.k = std::max(hi.k, c.k);
    hi.l = std::max(hi.l, c.l);
  }
}

// Level-m cells whose closed square meets the continuum. At m > g.n() the
// finer grid lines never coincide with the coarser ones, so "meets" and
// "overlaps with positive area" agree; at m == g.n() the `touching` flag
// decides whether edge- and corner-neighbours count.
std::vector<CellIndex> cell_cover(const GridContinuum& g, int m, bool touching) {
  const int d = m - g.n();
  const std::int64_t s = std::int64_t{1} << d;
  std::unordered_set<std::uint64_t> seen;
  std::vector<CellIndex> out;
  auto pack = [](std::int64_t k, std::int64_t l) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(static_cast<std::int32_t>(k)))
            << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(static_cast<std::int32_t>(l)));
  };
  for (const CellIndex& c : g.cells()) {
    std::int64_t klo, khi, llo, lhi;
    if (d == 0) {
      const std::int64_t r = touching ? 1 : 0;
      klo = c.k - r, khi = c.k + r, llo = c.l - r, lhi = c.l + r;
    } else {
      klo = s * c.k - s / 2, khi = s * c.k + s / 2;
      llo = s * c.l - s / 2, lhi = s * c.l + s / 2;
    }
    for (std::int64_t k = klo; k <= khi; ++k) {
      for (std::int64_t l = llo; l <= lhi; ++l) {
        if (seen.insert(pack(k, l)).second) out.push_back({k, l});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_depth(const GridContinuum& g, int m) {
  if (m < g.n()) throw InvalidArgument("target resolution is coarser than the continuum's");
  if (m > kMaxGridDepth) throw DepthLimitExceeded("resolution exponent exceeds depth limit");
}

}  // namespace

GridContinuum::GridContinuum(int n, std::vector<CellIndex> cells)
    : n_(n), cells_(std::move(cells)) {
  if (n_ < 0 || n_ > kMaxGridDepth) throw InvalidArgument("resolution exponent out of range");
  if (cells_.empty()) throw InvalidArgument("continuum needs at least one cell");
  for (const CellIndex& c : cells_) {
    if (std::llabs(c.k) >= kMaxCellIndexMag || std::llabs(c.l) >= kMaxCellIndexMag) {
      throw InvalidArgument("cell index magnitude out of range");
    }
  }
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

double GridContinuum::cell_side() const { return pow2(-n_); }

bool GridContinuum::contains_cell(CellIndex c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

bool GridContinuum::covers_point(Point2 p) const {
  const double scale = pow2(n_);
  const double half = 0.5 * cell_side();
  const std::int64_t kc = std::llround(p.x * scale);
  const std::int64_t lc = std::llround(p.y * scale);
  for (std::int64_t k = kc - 1; k <= kc + 1; ++k) {
    for (std::int64_t l = lc - 1; l <= lc + 1; ++l) {
      if (std::abs(p.x - static_cast<double>(k) / scale) <= half &&
          std::abs(p.y - static_cast<double>(l) / scale) <= half && contains_cell({k, l})) {
        return true;
      }
    }
  }
  return false;
}

double GridContinuum::distance_to(Point2 p) const { return distance_to_cells(p, cells_, n_); }

void GridContinuum::cell_bounds(CellIndex& lo, CellIndex& hi) const { bounds_of(cells_, lo, hi); }

void GridContinuum::cell_square(CellIndex c, Point2& lo, Point2& hi) const {
  const double u = pow2(-(n_ + 1));
  lo = {static_cast<double>(2 * c.k - 1) * u, static_cast<double>(2 * c.l - 1) * u};
  hi = {static_cast<double>(2 * c.k + 1) * u, static_cast<double>(2 * c.l + 1) * u};
}

double distance_to_cells(Point2 p, const std::vector<CellIndex>& cells, int m) {
  const double u = pow2(-(m + 1));
  double best2 = std::numeric_limits<double>::infinity();
  for (const CellIndex& c : cells) {
    const double lox = static_cast<double>(2 * c.k - 1) * u;
    const double hix = static_cast<double>(2 * c.k + 1) * u;
    const double loy = static_cast<double>(2 * c.l - 1) * u;
    const double hiy = static_cast<double>(2 * c.l + 1) * u;
    const double dx = p.x < lox ? lox - p.x : (p.x > hix ? p.x - hix : 0.0);
    const double dy = p.y < loy ? loy - p.y : (p.y > hiy ? p.y - hiy : 0.0);
    best2 = std::min(best2, dx * dx + dy * dy);
    if (best2 == 0.0) break;
  }
  return std::sqrt(best2);
}

ValidationReport validate_continuum(const GridContinuum& g) {
  ValidationReport rep;
  rep.cell_count = g.size();

  CellIndex lo, hi;
  g.cell_bounds(lo, hi);
  Raster r(lo.k - 2, lo.l - 2, hi.k - lo.k + 5, hi.l - lo.l + 5);
  for (const CellIndex& c : g.cells()) r.set(c.k, c.l, 1);

  // Cell-set components.
  std::size_t components = 0;
  for (const CellIndex& c : g.cells()) {
    if (r.get(c.k, c.l) == 1) {
      ++components;
      flood(r, c.k, c.l, 1, 2);
    }
  }
  rep.component_count = components;
  rep.connected = components == 1;

  // Complement reachability from the frame.
  const std::size_t outside = flood(r, r.k0, r.l0, 0, 3);
  const std::size_t total = static_cast<std::size_t>(r.w * r.h);
  rep.hole_cell_count = total - outside - g.size();
  rep.non_separating = rep.hole_cell_count == 0;
  return rep;
}

GridContinuum refine(const GridContinuum& g, int m) {
  check_depth(g, m);
  return GridContinuum(m, cell_cover(g, m, /*touching=*/false));
}

PolyCurve trace_boundary(const std::vector<CellIndex>& region, int m) {
  if (region.empty()) throw InvalidArgument("empty region");
  std::unordered_set<std::uint64_t> cells;
  auto pack_cell = [](std::int64_t k, std::int64_t l) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(static_cast<std::int32_t>(k)))
            << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(static_cast<std::int32_t>(l)));
  };
  for (const CellIndex& c : region) cells.insert(pack_cell(c.k, c.l));
  auto in_region = [&](std::int64_t k, std::int64_t l) {
    return cells.count(pack_cell(k, l)) != 0;
  };

  // Directed unit edges in corner coordinates (units of 2^-(m+1)), oriented
  // with the region on the left, chained corner -> corner.
  auto pack_corner = [](std::int64_t x, std::int64_t y) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(static_cast<std::int32_t>(x)))
            << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(static_cast<std::int32_t>(y)));
  };
  std::unordered_map<std::uint64_t, std::uint64_t> next;
  next.reserve(region.size() * 2);
  std::uint64_t start = 0;
  bool have_start = false;
  std::int64_t start_x = 0, start_y = 0;
  auto add_edge = [&](std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1) {
    const auto key = pack_corner(x0, y0);
    if (!next.emplace(key, pack_corner(x1, y1)).second) {
      throw NotADisc("boundary passes a corner twice");
    }
    if (!have_start || x0 < start_x || (x0 == start_x && y0 < start_y)) {
      start = key;
      start_x = x0;
      start_y = y0;
      have_start = true;
    }
  };
  for (const CellIndex& c : region) {
    const std::int64_t x0 = 2 * c.k - 1, x1 = 2 * c.k + 1;
    const std::int64_t y0 = 2 * c.l - 1, y1 = 2 * c.l + 1;
    if (!in_region(c.k, c.l - 1)) add_edge(x0, y0, x1, y0);  // bottom, heading +x
    if (!in_region(c.k + 1, c.l)) add_edge(x1, y0, x1, y1);  // right, heading +y
    if (!in_region(c.k, c.l + 1)) add_edge(x1, y1, x0, y1);  // top, heading -x
    if (!in_region(c.k - 1, c.l)) add_edge(x0, y1, x0, y0);  // left, heading -y
  }

  const double u = pow2(-(m + 1));
  std::vector<Point2> verts;
  verts.reserve(next.size());
  std::uint64_t cur = start;
  do {
    const auto x = static_cast<std::int32_t>(cur >> 32);
    const auto y = static_cast<std::int32_t>(cur & 0xffffffffu);
    verts.push_back({static_cast<double>(x) * u, static_cast<double>(y) * u});
    cur = next.at(cur);
  } while (cur != start && verts.size() <= next.size());

  if (verts.size() != next.size()) {
    throw NotADisc("region boundary is not a single closed loop");
  }
  return PolyCurve(std::move(verts), /*closed=*/true);
}

DiscApproximation build_disc(const GridContinuum& g, int m) {
  check_depth(g, m);
  std::vector<CellIndex> q = cell_cover(g, m, /*touching=*/true);

  CellIndex lo, hi;
  bounds_of(q, lo, hi);
  Raster r(lo.k - 2, lo.l - 2, hi.k - lo.k + 5, hi.l - lo.l + 5);
  for (const CellIndex& c : q) r.set(c.k, c.l, 1);
  flood(r, r.k0, r.l0, 0, 3);  // complement cells reachable from the frame

  // Bounded complement components become part of the disc.
  std::vector<CellIndex> region = std::move(q);
  for (std::int64_t l = r.l0; l < r.l0 + r.h; ++l) {
    for (std::int64_t k = r.k0; k < r.k0 + r.w; ++k) {
      if (r.get(k, l) == 0) {
        region.push_back({k, l});
        r.set(k, l, 1);
      }
    }
  }
  std::sort(region.begin(), region.end());

  const std::size_t filled = flood(r, region.front().k, region.front().l, 1, 2);
  if (filled != region.size()) throw NotADisc("filled region is not connected");

  PolyCurve boundary = trace_boundary(region, m);
  return DiscApproximation{m, std::move(region), std::move(boundary), g};
}

std::vector<AccessSegment> access_segments(const DiscApproximation& d,
                                           const std::vector<Point2>& sites, double tol) {
  const GridContinuum& g = d.source;
  const int m = d.m;
  const double scale = pow2(m);
  const double half = 0.5 * pow2(-m);
  std::unordered_set<std::uint64_t> region;
  auto pack_cell = [](std::int64_t k, std::int64_t l) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(static_cast<std::int32_t>(k)))
            << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(static_cast<std::int32_t>(l)));
  };
  for (const CellIndex& c : d.region) region.insert(pack_cell(c.k, c.l));

  // Closed intersection of a level-m cell with one continuum cell, in units
  // of 2^-(m+1); empty unless the intervals overlap (degenerate allowed at
  // equal levels, where squares can share an edge or corner).
  const std::int64_t s = std::int64_t{1} << (m - g.n());
  auto cell_k_rect = [&](CellIndex q, CellIndex gc, std::int64_t& ax0, std::int64_t& ax1,
                         std::int64_t& ay0, std::int64_t& ay1) {
    ax0 = std::max(2 * q.k - 1, s * (2 * gc.k - 1));
    ax1 = std::min(2 * q.k + 1, s * (2 * gc.k + 1));
    ay0 = std::max(2 * q.l - 1, s * (2 * gc.l - 1));
    ay1 = std::min(2 * q.l + 1, s * (2 * gc.l + 1));
    return ax0 <= ax1 && ay0 <= ay1;
  };

  std::vector<AccessSegment> out;
  out.reserve(sites.size());
  const double u = pow2(-(m + 1));
  for (const Point2& site : sites) {
    if (distance_point_curve(site, d.boundary) > tol) {
      throw SiteOffBoundary("site does not lie on the disc boundary");
    }

    // The site's cell: lexicographically smallest region cell whose closed
    // square holds the site and which meets the continuum.
    const std::int64_t kc = std::llround(site.x * scale);
    const std::int64_t lc = std::llround(site.y * scale);
    bool found_cell = false;
    CellIndex q{};
    for (std::int64_t k = kc - 1; k <= kc + 1 && !found_cell; ++k) {
      for (std::int64_t l = lc - 1; l <= lc + 1; ++l) {
        if (std::abs(site.x - static_cast<double>(k) / scale) > half + tol) continue;
        if (std::abs(site.y - static_cast<double>(l) / scale) > half + tol) continue;
        if (!region.count(pack_cell(k, l))) continue;
        bool meets = false;
        const std::int64_t gklo = (2 * k - 1 - s) / (2 * s) - 1, gkhi = (2 * k + 1 + s) / (2 * s) + 1;
        const std::int64_t gllo = (2 * l - 1 - s) / (2 * s) - 1, glhi = (2 * l + 1 + s) / (2 * s) + 1;
        for (std::int64_t gk = gklo; gk <= gkhi && !meets; ++gk) {
          for (std::int64_t gl = gllo; gl <= glhi; ++gl) {
            std::int64_t a, b, c2, e;
            if (g.contains_cell({gk, gl}) && cell_k_rect({k, l}, {gk, gl}, a, b, c2, e)) {
              meets = true;
              break;
            }
          }
        }
        if (meets) {
          q = {k, l};
          found_cell = true;
          break;
        }
      }
    }
    if (!found_cell) throw SiteOffBoundary("site cell does not meet the continuum");

    // Nearest continuum point within the cell; ties resolve to the
    // lexicographically smallest point.
    double best2 = std::numeric_limits<double>::infinity();
    Point2 best{};
    const std::int64_t gklo = (2 * q.k - 1 - s) / (2 * s) - 1, gkhi = (2 * q.k + 1 + s) / (2 * s) + 1;
    const std::int64_t gllo = (2 * q.l - 1 - s) / (2 * s) - 1, glhi = (2 * q.l + 1 + s) / (2 * s) + 1;
    for (std::int64_t gk = gklo; gk <= gkhi; ++gk) {
      for (std::int64_t gl = gllo; gl <= glhi; ++gl) {
        std::int64_t ax0, ax1, ay0, ay1;
        if (!g.contains_cell({gk, gl})) continue;
        if (!cell_k_rect(q, {gk, gl}, ax0, ax1, ay0, ay1)) continue;
        const Point2 cand{std::clamp(site.x, static_cast<double>(ax0) * u, static_cast<double>(ax1) * u),
                          std::clamp(site.y, static_cast<double>(ay0) * u, static_cast<double>(ay1) * u)};
        const double d2 = norm2(cand - site);
        if (d2 < best2 || (d2 == best2 && (cand.x < best.x || (cand.x == best.x && cand.y < best.y)))) {
          best2 = d2;
          best = cand;
        }
      }
    }
    out.push_back(AccessSegment{site, best, Segment{site, best}});
  }
  return out;
}

bool region_covers_cell(const std::vector<CellIndex>& region, int coarse_m, CellIndex fine,
                        int fine_m) {
  if (fine_m < coarse_m) throw InvalidArgument("fine resolution must be >= coarse resolution");
  const std::int64_t s = std::int64_t{1} << (fine_m - coarse_m);
  // Fine square in units 2^-(fine_m+1): [2k-1, 2k+1]; coarse squares scaled by s.
  auto member = [&](std::int64_t k, std::int64_t l) {
    return std::binary_search(region.begin(), region.end(), CellIndex{k, l});
  };
  const std::int64_t fx0 = 2 * fine.k - 1, fx1 = 2 * fine.k + 1;
  const std::int64_t fy0 = 2 * fine.l - 1, fy1 = 2 * fine.l + 1;
  // Coarse cells overlapping with positive area per axis.
  auto axis_range = [&](std::int64_t f0, std::int64_t f1, std::int64_t& lo, std::int64_t& hi) {
    // coarse cell K spans [s(2K-1), s(2K+1)]; positive overlap with [f0, f1].
    lo = std::numeric_limits<std::int64_t>::max();
    hi = std::numeric_limits<std::int64_t>::min();
    for (std::int64_t K = (f0 - s) / (2 * s) - 2; K <= (f1 + s) / (2 * s) + 2; ++K) {
      if (s * (2 * K - 1) < f1 && s * (2 * K + 1) > f0) {
        lo = std::min(lo, K);
        hi = std::max(hi, K);
      }
    }
    return lo <= hi;
  };
  std::int64_t kxlo, kxhi, kylo, kyhi;
  if (!axis_range(fx0, fx1, kxlo, kxhi) || !axis_range(fy0, fy1, kylo, kyhi)) return false;
  for (std::int64_t K = kxlo; K <= kxhi; ++K) {
    for (std::int64_t L = kylo; L <= kyhi; ++L) {
      if (!member(K, L)) return false;
    }
  }
  return true;
}

GridContinuum make_cell_box(int n, std::int64_t klo, std::int64_t khi, std::int64_t llo,
                            std::int64_t lhi) {
  std::vector<CellIndex> cells;
  for (std::int64_t k = klo; k <= khi; ++k) {
    for (std::int64_t l = llo; l <= lhi; ++l) cells.push_back({k, l});
  }
  return GridContinuum(n, std::move(cells));
}

GridContinuum make_cell_cross(int n, std::int64_t arm) {
  std::vector<CellIndex> cells;
  for (std::int64_t k = -arm; k <= arm; ++k) {
    cells.push_back({k, 0});
    cells.push_back({0, k});
  }
  return GridContinuum(n, std::move(cells));
}

}  // namespace plantopo
