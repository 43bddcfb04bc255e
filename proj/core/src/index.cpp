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

#include "plantopo/index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace plantopo {
namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr int kMaxBisectionDepth = 52;

double wrap_pi(double a) { return std::remainder(a, kTwoPi); }

// Shared state of one adaptive lift.
struct Lifter {
  const PlaneMap& f;
  const IndexConfig& cfg;
  std::size_t samples = 0;
  double min_disp = std::numeric_limits<double>::infinity();

  double raw_angle(Point2 p, double t) {
    if (++samples > cfg.max_samples) {
      throw RefinementExhausted("sample budget exhausted before angle gaps fell below pi/2");
    }
    const Point2 d = f(p) - p;
    const double mag = norm(d);
    if (mag <= cfg.delta_fix) throw FixedPointOnCurve(t, p, mag);
    min_disp = std::min(min_disp, mag);
    return std::atan2(d.y, d.x);
  }

  // Lifted angle change across one straight piece, bisecting until adjacent
  // samples differ by less than pi/2.
  double lift(Point2 p0, Point2 p1, double t0, double t1, double a0, double a1, int depth) {
    const double gap = wrap_pi(a1 - a0);
    if (std::abs(gap) < M_PI_2) return gap;
    if (depth >= kMaxBisectionDepth) {
      throw RefinementExhausted("angle gap did not fall below pi/2 at maximum bisection depth");
    }
    const Point2 mid = 0.5 * (p0 + p1);
    const double tm = 0.5 * (t0 + t1);
    const double am = raw_angle(mid, tm);
    return lift(p0, mid, t0, tm, a0, am, depth + 1) + lift(mid, p1, tm, t1, am, a1, depth + 1);
  }
};

}  // namespace

IndexCertificate index_along(const PlaneMap& f, const PolyCurve& alpha, const IndexConfig& cfg,
                             const std::string& curve_id) {
  Lifter lifter{f, cfg};
  const std::size_t nseg = alpha.segment_count();
  const std::size_t nver = alpha.vertex_count();

  std::vector<double> raw(nver);
  for (std::size_t i = 0; i < nver; ++i) {
    raw[i] = lifter.raw_angle(alpha.vertex(i), static_cast<double>(i) / static_cast<double>(nseg));
  }

  double total = 0.0;
  for (std::size_t i = 0; i < nseg; ++i) {
    const std::size_t j = (i + 1) % nver;
    const double t0 = static_cast<double>(i) / static_cast<double>(nseg);
    const double t1 = static_cast<double>(i + 1) / static_cast<double>(nseg);
    total += lifter.lift(alpha.vertex(i), alpha.vertex(j), t0, t1, raw[i], raw[j], 0);
  }

  IndexCertificate cert;
  cert.index.turns = total / kTwoPi;
  if (alpha.closed()) {
    const double r = std::round(cert.index.turns);
    if (std::abs(cert.index.turns - r) > cfg.eps_int) {
      throw RefinementExhausted("closed-curve total is not integral within eps_int");
    }
    cert.index.integer = static_cast<long long>(r);
  }
  cert.samples_used = lifter.samples;
  cert.min_displacement = lifter.min_disp;
  cert.curve_id = curve_id;
  cert.map_id = f.id();
  return cert;
}

bool index_reverse_check(const PlaneMap& f, const PolyCurve& alpha, const IndexConfig& cfg) {
  const IndexCertificate fwd = index_along(f, alpha, cfg);
  const IndexCertificate bwd = index_along(f, alpha.reversed(), cfg);
  if (alpha.closed()) return fwd.index.as_integer() + bwd.index.as_integer() == 0;
  return std::abs(fwd.index.turns + bwd.index.turns) <= cfg.eps_int;
}

bool conjugation_invariance_check(const PlaneMap& f, const AffineMap& g, const PolyCurve& c,
                                  const IndexConfig& cfg) {
  if (!c.closed()) throw InvalidArgument("conjugation invariance is stated for closed curves");
  if (!(g.det() > 0.0)) throw InvalidArgument("conjugating map must preserve orientation");
  const AffineMap ginv = g.inverse();
  PlaneMap conj(
      "conj(" + f.id() + ")", [&f, g, ginv](Point2 p) { return g(f(ginv(p))); },
      [&f, g, ginv](Point2 p) { return g(f.inverse(ginv(p))); });
  const IndexCertificate lhs = index_along(conj, transform_curve(g, c), cfg);
  const IndexCertificate rhs = index_along(f, c, cfg);
  return lhs.index.as_integer() == rhs.index.as_integer();
}

long long arc_index_difference(const PlaneMap& f, const PlaneMap& g, const PolyCurve& alpha,
                               const ArcConfig& cfg) {
  if (alpha.closed()) throw InvalidArgument("arc index difference wants an open arc");
  const Point2 a = alpha.vertex(0);
  const Point2 b = alpha.vertex(alpha.vertex_count() - 1);
  if (distance(f(a), g(a)) > cfg.endpoint_tol || distance(f(b), g(b)) > cfg.endpoint_tol) {
    throw EndpointMismatch("fields disagree at an arc endpoint");
  }
  const double diff =
      index_along(f, alpha, cfg.index).index.turns - index_along(g, alpha, cfg.index).index.turns;
  const double r = std::round(diff);
  if (std::abs(diff - r) > cfg.index.eps_int) {
    throw RefinementExhausted("arc index difference is not integral within eps_int");
  }
  return static_cast<long long>(r);
}

bool verify_jordan_enclosure(const PlaneMap& f, const PlaneMap& g, const PolyCurve& alpha,
                             std::size_t samples_per_edge) {
  try {
    std::vector<Point2> ring;
    const std::size_t nseg = alpha.segment_count();
    auto sample = [&](const PlaneMap& map, bool forward_dir) {
      std::vector<Point2> pts;
      for (std::size_t i = 0; i < nseg; ++i) {
        const Segment s = alpha.segment(i);
        for (std::size_t j = 0; j < samples_per_edge; ++j) {
          const double t = static_cast<double>(j) / static_cast<double>(samples_per_edge);
          pts.push_back(map(s.at(t)));
        }
      }
      pts.push_back(map(alpha.vertex(alpha.vertex_count() - 1)));
      if (!forward_dir) std::reverse(pts.begin(), pts.end());
      return pts;
    };
    for (Point2 p : sample(f, true)) ring.push_back(p);
    for (Point2 p : sample(g, false)) ring.push_back(p);
    // Drop consecutive duplicates (the shared endpoint images).
    std::vector<Point2> clean;
    for (const Point2& p : ring) {
      if (clean.empty() || distance(clean.back(), p) > 1e-12) clean.push_back(p);
    }
    while (clean.size() > 1 && distance(clean.front(), clean.back()) <= 1e-12) clean.pop_back();
    const PolyCurve closed(std::move(clean), true);
    if (curve_orientation(closed) != Orientation::Positive) return false;
    for (const Point2& v : alpha.vertices()) {
      if (point_in_polygon(v, closed) != PointLocation::Inside) return false;
    }
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace plantopo
