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

#include "plantopo/plane_map.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

namespace plantopo {

AffineMap AffineMap::inverse() const {
  const double dt = det();
  if (dt == 0.0) throw InvalidArgument("affine map is singular");
  AffineMap inv;
  inv.a = d / dt;
  inv.b = -b / dt;
  inv.c = -c / dt;
  inv.d = a / dt;
  inv.tx = -(inv.a * tx + inv.b * ty);
  inv.ty = -(inv.c * tx + inv.d * ty);
  return inv;
}

AffineMap AffineMap::then(const AffineMap& n) const {
  AffineMap r;
  r.a = n.a * a + n.b * c;
  r.b = n.a * b + n.b * d;
  r.c = n.c * a + n.d * c;
  r.d = n.c * b + n.d * d;
  r.tx = n.a * tx + n.b * ty + n.tx;
  r.ty = n.c * tx + n.d * ty + n.ty;
  return r;
}

double AffineMap::linear_norm() const {
  // Largest singular value of [[a,b],[c,d]].
  const double t = a * a + b * b + c * c + d * d;
  const double dt = a * d - b * c;
  const double disc = std::sqrt(std::max(0.0, t * t - 4.0 * dt * dt));
  return std::sqrt(0.5 * (t + disc));
}

AffineMap AffineMap::rotation(double angle, Point2 center) {
  double ca = std::cos(angle), sa = std::sin(angle);
  // Snap to exact quarter-turn matrices so symmetric catalog scenarios stay
  // exactly symmetric.
  auto snap = [](double v) {
    if (std::abs(v) < 1e-15) return 0.0;
    if (std::abs(v - 1.0) < 1e-15) return 1.0;
    if (std::abs(v + 1.0) < 1e-15) return -1.0;
    return v;
  };
  ca = snap(ca);
  sa = snap(sa);
  AffineMap m;
  m.a = ca;
  m.b = -sa;
  m.c = sa;
  m.d = ca;
  m.tx = center.x - (m.a * center.x + m.b * center.y);
  m.ty = center.y - (m.c * center.x + m.d * center.y);
  return m;
}

AffineMap AffineMap::translation(Point2 v) {
  AffineMap m;
  m.tx = v.x;
  m.ty = v.y;
  return m;
}

AffineMap AffineMap::scaling(double s, Point2 center) {
  if (!(s > 0.0)) throw InvalidArgument("scaling factor must be positive");
  AffineMap m;
  m.a = m.d = s;
  m.tx = center.x * (1.0 - s);
  m.ty = center.y * (1.0 - s);
  return m;
}

AffineMap AffineMap::linear(double a, double b, double c, double d) {
  AffineMap m;
  m.a = a;
  m.b = b;
  m.c = c;
  m.d = d;
  if (!(m.det() > 0.0)) throw InvalidArgument("linear map must have positive determinant");
  return m;
}

PolyCurve transform_curve(const AffineMap& g, const PolyCurve& curve) {
  std::vector<Point2> v;
  v.reserve(curve.vertex_count());
  for (const Point2& p : curve.vertices()) v.push_back(g(p));
  return PolyCurve(std::move(v), curve.closed());
}

PlaneMap::PlaneMap(std::string id, Fn forward, Fn inverse)
    : id_(std::move(id)), forward_(std::move(forward)), inverse_(std::move(inverse)) {
  if (!forward_ || !inverse_) throw InvalidArgument("map needs forward and inverse evaluators");
}

namespace maps {

PlaneMap from_affine(const std::string& id, const AffineMap& m) {
  if (!(m.det() > 0.0)) {
    throw InvalidArgument("catalog maps must preserve orientation (det > 0)");
  }
  const AffineMap inv = m.inverse();
  PlaneMap map(id, [m](Point2 p) { return m(p); }, [inv](Point2 p) { return inv(p); });
  map.affine = m;
  map.lipschitz = m.linear_norm();
  return map;
}

PlaneMap rotation(double angle, Point2 center) {
  std::ostringstream id;
  id << "rot:" << angle;
  if (center.x != 0.0 || center.y != 0.0) id << ":" << center.x << ":" << center.y;
  return from_affine(id.str(), AffineMap::rotation(angle, center));
}

PlaneMap translation(Point2 v) {
  std::ostringstream id;
  id << "trans:" << v.x << ":" << v.y;
  return from_affine(id.str(), AffineMap::translation(v));
}

PlaneMap scaling(double s, Point2 center) {
  std::ostringstream id;
  id << "scale:" << s;
  if (center.x != 0.0 || center.y != 0.0) id << ":" << center.x << ":" << center.y;
  return from_affine(id.str(), AffineMap::scaling(s, center));
}

PlaneMap linear(double a, double b, double c, double d) {
  std::ostringstream id;
  id << "linear:" << a << ":" << b << ":" << c << ":" << d;
  return from_affine(id.str(), AffineMap::linear(a, b, c, d));
}

namespace {

constexpr double kFlowStep = 1e-3;
constexpr int kFlowSteps = 1000;

// x-field switch: 1 on |x| <= 1.75, smoothstep down to 0 at |x| >= 2.75.
double flow_cut(double x) {
  const double u = (std::abs(x) - 1.75);
  if (u <= 0.0) return 1.0;
  if (u >= 1.0) return 0.0;
  return 1.0 - u * u * (3.0 - 2.0 * u);
}

Point2 flow_field(Point2 p) {
  return {p.x * (1.0 - p.x * p.x) * flow_cut(p.x), -p.y};
}

Point2 rk4_time1(Point2 p, double step) {
  for (int i = 0; i < kFlowSteps; ++i) {
    const Point2 k1 = flow_field(p);
    const Point2 k2 = flow_field(p + (0.5 * step) * k1);
    const Point2 k3 = flow_field(p + (0.5 * step) * k2);
    const Point2 k4 = flow_field(p + step * k3);
    p = p + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return p;
}

}  // namespace

PlaneMap cubic_flow() {
  PlaneMap map(
      "flow:cubic", [](Point2 p) { return rk4_time1(p, kFlowStep); },
      [](Point2 p) { return rk4_time1(p, -kFlowStep); });
  map.side_preserving = true;  // the flow preserves both half planes
  map.check_lo = {-1.2, -1.0};
  map.check_hi = {1.2, 1.0};
  return map;
}

PlaneMap compose(const PlaneMap& first, const PlaneMap& second) {
  PlaneMap map(
      first.id() + "|" + second.id(),
      [first, second](Point2 p) { return second(first(p)); },
      [first, second](Point2 p) { return first.inverse(second.inverse(p)); });
  map.orientation_preserving = first.orientation_preserving && second.orientation_preserving;
  map.smooth = first.smooth && second.smooth;
  map.side_preserving = first.side_preserving && second.side_preserving;
  if (first.lipschitz && second.lipschitz) map.lipschitz = *first.lipschitz * *second.lipschitz;
  if (first.affine && second.affine) map.affine = first.affine->then(*second.affine);
  map.check_lo = {std::max(first.check_lo.x, second.check_lo.x),
                  std::max(first.check_lo.y, second.check_lo.y)};
  map.check_hi = {std::min(first.check_hi.x, second.check_hi.x),
                  std::min(first.check_hi.y, second.check_hi.y)};
  return map;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_angle(const std::string& t) {
  if (t == "pi") return M_PI;
  if (t == "-pi") return -M_PI;
  if (t == "pi/2") return M_PI_2;
  if (t == "-pi/2") return -M_PI_2;
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw InvalidArgument("bad angle '" + t + "'");
  }
  if (pos != t.size()) throw InvalidArgument("bad angle '" + t + "'");
  return v;
}

double parse_num(const std::string& t) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw InvalidArgument("bad number '" + t + "'");
  }
  if (pos != t.size()) throw InvalidArgument("bad number '" + t + "'");
  if (!std::isfinite(v)) throw InvalidArgument("number out of range '" + t + "'");
  return v;
}

PlaneMap parse_unit(const std::string& unit) {
  const std::vector<std::string> f = split(unit, ':');
  const std::string& name = f[0];
  const std::size_t args = f.size() - 1;
  if (name == "rot") {
    if (args == 1) {
      const double a = parse_angle(f[1]);
      // A half turn is stored as the exact point reflection.
      if (f[1] == "pi" || f[1] == "-pi") return from_affine("rot:pi", AffineMap::linear(-1, 0, 0, -1));
      return rotation(a);
    }
    if (args == 3) return rotation(parse_angle(f[1]), {parse_num(f[2]), parse_num(f[3])});
    throw InvalidArgument("rot wants rot:<angle>[:<cx>:<cy>]");
  }
  if (name == "pirot") {
    if (args != 0) throw InvalidArgument("pirot takes no arguments");
    return from_affine("rot:pi", AffineMap::linear(-1, 0, 0, -1));
  }
  if (name == "trans") {
    if (args != 2) throw InvalidArgument("trans wants trans:<dx>:<dy>");
    return translation({parse_num(f[1]), parse_num(f[2])});
  }
  if (name == "scale") {
    if (args == 1) return scaling(parse_num(f[1]));
    if (args == 3) return scaling(parse_num(f[1]), {parse_num(f[2]), parse_num(f[3])});
    throw InvalidArgument("scale wants scale:<s>[:<cx>:<cy>]");
  }
  if (name == "linear") {
    if (args != 4) throw InvalidArgument("linear wants linear:<a>:<b>:<c>:<d>");
    return linear(parse_num(f[1]), parse_num(f[2]), parse_num(f[3]), parse_num(f[4]));
  }
  if (name == "flow") {
    if (args != 1 || f[1] != "cubic") throw InvalidArgument("unknown flow; try flow:cubic");
    return cubic_flow();
  }
  throw InvalidArgument("unknown map '" + name + "'");
}

}  // namespace

PlaneMap parse(const std::string& spec) {
  if (spec.empty()) throw InvalidArgument("empty map spec");
  const std::vector<std::string> units = split(spec, '|');
  PlaneMap map = parse_unit(units[0]);
  for (std::size_t i = 1; i < units.size(); ++i) {
    map = compose(map, parse_unit(units[i]));
  }
  return map;
}

}  // namespace maps

MapCheckReport spot_check(const PlaneMap& map, std::uint64_t seed, int samples) {
  MapCheckReport rep;
  rep.samples = samples;
  rep.min_jacobian_det = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(map.check_lo.x, map.check_hi.x);
  std::uniform_real_distribution<double> uy(map.check_lo.y, map.check_hi.y);
  const double step = 1e-6;
  for (int i = 0; i < samples; ++i) {
    const Point2 p{ux(rng), uy(rng)};
    rep.max_inverse_error = std::max(rep.max_inverse_error, distance(map.inverse(map(p)), p));
    if (map.smooth) {
      const Point2 fx1 = map({p.x + step, p.y}), fx0 = map({p.x - step, p.y});
      const Point2 fy1 = map({p.x, p.y + step}), fy0 = map({p.x, p.y - step});
      const double j11 = (fx1.x - fx0.x) / (2.0 * step), j12 = (fy1.x - fy0.x) / (2.0 * step);
      const double j21 = (fx1.y - fx0.y) / (2.0 * step), j22 = (fy1.y - fy0.y) / (2.0 * step);
      rep.min_jacobian_det = std::min(rep.min_jacobian_det, j11 * j22 - j12 * j21);
    }
  }
  if (!map.smooth) rep.min_jacobian_det = 1.0;
  return rep;
}

}  // namespace plantopo
