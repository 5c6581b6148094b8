#include "spinelab/hyperbolic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "spinelab/errors.hpp"

namespace spinelab {

namespace {

using Vec3 = std::array<double, 3>;

constexpr double kPi = std::numbers::pi;
constexpr double kConstructionTolerance = 1e-9;

template <class T>
T ldot(const std::array<T, 3>& u, const std::array<T, 3>& v) {
  return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

Vec3 vec(const HPoint& p) { return {p.x0(), p.x1(), p.x2()}; }

template <class T>
std::array<T, 3> combine(T a, const std::array<T, 3>& u, T b, const std::array<T, 3>& v) {
  return {a * u[0] + b * v[0], a * u[1] + b * v[1], a * u[2] + b * v[2]};
}

Vec3 narrow(const std::array<long double, 3>& v) {
  return {static_cast<double>(v[0]), static_cast<double>(v[1]), static_cast<double>(v[2])};
}

// Rescales a timelike future vector onto the hyperboloid.
HPoint project(const Vec3& v) {
  const double norm = std::sqrt(-ldot(v, v));
  return {v[0] / norm, v[1] / norm, v[2] / norm};
}

// Lorentz Gram-Schmidt; the walk drifts off the hyperboloid without it.
template <class T>
void reorthonormalize(std::array<T, 3>& p, std::array<T, 3>& t, std::array<T, 3>& nrm) {
  p = combine<T>(1 / std::sqrt(-ldot(p, p)), p, 0, p);
  t = combine<T>(1, t, ldot(t, p), p);
  t = combine<T>(1 / std::sqrt(ldot(t, t)), t, 0, t);
  nrm = combine<T>(1, nrm, ldot(nrm, p), p);
  nrm = combine<T>(1, nrm, -ldot(nrm, t), t);
  nrm = combine<T>(1 / std::sqrt(ldot(nrm, nrm)), nrm, 0, nrm);
}

double tangent_angle(const Vec3& at, const Vec3& p, const Vec3& q) {
  // Project onto the tangent plane at `at`: u = x + <x, at> at.
  const Vec3 u = combine(1.0, p, ldot(p, at), at);
  const Vec3 v = combine(1.0, q, ldot(q, at), at);
  const double c = ldot(u, v) / std::sqrt(ldot(u, u) * ldot(v, v));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

HPoint::HPoint(double x0, double x1, double x2) : x_{x0, x1, x2} {
  if (!std::isfinite(x0) || !std::isfinite(x1) || !std::isfinite(x2) || !(x0 > 0.0)) {
    throw DomainError("HPoint: not on the upper sheet");
  }
  const double defect = -x0 * x0 + x1 * x1 + x2 * x2 + 1.0;
  if (std::abs(defect) > 1e-12 * std::max(1.0, x0 * x0)) {
    throw DomainError("HPoint: Lorentzian norm differs from -1 by " + std::to_string(defect));
  }
}

HPoint HPoint::polar(double r, double theta) {
  return {std::cosh(r), std::sinh(r) * std::cos(theta), std::sinh(r) * std::sin(theta)};
}

double lorentz_dot(const HPoint& p, const HPoint& q) noexcept { return ldot(vec(p), vec(q)); }

double dist(const HPoint& p, const HPoint& q) noexcept {
  // arccosh(-<p,q>) rewritten through <p-q, p-q> = 4 sinh^2(d/2), which keeps
  // full precision for nearby points. The clamp plays the role of
  // -<p,q> >= 1.
  const Vec3 diff = combine(1.0, vec(p), -1.0, vec(q));
  const double chord2 = std::max(0.0, ldot(diff, diff));
  return 2.0 * std::asinh(0.5 * std::sqrt(chord2));
}

HPoint convex_combination(double lambda, const HPoint& x1, const HPoint& x2) {
  return project(combine(lambda, vec(x1), 1.0 - lambda, vec(x2)));
}

HPoint geodesic_point(double lambda, const HPoint& x1, const HPoint& x2) {
  const double d = dist(x1, x2);
  if (d == 0.0) return x2;
  const double s = std::sinh(d);
  return project(combine(std::sinh(lambda * d) / s, vec(x1), std::sinh((1.0 - lambda) * d) / s,
                         vec(x2)));
}

double convexity_gap(const HPoint& x1, const HPoint& x2, const HPoint& y1, const HPoint& y2,
                     double lambda) {
  const HPoint xl = geodesic_point(lambda, x1, x2);
  const HPoint yl = geodesic_point(lambda, y1, y2);
  return lambda * dist(x1, y1) + (1.0 - lambda) * dist(x2, y2) - dist(xl, yl);
}

RegularPolygonData regular_polygon(int n, double interior_angle) {
  if (n < 3) throw NotHyperbolic("regular_polygon: need at least 3 sides");
  const double area = (n - 2) * kPi - n * interior_angle;
  if (!(area > 0.0) || !(interior_angle > 0.0)) {
    throw NotHyperbolic("regular_polygon: angle sum leaves no positive area");
  }
  const double center = kPi / n;
  const double half = 0.5 * interior_angle;
  // Right triangle (center, edge midpoint, vertex): cos A = cosh a sin B.
  // The walk is sensitive to the side it is given, so that one is kept in
  // extended precision for the construction.
  using L = long double;
  const L side = 2 * std::acosh(std::cos(std::numbers::pi_v<L> / n) / std::sin(static_cast<L>(half)));
  RegularPolygonData data{
      n,
      interior_angle,
      static_cast<double>(side),
      std::acosh(std::cos(half) / std::sin(center)),
      std::acosh(1.0 / (std::tan(center) * std::tan(half))),
      area,
      {},
  };

  data.construction = construct_polygon(n, side, interior_angle);
  const PolygonConstruction& built = data.construction;
  if (built.closure_error > kConstructionTolerance || built.heading_error > kConstructionTolerance ||
      built.max_angle_error > kConstructionTolerance ||
      std::abs(built.measured_inradius - data.inradius) > kConstructionTolerance) {
    throw Error("regular_polygon: explicit construction does not close (n = " +
                std::to_string(n) + ")");
  }
  return data;
}

PolygonConstruction construct_polygon(int n, long double side, long double interior_angle) {
  // Orthonormal frame (position, tangent, normal) in R^{2,1}, carried in
  // extended precision: each step's rounding error is amplified by up to
  // e^{2r} over the remaining walk, r the circumradius, and by the size of
  // the frame vectors. The start does not change what is measured, so it is
  // placed where the expected center sits at the origin.
  using L = long double;
  using LVec = std::array<L, 3>;
  LVec p{1, 0, 0};
  LVec t{0, 1, 0};
  LVec nrm{0, 0, 1};
  const L pi = std::numbers::pi_v<L>;
  const L cosh_guess = 1 / (std::tan(pi / n) * std::tan(interior_angle / 2));
  if (n >= 3 && cosh_guess > 1) {
    const L r = std::acosh(cosh_guess);
    const L half_turn = pi / n;
    // Vertex at angle -pi/n, heading to the vertex at +pi/n.
    p = {std::cosh(r), std::sinh(r) * std::cos(half_turn), -std::sinh(r) * std::sin(half_turn)};
    const LVec q{std::cosh(r), std::sinh(r) * std::cos(half_turn), std::sinh(r) * std::sin(half_turn)};
    t = combine<L>(1, q, ldot(q, p), p);
    t = combine<L>(1 / std::sqrt(ldot(t, t)), t, 0, t);
    const LVec o{1, 0, 0};
    LVec u = combine<L>(1, o, ldot(o, p), p);
    u = combine<L>(1, u, -ldot(u, t), t);
    nrm = combine<L>(1 / std::sqrt(ldot(u, u)), u, 0, u);
  }
  const LVec p0 = p, t0 = t;
  const L turn = std::numbers::pi_v<L> - interior_angle;
  const L ch = std::cosh(side), sh = std::sinh(side);
  const L ct = std::cos(turn), st = std::sin(turn);

  std::vector<Vec3> verts;
  verts.reserve(n);
  for (int k = 0; k < n; ++k) {
    verts.push_back(narrow(p));
    const LVec np = combine(ch, p, sh, t);
    const LVec nt = combine(sh, p, ch, t);
    p = np;
    t = combine(ct, nt, st, nrm);
    nrm = combine(-st, nt, ct, nrm);
    reorthonormalize(p, t, nrm);
  }

  PolygonConstruction out{};
  for (const Vec3& v : verts) out.vertices.push_back(project(v));
  out.closure_error = dist(project(narrow(p)), project(narrow(p0)));
  const LVec dt = combine<L>(1, t, -1, t0);
  out.heading_error = static_cast<double>(std::sqrt(dt[0] * dt[0] + dt[1] * dt[1] + dt[2] * dt[2]));

  Vec3 sum{0.0, 0.0, 0.0};
  for (const Vec3& v : verts) sum = combine(1.0, sum, 1.0, v);
  const HPoint center = project(sum);

  out.measured_inradius = INFINITY;
  out.measured_circumradius = 0.0;
  for (int k = 0; k < n; ++k) {
    const Vec3& prev = verts[(k + n - 1) % n];
    const Vec3& cur = verts[k];
    const Vec3& next = verts[(k + 1) % n];
    out.max_angle_error =
        std::max(out.max_angle_error, static_cast<double>(std::abs(tangent_angle(cur, prev, next) - interior_angle)));
    const HPoint a = out.vertices[k];
    const HPoint b = out.vertices[(k + 1) % n];
    out.max_side_error = std::max(out.max_side_error, static_cast<double>(std::abs(dist(a, b) - side)));
    out.measured_inradius = std::min(out.measured_inradius, dist(center, convex_combination(0.5, a, b)));
    out.measured_circumradius = std::max(out.measured_circumradius, dist(center, a));
  }
  return out;
}

double extremal_spine_systole(int genus) {
  if (genus < 2) throw InvalidGenus("extremal_spine_systole: genus must be >= 2");
  const RegularPolygonData poly = regular_polygon(12 * genus - 6, 2.0 * kPi / 3.0);
  return (6 * genus - 3) * poly.side;
}

}  // namespace spinelab
