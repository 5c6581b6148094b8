#include "spinelab/hexagon.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "spinelab/errors.hpp"

namespace spinelab {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

double snap(double v) { return std::abs(v) <= kBoundarySnap ? 0.0 : v; }

// Signed distances to every curve bounding the image regions.
struct BoundaryCoordinates {
  double ray0;  // > 0 iff Arg z < 2pi/3
  double ray1;  // > 0 iff Arg(z - 1) > pi/3
  double arc0;  // |z| - 1
  double arc1;  // |z - 1| - 1
  double mid;   // Re z - 1/2
};

BoundaryCoordinates boundary_coordinates(UHPoint z) {
  const Complex v = z.value();
  return {snap(z.re() + z.im() / kSqrt3), snap(1.0 + z.im() / kSqrt3 - z.re()),
          snap(std::abs(v) - 1.0), snap(std::abs(v - 1.0) - 1.0), snap(z.re() - 0.5)};
}

// Cosine of the angle at `at` in the triangle (at, p, q).
double vertex_cosine(Complex at, Complex p, Complex q) {
  const Complex u = p - at;
  const Complex v = q - at;
  return (u.real() * v.real() + u.imag() * v.imag()) / (std::abs(u) * std::abs(v));
}

// Weiszfeld iteration on the three vertices; only used when the closed form
// is numerically unusable.
Complex fermat_fixed_point(const std::array<Complex, 3>& p) {
  Complex x = (p[0] + p[1] + p[2]) / 3.0;
  for (int iter = 0; iter < 10000; ++iter) {
    Complex num = 0.0;
    double den = 0.0;
    bool near_vertex = false;
    for (const Complex& q : p) {
      const double d = std::abs(x - q);
      if (d < 1e-13) near_vertex = true;
      const double w = 1.0 / std::max(d, 1e-300);
      num += w * q;
      den += w;
    }
    Complex next = num / den;
    if (near_vertex) next = 0.5 * (x + next);
    const double step = std::abs(next - x);
    x = next;
    if (step < 1e-14) break;
  }
  return x;
}

}  // namespace

HexTriple::HexTriple(double a, double b, double c) : sides_{a, b, c} {
  for (double s : sides_) {
    if (!std::isfinite(s) || !(s > 0.0)) {
      throw NonPositiveSide("HexTriple: side lengths must be positive and finite");
    }
  }
}

HexTriple HexTriple::canonical_unoriented() const {
  std::array<double, 3> s = sides_;
  std::sort(s.begin(), s.end(), std::greater<>());
  const double total = s[0] + s[1] + s[2];
  return {s[0] / total, s[1] / total, s[2] / total};
}

HexTriple HexTriple::canonical_oriented() const {
  const double top = std::max({a(), b(), c()});
  std::array<double, 3> best{};
  bool have = false;
  for (int r = 0; r < 3; ++r) {
    const std::array<double, 3> rot{sides_[r], sides_[(r + 1) % 3], sides_[(r + 2) % 3]};
    if (rot[0] != top) continue;
    if (!have || rot > best) {
      best = rot;
      have = true;
    }
  }
  const double total = sum();
  return {best[0] / total, best[1] / total, best[2] / total};
}

HexTriple normalize_unoriented(double a, double b, double c) {
  return HexTriple(a, b, c).canonical_unoriented();
}

UHPoint tilde_p(const HexTriple& t) {
  const double a = t.a(), b = t.b(), c = t.c();
  const double d = b * b + c * c + b * c;
  const double re = (2.0 * c * c - a * b + a * c + b * c) / (2.0 * d);
  const double im = 0.5 * kSqrt3 * (a * b + b * c + a * c) / d;
  return {re, im};
}

std::optional<Complex> fermat_point(UHPoint z) {
  const Complex A = 0.0, B = 1.0, C = z.value();
  // An angle of 2pi/3 or more pushes the point onto that vertex.
  constexpr double kLimit = -0.5 + kBoundarySnap;
  if (vertex_cosine(A, B, C) <= kLimit || vertex_cosine(B, C, A) <= kLimit ||
      vertex_cosine(C, A, B) <= kLimit) {
    return std::nullopt;
  }

  // Torricelli construction: erect equilateral triangles outward on AB and
  // BC; the lines joining each apex to the opposite vertex meet at F.
  const Complex turn = std::polar(1.0, -std::numbers::pi / 3.0);
  const Complex apex_ab = A + (B - A) * turn;
  const Complex apex_bc = B + (C - B) * turn;
  const Complex d1 = apex_ab - C;
  const Complex d2 = apex_bc - A;
  const double det = cross(d1, d2);
  if (std::abs(det) > 1e-14 * std::abs(d1) * std::abs(d2)) {
    const double s = -cross(C - A, d2) / det;
    const Complex f = C + s * d1;
    if (std::isfinite(f.real()) && std::isfinite(f.imag())) return f;
  }
  return fermat_fixed_point({A, B, C});
}

std::optional<HexTriple> fermat_tripod(UHPoint z) {
  const auto f = fermat_point(z);
  if (!f) return std::nullopt;
  const double la = std::abs(z.value() - *f);
  const double lb = std::abs(1.0 - *f);
  const double lc = std::abs(*f);
  if (!(la > 0.0 && lb > 0.0 && lc > 0.0)) return std::nullopt;
  const double total = la + lb + lc;
  return HexTriple(la / total, lb / total, lc / total);
}

std::string_view to_string(Boundary b) noexcept {
  switch (b) {
    case Boundary::Interior: return "interior";
    case Boundary::ArcAB: return "arc-ab";
    case Boundary::LineBC: return "line-bc";
    case Boundary::Corner: return "corner";
    case Boundary::ExcludedRay: return "excluded-ray";
    case Boundary::Outside: return "outside";
  }
  return "outside";
}

RegionMembership membership_oriented(UHPoint z) {
  const BoundaryCoordinates q = boundary_coordinates(z);
  if (q.ray0 < 0.0 || q.ray1 < 0.0) return {false, Boundary::Outside};
  if (q.mid < 0.0 && q.arc0 < 0.0) return {false, Boundary::Outside};
  if (q.mid > 0.0 && q.arc1 < 0.0) return {false, Boundary::Outside};
  if (q.mid == 0.0 && q.arc0 < 0.0) return {false, Boundary::Outside};
  if (q.ray0 == 0.0 || q.ray1 == 0.0) return {false, Boundary::ExcludedRay};
  if (q.mid > 0.0 && q.arc1 == 0.0) return {false, Boundary::ArcAB};
  if (q.mid == 0.0 && q.arc0 == 0.0) return {true, Boundary::Corner};
  if (q.mid < 0.0 && q.arc0 == 0.0) return {true, Boundary::ArcAB};
  if (q.mid == 0.0) return {true, Boundary::LineBC};
  return {true, Boundary::Interior};
}

RegionMembership membership_unoriented(UHPoint z) {
  const BoundaryCoordinates q = boundary_coordinates(z);
  if (q.ray0 < 0.0 || q.arc0 < 0.0 || q.mid > 0.0) return {false, Boundary::Outside};
  if (q.ray0 == 0.0) return {false, Boundary::ExcludedRay};
  if (q.arc0 == 0.0 && q.mid == 0.0) return {true, Boundary::Corner};
  if (q.arc0 == 0.0) return {true, Boundary::ArcAB};
  if (q.mid == 0.0) return {true, Boundary::LineBC};
  return {true, Boundary::Interior};
}

std::array<double, 3> edge_lengths_normalized(const HexTriple& t) {
  const double b = t.b(), c = t.c();
  const double d = b * b + c * c + b * c;
  const double k = 1.0 / std::sqrt(d * tilde_p(t).im());
  return {t.a() * k, b * k, c * k};
}

Complex disc_model_transform(UHPoint z) {
  const Complex i(0.0, 1.0);
  const Complex v = z.value();
  return (2.0 * i * v + kSqrt3 - i) / (2.0 * v - 1.0 + kSqrt3 * i);
}

}  // namespace spinelab
