#include "spinelab/halfplane.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinelab/errors.hpp"

namespace spinelab {

namespace {

// Boundary ties inside reduction. Distinct from the classification tolerance:
// these only decide which of two equivalent boundary points is returned.
constexpr double kTieTolerance = 1e-12;
constexpr int kMaxReductionSteps = 10000;

}  // namespace

UHPoint::UHPoint(double re, double im) : z_(re, im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw DomainError("UHPoint: coordinates must be finite");
  }
  if (!(im > 0.0)) {
    throw DomainError("UHPoint: imaginary part must be positive, got " + std::to_string(im));
  }
}

UnimodularMatrix::UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (determinant() != 1) {
    throw DomainError("UnimodularMatrix: determinant must be 1");
  }
}

UnimodularMatrix operator*(const UnimodularMatrix& l, const UnimodularMatrix& r) {
  return {l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_,
          l.c_ * r.a_ + l.d_ * r.c_, l.c_ * r.b_ + l.d_ * r.d_};
}

std::string_view to_string(TorusKind kind) noexcept {
  switch (kind) {
    case TorusKind::Square: return "square";
    case TorusKind::Hexagonal: return "hexagonal";
    case TorusKind::Rectangular: return "rectangular";
    case TorusKind::FatRhombic: return "fat-rhombic";
    case TorusKind::ThinRhombic: return "thin-rhombic";
    case TorusKind::Generic: return "generic";
  }
  return "generic";
}

UHPoint moebius_apply(const UnimodularMatrix& m, UHPoint z) {
  const Complex v = z.value();
  const Complex num = static_cast<double>(m.a()) * v + static_cast<double>(m.b());
  const Complex den = static_cast<double>(m.c()) * v + static_cast<double>(m.d());
  // Im((az+b)/(cz+d)) = Im z / |cz+d|^2 exactly for det 1; use it instead of
  // the quotient so rounding can never push the result off the half-plane.
  const double den2 = std::norm(den);
  return UHPoint((num * std::conj(den)).real() / den2, z.im() / den2);
}

Reduction reduce_to_fundamental_domain(UHPoint z) {
  double re = z.re();
  double im = z.im();
  UnimodularMatrix m = UnimodularMatrix::identity();

  for (int step = 0; step < kMaxReductionSteps; ++step) {
    const double n = std::floor(re + 0.5);
    if (n != 0.0) {
      re -= n;
      m = UnimodularMatrix::translation(-static_cast<std::int64_t>(n)) * m;
    }
    const double r2 = re * re + im * im;
    if (r2 >= 1.0 - 1e-14) break;
    // -1/z = (-re + i im) / |z|^2
    re = -re / r2;
    im = im / r2;
    m = UnimodularMatrix::inversion() * m;
  }

  // Unit-arc tie: on |z| = 1, -1/z = -conj(z) is the same torus; keep
  // Re >= 0. Negating instead of dividing by |z|^2 keeps the step exact.
  const double r2 = re * re + im * im;
  if (std::abs(r2 - 1.0) <= kTieTolerance && re < 0.0) {
    re = -re;
    m = UnimodularMatrix::inversion() * m;
  }
  // Vertical-side tie: prefer Re = +1/2, exact by Sterbenz. With the exact
  // arc step this keeps the reduction idempotent.
  if (re < -0.5 + kTieTolerance) {
    re += 1.0;
    m = UnimodularMatrix::translation(1) * m;
  }
  return {UHPoint(re, im), m};
}

bool same_oriented_torus(UHPoint z, UHPoint w, double tol) {
  const Complex a = reduce_to_fundamental_domain(z).point.value();
  const Complex b = reduce_to_fundamental_domain(w).point.value();
  if (std::abs(a - b) <= tol) return true;
  // Boundary points identified by the side pairings but split by the tie-break
  // when the inputs straddle it within tolerance.
  if (std::abs(std::abs(a.real()) - 0.5) <= tol && std::abs(a.imag() - b.imag()) <= tol &&
      std::abs(std::abs(a.real() - b.real()) - 1.0) <= tol) {
    return true;
  }
  if (std::abs(std::norm(a) - 1.0) <= tol && std::abs(std::norm(b) - 1.0) <= tol &&
      std::abs(a + std::conj(b)) <= tol) {
    return true;
  }
  return false;
}

bool same_unoriented_torus(UHPoint z, UHPoint w, double tol) {
  return same_oriented_torus(z, w, tol) || same_oriented_torus(z, w.mirrored(), tol);
}

TorusKind classify_torus(UHPoint z, double tol) {
  const Complex z0 = reduce_to_fundamental_domain(z).point.value();
  const Complex hex = std::polar(1.0, std::numbers::pi / 3.0);
  if (std::abs(z0 - Complex(0.0, 1.0)) <= tol) return TorusKind::Square;
  if (std::abs(z0 - hex) <= tol) return TorusKind::Hexagonal;
  if (std::abs(z0.real()) <= tol) return TorusKind::Rectangular;
  if (std::abs(std::abs(z0) - 1.0) <= tol) return TorusKind::FatRhombic;
  if (std::abs(z0.real() - 0.5) <= tol) return TorusKind::ThinRhombic;
  return TorusKind::Generic;
}

}  // namespace spinelab
