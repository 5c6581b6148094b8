#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

namespace spinelab {

using Complex = std::complex<double>;

/// Default tolerance when comparing reduced moduli points.
inline constexpr double kModuliTolerance = 1e-9;

/// A point of the upper half-plane. Each one marks a flat torus, the quotient
/// of C by the lattice spanned by 1 and the point.
class UHPoint {
 public:
  /// Throws DomainError unless im > 0 and both parts are finite.
  UHPoint(double re, double im);
  explicit UHPoint(Complex z) : UHPoint(z.real(), z.imag()) {}

  [[nodiscard]] double re() const noexcept { return z_.real(); }
  [[nodiscard]] double im() const noexcept { return z_.imag(); }
  [[nodiscard]] Complex value() const noexcept { return z_; }

  /// Mirror image -conj(z): the same torus with opposite orientation.
  [[nodiscard]] UHPoint mirrored() const { return UHPoint(-re(), im()); }
  [[nodiscard]] UHPoint translated(double n) const { return UHPoint(re() + n, im()); }

  friend bool operator==(const UHPoint&, const UHPoint&) = default;

 private:
  Complex z_;
};

/// Integer 2x2 matrix with determinant one, acting by Moebius transformation.
class UnimodularMatrix {
 public:
  /// Throws DomainError if ad - bc != 1.
  UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static UnimodularMatrix identity() { return {1, 0, 0, 1}; }
  /// z -> z + n
  static UnimodularMatrix translation(std::int64_t n) { return {1, n, 0, 1}; }
  /// z -> -1/z
  static UnimodularMatrix inversion() { return {0, -1, 1, 0}; }

  [[nodiscard]] std::int64_t a() const noexcept { return a_; }
  [[nodiscard]] std::int64_t b() const noexcept { return b_; }
  [[nodiscard]] std::int64_t c() const noexcept { return c_; }
  [[nodiscard]] std::int64_t d() const noexcept { return d_; }
  [[nodiscard]] std::int64_t determinant() const noexcept { return a_ * d_ - b_ * c_; }

  friend UnimodularMatrix operator*(const UnimodularMatrix& lhs, const UnimodularMatrix& rhs);
  friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

 private:
  std::int64_t a_, b_, c_, d_;
};

enum class TorusKind { Square, Hexagonal, Rectangular, FatRhombic, ThinRhombic, Generic };

/// Lower-case hyphenated name ("square", "fat-rhombic", ...).
std::string_view to_string(TorusKind kind) noexcept;

/// (a z + b) / (c z + d)
UHPoint moebius_apply(const UnimodularMatrix& m, UHPoint z);

struct Reduction {
  UHPoint point;
  UnimodularMatrix matrix;
};

/// Gauss reduction into |z| >= 1, |Re z| <= 1/2. Boundary ties resolve to
/// Re z >= 0 on the unit arc and to Re z = +1/2 on the vertical sides, so the
/// result is a canonical representative of the oriented torus and
/// reduce(reduce(z).point) reproduces it bit for bit.
Reduction reduce_to_fundamental_domain(UHPoint z);

bool same_oriented_torus(UHPoint z, UHPoint w, double tol = kModuliTolerance);
bool same_unoriented_torus(UHPoint z, UHPoint w, double tol = kModuliTolerance);

TorusKind classify_torus(UHPoint z, double tol = kModuliTolerance);

}  // namespace spinelab
