#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "spinelab/halfplane.hpp"

namespace spinelab {

/// Lengths of three successive sides of a semi-regular hexagon (all interior
/// angles 2pi/3, opposite sides congruent). Only ratios matter.
class HexTriple {
 public:
  /// Throws NonPositiveSide unless all three are finite and > 0.
  HexTriple(double a, double b, double c);

  [[nodiscard]] double a() const noexcept { return sides_[0]; }
  [[nodiscard]] double b() const noexcept { return sides_[1]; }
  [[nodiscard]] double c() const noexcept { return sides_[2]; }
  [[nodiscard]] const std::array<double, 3>& sides() const noexcept { return sides_; }
  [[nodiscard]] double sum() const noexcept { return sides_[0] + sides_[1] + sides_[2]; }

  [[nodiscard]] HexTriple scaled(double k) const { return {k * a(), k * b(), k * c()}; }
  /// Sorted descending, summing to one.
  [[nodiscard]] HexTriple canonical_unoriented() const;
  /// Largest side first, cyclic order kept, summing to one. Among rotations
  /// that lead with the maximum the lexicographically largest wins.
  [[nodiscard]] HexTriple canonical_oriented() const;

  friend bool operator==(const HexTriple&, const HexTriple&) = default;

 private:
  std::array<double, 3> sides_;
};

HexTriple normalize_unoriented(double a, double b, double c);

/// Where the tripod built from the hexagon lands when its c and b legs end
/// at 0 and 1: the marked torus of the spine. Evaluated on the triple as
/// ordered; callers pass a canonical form with the largest side first.
UHPoint tilde_p(const HexTriple& t);

/// Fermat-Torricelli point of the triangle (0, 1, z), or nullopt when some
/// angle is >= 2pi/3 and the point collides with a vertex.
std::optional<Complex> fermat_point(UHPoint z);

/// (|z-F|, |1-F|, |F|) normalized to sum one, nullopt when degenerate.
/// Inverse of tilde_p on its image.
std::optional<HexTriple> fermat_tripod(UHPoint z);

enum class Boundary { Interior, ArcAB, LineBC, Corner, ExcludedRay, Outside };

std::string_view to_string(Boundary b) noexcept;

struct RegionMembership {
  bool inside = false;
  Boundary boundary = Boundary::Outside;
};

/// Tolerance for snapping a point onto a boundary curve of the image regions.
inline constexpr double kBoundarySnap = 1e-12;

/// Membership in the image of oriented hexagons. Hexagons with two equal
/// leading sides are represented on |z| = 1 only; the mirror arc |z-1| = 1
/// with Re z > 1/2 reports ArcAB with inside = false.
RegionMembership membership_oriented(UHPoint z);

/// Membership in the image of unoriented hexagons: Arg z < 2pi/3, |z| >= 1,
/// Re z <= 1/2.
RegionMembership membership_unoriented(UHPoint z);

/// Spine edge lengths on the unit-area torus, in triple order.
std::array<double, 3> edge_lengths_normalized(const HexTriple& t);

/// z -> (2iz + sqrt3 - i) / (2z - 1 + sqrt3 i); sends e^{i pi/3} to 0.
Complex disc_model_transform(UHPoint z);

}  // namespace spinelab
