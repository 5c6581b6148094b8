#include "spinelab/spines.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace spinelab {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kMarkerMergeTolerance = 1e-12;

using Membership = RegionMembership (*)(UHPoint);

// Points of the SL2(Z)-orbit of the reduced torus that can fall in the image
// regions. Off the unit arc the orbit meets a translate of the closed
// fundamental domain only in z0 + n; on the arc the side pairing adds
// -1/z0 = -conj(z0) and its translates (a fat rhombic torus carries two
// spines). The unoriented orbit adds the mirror image as well.
std::vector<UHPoint> orbit_seeds(UHPoint z0, bool unoriented) {
  std::vector<UHPoint> seeds{z0};
  const bool on_arc = std::abs(std::abs(z0.value()) - 1.0) <= kBoundarySnap;
  if ((on_arc || unoriented) && z0.re() != 0.0) seeds.push_back(z0.mirrored());
  return seeds;
}

FiberResult build_fiber(UHPoint z, bool oriented) {
  const Reduction red = reduce_to_fundamental_domain(z);
  const UHPoint z0 = red.point;
  const Membership member = oriented ? &membership_oriented : &membership_unoriented;

  FiberResult result{z0, classify_torus(z0), {}};
  // Both image regions sit inside -Im/sqrt3 < Re < 1 + Im/sqrt3; one unit of
  // slack on each side.
  const double reach = z0.im() / kSqrt3;
  for (const UHPoint& seed : orbit_seeds(z0, !oriented)) {
    const auto lo = static_cast<long long>(std::floor(-reach - seed.re())) - 1;
    const auto hi = static_cast<long long>(std::ceil(1.0 + reach - seed.re())) + 1;
    for (long long n = lo; n <= hi; ++n) {
      const UHPoint marker = seed.translated(static_cast<double>(n));
      if (!member(marker).inside) continue;
      const bool duplicate = std::any_of(
          result.spines.begin(), result.spines.end(), [&](const SpineClass& s) {
            return std::abs(s.marker.value() - marker.value()) <= kMarkerMergeTolerance;
          });
      if (duplicate) continue;
      const auto triple = fermat_tripod(marker);
      if (!triple) continue;
      const auto edges = edge_lengths_normalized(*triple);
      result.spines.push_back(
          SpineClass{*triple, marker, oriented, edges, edges[0] + edges[1] + edges[2]});
    }
  }
  std::sort(result.spines.begin(), result.spines.end(),
            [](const SpineClass& l, const SpineClass& r) {
              if (l.total_length != r.total_length) return l.total_length < r.total_length;
              return l.triple.sides() < r.triple.sides();
            });
  return result;
}

}  // namespace

FiberResult fiber_oriented(UHPoint z) { return build_fiber(z, true); }

FiberResult fiber_unoriented(UHPoint z) { return build_fiber(z, false); }

std::size_t count_oriented(UHPoint z) { return fiber_oriented(z).count(); }

std::size_t count_unoriented(UHPoint z) { return fiber_unoriented(z).count(); }

double length_L(UHPoint z) {
  const double num = 1.0 + std::norm(z.value()) - z.re() + kSqrt3 * z.im();
  return std::sqrt(num / z.im());
}

bool in_length_domain(UHPoint z) { return membership_oriented(z).boundary != Boundary::Outside; }

double spine_systole(UHPoint z) {
  const UHPoint z0 = reduce_to_fundamental_domain(z).point;
  const double num = 1.0 + std::norm(z0.value()) - std::abs(z0.re()) + kSqrt3 * z0.im();
  return std::sqrt(num / z0.im());
}

std::vector<SpineClass> minimal_spines(UHPoint z, bool oriented) {
  const FiberResult fiber = oriented ? fiber_oriented(z) : fiber_unoriented(z);
  std::vector<SpineClass> out;
  if (fiber.spines.empty()) return out;
  const double shortest = fiber.spines.front().total_length;
  for (const SpineClass& s : fiber.spines) {
    if (s.total_length - shortest <= kLengthTieTolerance) out.push_back(s);
  }
  return out;
}

std::vector<SpectrumEntry> length_spectrum(UHPoint z, bool oriented) {
  const FiberResult fiber = oriented ? fiber_oriented(z) : fiber_unoriented(z);
  std::vector<SpectrumEntry> out;
  out.reserve(fiber.count());
  for (const SpineClass& s : fiber.spines) {
    SpectrumEntry e{s.edge_lengths, s.total_length};
    std::sort(e.lengths.begin(), e.lengths.end(), std::greater<>());
    out.push_back(e);
  }
  return out;
}

}  // namespace spinelab
