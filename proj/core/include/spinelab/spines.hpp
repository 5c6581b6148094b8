#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "spinelab/halfplane.hpp"
#include "spinelab/hexagon.hpp"

namespace spinelab {

/// Absolute tolerance on normalized lengths when selecting the shortest spines.
inline constexpr double kLengthTieTolerance = 1e-9;

/// One minimal spine on a torus. The marker is the point of the tilde_p chart
/// carrying the spine; it is deliberately not reduced.
struct SpineClass {
  HexTriple triple;
  UHPoint marker;
  bool oriented;
  std::array<double, 3> edge_lengths;
  double total_length;
};

struct FiberResult {
  UHPoint torus;  // reduced
  TorusKind kind;
  std::vector<SpineClass> spines;  // by total length, then triple

  [[nodiscard]] std::size_t count() const noexcept { return spines.size(); }
};

/// All minimal spines up to orientation-preserving isometry.
FiberResult fiber_oriented(UHPoint z);
/// All minimal spines up to isometry.
FiberResult fiber_unoriented(UHPoint z);

std::size_t count_oriented(UHPoint z);
std::size_t count_unoriented(UHPoint z);

/// Normalized total length of the spine marked by z. Meaningful on the
/// closure of the oriented image region; see in_length_domain.
double length_L(UHPoint z);
bool in_length_domain(UHPoint z);

/// Length of the shortest spines on the torus z.
double spine_systole(UHPoint z);

std::vector<SpineClass> minimal_spines(UHPoint z, bool oriented);

struct SpectrumEntry {
  std::array<double, 3> lengths;  // decreasing
  double total;
};

std::vector<SpectrumEntry> length_spectrum(UHPoint z, bool oriented);

}  // namespace spinelab
