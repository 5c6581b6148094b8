#pragma once

// Brute-force cross-check of the analytic spine fibers. A theta-graph on the
// torus C / (Z + tau Z) has junctions u and v = u + w joined by three straight
// edges e_i = w + m_i + n_i tau. Its length f(w) = sum |e_i| is a sum of
// Euclidean norms, hence convex, so each combinatorial type has one relaxed
// minimum. Nothing here calls into hexagon or spines except
// compare_with_analytic.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spinelab/halfplane.hpp"

namespace spinelab {

struct LatticeOffset {
  int m = 0;
  int n = 0;

  friend auto operator<=>(const LatticeOffset&, const LatticeOffset&) = default;
};

using OffsetTriple = std::array<LatticeOffset, 3>;

struct ThetaEmbedding {
  UHPoint tau;
  Complex w;
  OffsetTriple offsets;

  [[nodiscard]] std::array<Complex, 3> edge_vectors() const;
  /// Sum of edge lengths on the torus as given (not area-normalized).
  [[nodiscard]] double raw_length() const;
};

/// The complement is a disc iff the two offset differences form a lattice basis.
bool is_spine_type(const OffsetTriple& offsets);

struct Relaxation {
  Complex w;
  double length;    // f(w*) / sqrt(Im tau)
  double residual;  // |sum of unit tangents| at w*
  int iterations;
};

/// Minimizes f over w. Throws DomainError unless is_spine_type, and
/// DegenerateMinimum when the minimum sits on a lattice vertex.
Relaxation relax(UHPoint tau, const OffsetTriple& offsets);

/// Norm of the sum of unit edge tangents at one junction.
double stationarity_residual(UHPoint tau, const OffsetTriple& offsets, Complex w);

/// Pairwise angles between the three edge vectors, in radians.
std::array<double, 3> junction_angles(UHPoint tau, const OffsetTriple& offsets, Complex w);

struct OracleClass {
  double length;
  OffsetTriple offsets;  // canonical representative
  Complex w;
  double residual;
  std::array<double, 3> edge_lengths;  // normalized, decreasing
  std::array<double, 3> angles;
};

struct OracleReport {
  UHPoint torus;
  std::vector<OracleClass> classes;  // by length
  bool matched = false;
  double max_length_error = 0.0;
  std::size_t analytic_count = 0;
  std::string diff;
};

struct OracleOptions {
  /// Identify spines under orientation-reversing isometries as well.
  bool unoriented = false;
  /// Worker threads; 0 defers to SPINELAB_THREADS / hardware concurrency.
  unsigned threads = 0;
};

/// Smallest coefficient bound that provably covers every spine of normalized
/// length <= cap on a reduced torus.
int certified_coeff_bound(UHPoint tau, double cap);
/// ceil(2 cap sqrt(Im tau) / min(1, Im tau)); always >= the certified bound.
int default_coeff_bound(UHPoint tau, double cap);

/// Orientation-preserving (and optionally reversing) linear isometries of
/// the lattice, as integer matrices acting on lattice coordinates (m, n).
std::vector<std::array<int, 4>> lattice_symmetries(UHPoint tau, bool include_reflections);

/// Enumerates every spine-type theta-graph with coefficients in
/// [-coeff_bound, coeff_bound], relaxes it, and keeps distinct classes of
/// normalized length <= cap. tau must be reduced. Throws CapTooSmall when
/// coeff_bound is below certified_coeff_bound.
OracleReport enumerate_minimal_spines_oracle(UHPoint tau, double length_cap,
                                             std::optional<int> coeff_bound = std::nullopt,
                                             const OracleOptions& options = {});

/// Runs the oracle against the analytic fiber of tau (reduced internally)
/// and fills matched / max_length_error / diff.
OracleReport compare_with_analytic(UHPoint tau, const OracleOptions& options = {});

}  // namespace spinelab
