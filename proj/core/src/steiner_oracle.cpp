#include "spinelab/steiner_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "spinelab/errors.hpp"
#include "spinelab/parallel.hpp"
#include "spinelab/spines.hpp"

namespace spinelab {

namespace {

// Kuhn's vertex test: the minimum sits on vertex k iff the unit vectors from
// the other two vertices towards it sum to norm <= 1 (angle >= 2pi/3 there).
constexpr double kVertexTestSlack = 1e-12;
constexpr double kGradientTarget = 1e-12;
constexpr double kWeiszfeldDampingRadius = 1e-13;
constexpr double kSymmetryTolerance = 1e-9;
constexpr double kMatchTolerance = 1e-6;

using Vertices = std::array<Complex, 3>;

Complex lattice_vector(UHPoint tau, int m, int n) {
  return static_cast<double>(m) + static_cast<double>(n) * tau.value();
}

// Edge e_i = w + m_i + n_i tau = w - p_i with p_i = -(m_i + n_i tau).
Vertices anchor_points(UHPoint tau, const OffsetTriple& offsets) {
  Vertices p;
  for (int i = 0; i < 3; ++i) p[i] = -lattice_vector(tau, offsets[i].m, offsets[i].n);
  return p;
}

double total_distance(const Vertices& p, Complex w) {
  return std::abs(w - p[0]) + std::abs(w - p[1]) + std::abs(w - p[2]);
}

Complex unit_tangent_sum(const Vertices& p, Complex w) {
  Complex g = 0.0;
  for (const Complex& q : p) g += (w - q) / std::abs(w - q);
  return g;
}

bool minimum_on_vertex(const Vertices& p) {
  for (int k = 0; k < 3; ++k) {
    Complex pull = 0.0;
    for (int i = 0; i < 3; ++i) {
      if (i != k) pull += (p[k] - p[i]) / std::abs(p[k] - p[i]);
    }
    if (std::abs(pull) <= 1.0 + kVertexTestSlack) return true;
  }
  return false;
}

std::optional<Relaxation> try_relax(UHPoint tau, const OffsetTriple& offsets) {
  const Vertices p = anchor_points(tau, offsets);
  if (minimum_on_vertex(p)) return std::nullopt;

  // Weiszfeld: w <- sum(p_i / |w - p_i|) / sum(1 / |w - p_i|).
  Complex w = (p[0] + p[1] + p[2]) / 3.0;
  int iterations = 0;
  for (; iterations < 500; ++iterations) {
    Complex num = 0.0;
    double den = 0.0;
    bool near_vertex = false;
    for (const Complex& q : p) {
      const double d = std::abs(w - q);
      if (d < kWeiszfeldDampingRadius) near_vertex = true;
      const double weight = 1.0 / std::max(d, 1e-300);
      num += weight * q;
      den += weight;
    }
    Complex next = num / den;
    if (near_vertex) next = 0.5 * (w + next);
    const double step = std::abs(next - w);
    w = next;
    if (step < 1e-9) break;
  }

  // Newton polish. f is smooth and strictly convex away from the vertices,
  // with Hessian sum (I - u u^T) / |e|.
  double grad_norm = std::abs(unit_tangent_sum(p, w));
  for (int k = 0; k < 60 && grad_norm > kGradientTarget; ++k, ++iterations) {
    const Complex g = unit_tangent_sum(p, w);
    double hxx = 0.0, hxy = 0.0, hyy = 0.0;
    for (const Complex& q : p) {
      const Complex e = w - q;
      const double len = std::abs(e);
      const Complex u = e / len;
      hxx += (1.0 - u.real() * u.real()) / len;
      hxy += (-u.real() * u.imag()) / len;
      hyy += (1.0 - u.imag() * u.imag()) / len;
    }
    const double det = hxx * hyy - hxy * hxy;
    if (!(det > 0.0)) break;
    Complex delta(-(hyy * g.real() - hxy * g.imag()) / det,
                  -(-hxy * g.real() + hxx * g.imag()) / det);
    const double f0 = total_distance(p, w);
    double t = 1.0;
    Complex trial = w + delta;
    while (t > 1e-6 && total_distance(p, trial) > f0 + 1e-15 * f0) {
      t *= 0.5;
      trial = w + t * delta;
    }
    const double trial_grad = std::abs(unit_tangent_sum(p, trial));
    if (total_distance(p, trial) > f0 + 1e-15 * f0) break;
    w = trial;
    grad_norm = trial_grad;
  }

  for (const Complex& q : p) {
    if (std::abs(w - q) < 1e-12) return std::nullopt;
  }
  return Relaxation{w, total_distance(p, w) / std::sqrt(tau.im()), grad_norm, iterations};
}

using CanonicalKey = OffsetTriple;

CanonicalKey canonical_key(const OffsetTriple& offsets, const std::vector<std::array<int, 4>>& group) {
  CanonicalKey best{};
  bool have = false;
  for (const auto& g : group) {
    OffsetTriple img;
    for (int i = 0; i < 3; ++i) {
      img[i] = {g[0] * offsets[i].m + g[1] * offsets[i].n, g[2] * offsets[i].m + g[3] * offsets[i].n};
    }
    std::sort(img.begin(), img.end());
    const LatticeOffset base = img[0];
    for (auto& o : img) o = {o.m - base.m, o.n - base.n};
    if (!have || img < best) {
      best = img;
      have = true;
    }
  }
  return best;
}

bool is_reduced(UHPoint tau) {
  return std::abs(tau.re()) <= 0.5 + kSymmetryTolerance &&
         std::abs(tau.value()) >= 1.0 - kSymmetryTolerance;
}

OracleClass make_class(UHPoint tau, const OffsetTriple& offsets, const Relaxation& r) {
  const ThetaEmbedding emb{tau, r.w, offsets};
  const auto edges = emb.edge_vectors();
  std::array<double, 3> lengths{};
  const double scale = 1.0 / std::sqrt(tau.im());
  for (int i = 0; i < 3; ++i) lengths[i] = std::abs(edges[i]) * scale;
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return {r.length, offsets, r.w, r.residual, lengths, junction_angles(tau, offsets, r.w)};
}

}  // namespace

std::array<Complex, 3> ThetaEmbedding::edge_vectors() const {
  std::array<Complex, 3> e;
  for (int i = 0; i < 3; ++i) e[i] = w + lattice_vector(tau, offsets[i].m, offsets[i].n);
  return e;
}

double ThetaEmbedding::raw_length() const {
  const auto e = edge_vectors();
  return std::abs(e[0]) + std::abs(e[1]) + std::abs(e[2]);
}

bool is_spine_type(const OffsetTriple& offsets) {
  const long long dm2 = offsets[1].m - offsets[0].m, dn2 = offsets[1].n - offsets[0].n;
  const long long dm3 = offsets[2].m - offsets[0].m, dn3 = offsets[2].n - offsets[0].n;
  const long long det = dm2 * dn3 - dm3 * dn2;
  return det == 1 || det == -1;
}

Relaxation relax(UHPoint tau, const OffsetTriple& offsets) {
  if (!is_spine_type(offsets)) {
    throw DomainError("relax: offset differences are not a lattice basis");
  }
  auto r = try_relax(tau, offsets);
  if (!r) throw DegenerateMinimum("relax: minimum collapses an edge onto a vertex");
  return *r;
}

double stationarity_residual(UHPoint tau, const OffsetTriple& offsets, Complex w) {
  return std::abs(unit_tangent_sum(anchor_points(tau, offsets), w));
}

std::array<double, 3> junction_angles(UHPoint tau, const OffsetTriple& offsets, Complex w) {
  const auto e = ThetaEmbedding{tau, w, offsets}.edge_vectors();
  auto angle = [](Complex u, Complex v) {
    return std::atan2(std::abs(u.real() * v.imag() - u.imag() * v.real()),
                      u.real() * v.real() + u.imag() * v.imag());
  };
  return {angle(e[0], e[1]), angle(e[1], e[2]), angle(e[0], e[2])};
}

int certified_coeff_bound(UHPoint tau, double cap) {
  const double reach = cap * std::sqrt(tau.im());
  const double n_bound = reach / tau.im();
  const double m_bound = reach + n_bound * std::abs(tau.re());
  return static_cast<int>(std::ceil(std::max(n_bound, m_bound)));
}

int default_coeff_bound(UHPoint tau, double cap) {
  return static_cast<int>(std::ceil(2.0 * cap * std::sqrt(tau.im()) / std::min(1.0, tau.im())));
}

std::vector<std::array<int, 4>> lattice_symmetries(UHPoint tau, bool include_reflections) {
  std::vector<std::array<int, 4>> group;
  const Complex t = tau.value();
  auto to_coords = [&](Complex v, int& m, int& n) {
    const double s = v.imag() / t.imag();
    const double r = v.real() - s * t.real();
    m = static_cast<int>(std::lround(r));
    n = static_cast<int>(std::lround(s));
    return std::abs(r - m) <= kSymmetryTolerance && std::abs(s - n) <= kSymmetryTolerance;
  };
  // A linear isometry preserving the lattice sends 1 to a unit lattice vector.
  for (int p = -2; p <= 2; ++p) {
    for (int q = -2; q <= 2; ++q) {
      const Complex v = lattice_vector(tau, p, q);
      if (std::abs(std::abs(v) - 1.0) > kSymmetryTolerance) continue;
      for (int reflect = 0; reflect <= (include_reflections ? 1 : 0); ++reflect) {
        const Complex image = v * (reflect ? std::conj(t) : t);
        int r = 0, s = 0;
        if (!to_coords(image, r, s)) continue;
        group.push_back({p, r, q, s});
      }
    }
  }
  std::sort(group.begin(), group.end());
  return group;
}

OracleReport enumerate_minimal_spines_oracle(UHPoint tau, double length_cap,
                                             std::optional<int> coeff_bound,
                                             const OracleOptions& options) {
  if (!is_reduced(tau)) throw DomainError("oracle: torus parameter must be reduced");
  if (!(length_cap > 0.0)) throw DomainError("oracle: length cap must be positive");
  const int required = certified_coeff_bound(tau, length_cap);
  const int bound = coeff_bound.value_or(std::max(required, default_coeff_bound(tau, length_cap)));
  if (bound < required) {
    std::ostringstream msg;
    msg << "oracle: coeff_bound " << bound << " below certified bound " << required
        << " for cap " << length_cap;
    throw CapTooSmall(msg.str());
  }

  const auto group = lattice_symmetries(tau, options.unoriented);
  const double reach = length_cap * std::sqrt(tau.im());
  const int side = 2 * bound + 1;
  const std::size_t outer = static_cast<std::size_t>(side) * side;

  struct Found {
    CanonicalKey key;
    OracleClass cls;
  };
  std::vector<std::vector<Found>> per_row(outer);

  parallel_for(
      outer,
      [&](std::size_t idx) {
        const int m2 = static_cast<int>(idx / side) - bound;
        const int n2 = static_cast<int>(idx % side) - bound;
        const double l2 = std::abs(lattice_vector(tau, m2, n2));
        if (l2 > reach) return;
        std::vector<CanonicalKey> tried;
        for (int m3 = -bound; m3 <= bound; ++m3) {
          for (int n3 = -bound; n3 <= bound; ++n3) {
            const OffsetTriple offsets{LatticeOffset{0, 0}, LatticeOffset{m2, n2}, LatticeOffset{m3, n3}};
            if (!is_spine_type(offsets)) continue;
            // Each edge pair spans a triangle side, and f(w) >= every side.
            if (std::abs(lattice_vector(tau, m3, n3)) > reach ||
                std::abs(lattice_vector(tau, m3 - m2, n3 - n2)) > reach) {
              continue;
            }
            const CanonicalKey key = canonical_key(offsets, group);
            if (std::find(tried.begin(), tried.end(), key) != tried.end()) continue;
            tried.push_back(key);
            const auto r = try_relax(tau, key);
            if (!r || r->length > length_cap) continue;
            per_row[idx].push_back({key, make_class(tau, key, *r)});
          }
        }
      },
      options.threads);

  std::vector<Found> all;
  for (auto& row : per_row) {
    for (auto& f : row) all.push_back(std::move(f));
  }
  std::sort(all.begin(), all.end(), [](const Found& l, const Found& r) { return l.key < r.key; });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const Found& l, const Found& r) { return l.key == r.key; }),
            all.end());

  OracleReport report{tau, {}, false, 0.0, 0, {}};
  for (auto& f : all) report.classes.push_back(f.cls);
  std::sort(report.classes.begin(), report.classes.end(),
            [](const OracleClass& l, const OracleClass& r) {
              if (l.length != r.length) return l.length < r.length;
              return l.offsets < r.offsets;
            });
  return report;
}

OracleReport compare_with_analytic(UHPoint tau, const OracleOptions& options) {
  const UHPoint z0 = reduce_to_fundamental_domain(tau).point;
  const FiberResult fiber = options.unoriented ? fiber_unoriented(z0) : fiber_oriented(z0);
  double cap = 0.0;
  for (const auto& s : fiber.spines) cap = std::max(cap, s.total_length);
  cap += 1e-3;

  OracleReport report = enumerate_minimal_spines_oracle(z0, cap, std::nullopt, options);
  report.analytic_count = fiber.count();

  std::ostringstream diff;
  diff.precision(15);
  if (report.classes.size() != fiber.count()) {
    diff << "count: oracle " << report.classes.size() << " vs analytic " << fiber.count() << "; ";
  }

  std::vector<bool> used(fiber.count(), false);
  bool all_paired = true;
  double worst = 0.0;
  for (const OracleClass& oc : report.classes) {
    bool paired = false;
    for (std::size_t j = 0; j < fiber.count() && !paired; ++j) {
      if (used[j]) continue;
      const SpineClass& sc = fiber.spines[j];
      auto edges = sc.edge_lengths;
      std::sort(edges.begin(), edges.end(), std::greater<>());
      double err = std::abs(oc.length - sc.total_length);
      for (int k = 0; k < 3; ++k) err = std::max(err, std::abs(oc.edge_lengths[k] - edges[k]));
      if (err <= kMatchTolerance) {
        used[j] = true;
        paired = true;
        worst = std::max(worst, err);
      }
    }
    if (!paired) {
      all_paired = false;
      diff << "unmatched oracle class length " << oc.length << "; ";
    }
  }
  for (std::size_t j = 0; j < fiber.count(); ++j) {
    if (!used[j]) {
      all_paired = false;
      diff << "unmatched analytic class length " << fiber.spines[j].total_length << "; ";
    }
  }

  report.matched = all_paired && report.classes.size() == fiber.count();
  report.max_length_error = worst;
  report.diff = diff.str();
  return report;
}

}  // namespace spinelab
