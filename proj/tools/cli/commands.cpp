#include "commands.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "input.hpp"
#include "spinelab/hexagon.hpp"
#include "spinelab/hyperbolic.hpp"
#include "spinelab/spines.hpp"
#include "spinelab/steiner_oracle.hpp"

namespace spinelab::cli {

namespace {

double num(double x) { return round_significant(x); }

Json triple_json(const std::array<double, 3>& v) { return Json::array({num(v[0]), num(v[1]), num(v[2])}); }

Json complex_json(Complex z) {
  Json j;
  j["re"] = num(z.real());
  j["im"] = num(z.imag());
  return j;
}

}  // namespace

Json point_json(UHPoint z) { return complex_json(z.value()); }

Json cmd_reduce(UHPoint z) {
  const Reduction red = reduce_to_fundamental_domain(z);
  const UnimodularMatrix& m = red.matrix;
  Json j;
  j["input"] = point_json(z);
  j["reduced"] = point_json(red.point);
  j["matrix"] = Json::array({Json::array({m.a(), m.b()}), Json::array({m.c(), m.d()})});
  j["kind"] = std::string(to_string(classify_torus(red.point)));
  return j;
}

Json cmd_classify(UHPoint z) {
  Json j;
  j["input"] = point_json(z);
  j["reduced"] = point_json(reduce_to_fundamental_domain(z).point);
  j["kind"] = std::string(to_string(classify_torus(z)));
  return j;
}

Json cmd_spines(UHPoint z, bool oriented) {
  const FiberResult fiber = oriented ? fiber_oriented(z) : fiber_unoriented(z);
  Json j;
  j["torus"] = point_json(fiber.torus);
  j["kind"] = std::string(to_string(fiber.kind));
  j["oriented"] = oriented;
  j["count"] = fiber.count();
  Json list = Json::array();
  for (std::size_t i = 0; i < fiber.count(); ++i) {
    const SpineClass& s = fiber.spines[i];
    Json e;
    e["index"] = i;
    e["triple"] = triple_json(s.triple.sides());
    e["marker"] = point_json(s.marker);
    e["edge_lengths"] = triple_json(s.edge_lengths);
    e["total"] = num(s.total_length);
    list.push_back(std::move(e));
  }
  j["spines"] = std::move(list);
  return j;
}

std::string cmd_spines_csv(UHPoint z, bool oriented) {
  const FiberResult fiber = oriented ? fiber_oriented(z) : fiber_unoriented(z);
  std::ostringstream out;
  out << "index,a,b,c,marker_re,marker_im,l1,l2,l3,total\n";
  for (std::size_t i = 0; i < fiber.count(); ++i) {
    const SpineClass& s = fiber.spines[i];
    out << i << ',' << format_number(s.triple.a()) << ',' << format_number(s.triple.b()) << ','
        << format_number(s.triple.c()) << ',' << format_number(s.marker.re()) << ','
        << format_number(s.marker.im()) << ',' << format_number(s.edge_lengths[0]) << ','
        << format_number(s.edge_lengths[1]) << ',' << format_number(s.edge_lengths[2]) << ','
        << format_number(s.total_length) << '\n';
  }
  return out.str();
}

Json cmd_count(UHPoint z, bool oriented) {
  Json j;
  j["torus"] = point_json(reduce_to_fundamental_domain(z).point);
  j["oriented"] = oriented;
  j["count"] = oriented ? count_oriented(z) : count_unoriented(z);
  return j;
}

Json cmd_systole(UHPoint z) {
  Json j;
  j["torus"] = point_json(reduce_to_fundamental_domain(z).point);
  j["systole"] = num(spine_systole(z));
  return j;
}

Json cmd_spectrum(UHPoint z, bool oriented) {
  Json j;
  j["torus"] = point_json(reduce_to_fundamental_domain(z).point);
  j["oriented"] = oriented;
  Json list = Json::array();
  for (const SpectrumEntry& e : length_spectrum(z, oriented)) {
    Json item;
    item["lengths"] = triple_json(e.lengths);
    item["total"] = num(e.total);
    list.push_back(std::move(item));
  }
  j["spectrum"] = std::move(list);
  return j;
}

Json cmd_disc_model(UHPoint z) {
  const Complex w = disc_model_transform(z);
  Json j;
  j["input"] = point_json(z);
  j["disc"] = complex_json(w);
  j["modulus"] = num(std::abs(w));
  return j;
}

Json cmd_extremal(int genus) {
  const double spine = extremal_spine_systole(genus);
  const RegularPolygonData poly = regular_polygon(12 * genus - 6, 2.0 * std::numbers::pi / 3.0);
  Json j;
  j["genus"] = genus;
  j["side"] = num(poly.side);
  j["inradius"] = num(poly.inradius);
  j["perimeter"] = num(poly.perimeter());
  j["spine_length"] = num(spine);
  j["area"] = num(poly.area);
  j["polygon_sides"] = poly.n;
  j["interior_angle"] = num(poly.interior_angle);
  j["circumradius"] = num(poly.circumradius);
  return j;
}

std::vector<UHPoint> random_reduced_tori(std::size_t count, std::uint64_t seed, double im_max) {
  std::mt19937_64 rng(seed);
  // 53 random bits -> [0, 1); std::uniform_real_distribution is not
  // reproducible across standard libraries.
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<UHPoint> out;
  const double im_min = std::numbers::sqrt3 / 2.0;
  while (out.size() < count) {
    const double re = unit() - 0.5;
    const double im = im_min + unit() * (im_max - im_min);
    if (re * re + im * im < 1.0) continue;
    out.emplace_back(re, im);
  }
  return out;
}

OracleRun cmd_oracle_verify(const std::vector<UHPoint>& tori, bool unoriented) {
  OracleOptions options;
  options.unoriented = unoriented;
  Json results = Json::array();
  bool all = true;
  for (const UHPoint& tau : tori) {
    const OracleReport rep = compare_with_analytic(tau, options);
    Json r;
    r["torus"] = point_json(rep.torus);
    r["oriented"] = !unoriented;
    r["analytic_count"] = rep.analytic_count;
    r["oracle_count"] = rep.classes.size();
    r["matched"] = rep.matched;
    r["max_length_error"] = num(rep.max_length_error);
    Json classes = Json::array();
    for (const OracleClass& c : rep.classes) {
      Json cj;
      cj["length"] = num(c.length);
      Json offs = Json::array();
      for (const LatticeOffset& o : c.offsets) offs.push_back(Json::array({o.m, o.n}));
      cj["offsets"] = std::move(offs);
      cj["w"] = complex_json(c.w);
      cj["edge_lengths"] = triple_json(c.edge_lengths);
      cj["residual"] = num(c.residual);
      classes.push_back(std::move(cj));
    }
    r["classes"] = std::move(classes);
    if (!rep.diff.empty()) r["diff"] = rep.diff;
    all = all && rep.matched;
    results.push_back(std::move(r));
  }
  Json j;
  j["matched"] = all;
  j["tori"] = tori.size();
  j["results"] = std::move(results);
  return {std::move(j), all};
}

}  // namespace spinelab::cli
