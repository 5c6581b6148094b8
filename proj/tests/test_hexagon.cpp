#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinelab/errors.hpp"
#include "spinelab/hexagon.hpp"
#include "support/generators.hpp"

using namespace spinelab;

namespace {

constexpr double kPi = std::numbers::pi;
const double kRt3 = std::numbers::sqrt3;

// Independent construction: legs c, a, b at angles 0, 2pi/3, 4pi/3 from a
// junction, then the similarity sending the c-endpoint to 0 and the
// b-endpoint to 1. The a-endpoint lands on the marked torus.
Complex tripod_placement(double a, double b, double c) {
  const Complex pa = std::polar(a, 2 * kPi / 3);
  const Complex pb = std::polar(b, 4 * kPi / 3);
  const Complex pc = std::polar(c, 0.0);
  Complex z = (pa - pc) / (pb - pc);
  if (z.imag() < 0) z = std::conj(z);
  return z;
}

double angle_at(Complex vertex, Complex p, Complex q) {
  return std::abs(std::arg((p - vertex) / (q - vertex)));
}

}  // namespace

TEST(HexTriple, RejectsNonPositive) {
  EXPECT_THROW(HexTriple(0, 1, 1), NonPositiveSide);
  EXPECT_THROW(HexTriple(1, -1, 1), NonPositiveSide);
  EXPECT_THROW(HexTriple(1, 1, INFINITY), NonPositiveSide);
  EXPECT_NO_THROW(HexTriple(1, 2, 3));
}

TEST(HexTriple, CanonicalForms) {
  const HexTriple u = HexTriple(1, 3, 2).canonical_unoriented();
  EXPECT_DOUBLE_EQ(u.a(), 0.5);
  EXPECT_DOUBLE_EQ(u.b(), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(u.c(), 1.0 / 6.0);
  const HexTriple o = HexTriple(1, 3, 2).canonical_oriented();
  EXPECT_DOUBLE_EQ(o.a(), 0.5);
  EXPECT_DOUBLE_EQ(o.b(), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(o.c(), 1.0 / 6.0);
  const HexTriple o2 = HexTriple(1, 2, 3).canonical_oriented();
  EXPECT_DOUBLE_EQ(o2.a(), 0.5);
  EXPECT_DOUBLE_EQ(o2.b(), 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(o2.c(), 1.0 / 3.0);
  // Rotations and scalings agree.
  EXPECT_EQ(HexTriple(2, 6, 4).canonical_oriented(), HexTriple(4, 2, 6).canonical_oriented());
}

TEST(TildeP, FrozenValues) {
  const UHPoint hex = tilde_p(HexTriple(1, 1, 1));
  EXPECT_NEAR(hex.re(), 0.5, 1e-15);
  EXPECT_NEAR(hex.im(), kRt3 / 2, 1e-15);
  const UHPoint z = tilde_p(HexTriple(0.5, 0.25, 0.25));
  EXPECT_NEAR(z.re(), 0.5, 1e-15);
  EXPECT_NEAR(z.im(), 1.4433756729740645, 1e-14);
}

TEST(TildeP, MatchesTripodPlacement) {
  proptest::Gen gen(21);
  for (int i = 0; i < 2000; ++i) {
    const auto [a, b, c] = gen.positive_triple();
    const Complex want = tripod_placement(a, b, c);
    const UHPoint got = tilde_p(HexTriple(a, b, c));
    ASSERT_LE(std::abs(got.value() - want), 1e-10 * std::max(1.0, std::abs(want)))
        << a << " " << b << " " << c;
  }
}

TEST(TildeP, SwapIsMirror) {
  proptest::Gen gen(22);
  for (int i = 0; i < 1000; ++i) {
    const auto [a, b, c] = gen.positive_triple();
    const Complex z = tilde_p(HexTriple(a, b, c)).value();
    const Complex w = tilde_p(HexTriple(a, c, b)).value();
    ASSERT_LE(std::abs(w - (1.0 - std::conj(z))), 1e-12 * std::max(1.0, std::abs(z)));
  }
}

TEST(Fermat, DegenerateTriangles) {
  // Angle at 0 of 150 degrees.
  EXPECT_FALSE(fermat_point(UHPoint(std::polar(1.0, 5 * kPi / 6))).has_value());
  // Angle at z of 2pi/3 exactly: z on the arc seen from 0 and 1 at 120 degrees.
  EXPECT_FALSE(fermat_point(UHPoint(0.5, 0.5 / kRt3)).has_value());
  EXPECT_TRUE(fermat_point(UHPoint(0.5, 0.5 / kRt3 + 1e-3)).has_value());
}

TEST(Fermat, PropertyRoundTripCarnotAngles) {
  proptest::Gen gen(23);
  for (int i = 0; i < 10000; ++i) {
    const auto [a, b, c] = gen.positive_triple();
    const HexTriple t(a, b, c);
    const UHPoint z = tilde_p(t);

    // Carnot: the unit-area modulus depends only on the triple.
    const double s = a + b + c;
    ASSERT_NEAR(z.im(), (kRt3 / 2) * (a * b + b * c + c * a) / (b * b + c * c + b * c),
                1e-12 * std::max(1.0, z.im()));

    const auto back = fermat_tripod(z);
    ASSERT_TRUE(back.has_value());
    ASSERT_NEAR(back->a(), a / s, 1e-10);
    ASSERT_NEAR(back->b(), b / s, 1e-10);
    ASSERT_NEAR(back->c(), c / s, 1e-10);

    const Complex f = *fermat_point(z);
    const Complex v[3] = {0.0, 1.0, z.value()};
    for (int k = 0; k < 3; ++k) {
      ASSERT_NEAR(angle_at(f, v[k], v[(k + 1) % 3]), 2 * kPi / 3, 1e-10);
    }
  }
}

TEST(Fermat, CarnotLegLengths) {
  // The law of cosines with 2pi/3 at the junction gives each side of the
  // triangle from two legs: |1|^2 = b^2 + c^2 + bc after unit scaling.
  proptest::Gen gen(24);
  for (int i = 0; i < 10000; ++i) {
    const auto [a, b, c] = gen.positive_triple();
    const Complex z = tilde_p(HexTriple(a, b, c)).value();
    const double k2 = b * b + c * c + b * c;
    ASSERT_NEAR(std::norm(z), (a * a + c * c + a * c) / k2, 1e-12 * std::max(1.0, std::norm(z)));
    ASSERT_NEAR(std::norm(z - 1.0), (a * a + b * b + a * b) / k2,
                1e-12 * std::max(1.0, std::norm(z - 1.0)));
  }
}

TEST(Membership, Oriented) {
  EXPECT_EQ(membership_oriented(UHPoint(0, 2)).boundary, Boundary::Interior);
  EXPECT_TRUE(membership_oriented(UHPoint(0, 2)).inside);
  // b = c hexagons sit on Re = 1/2 inside the oriented region.
  EXPECT_EQ(membership_oriented(UHPoint(0.5, 2)).boundary, Boundary::LineBC);
  EXPECT_TRUE(membership_oriented(UHPoint(0.5, 2)).inside);
  EXPECT_EQ(membership_oriented(UHPoint(0, 1)).boundary, Boundary::ArcAB);
  EXPECT_TRUE(membership_oriented(UHPoint(0, 1)).inside);
  const RegionMembership ray = membership_oriented(UHPoint(std::polar(1.0, 2 * kPi / 3)));
  EXPECT_FALSE(ray.inside);
  EXPECT_EQ(ray.boundary, Boundary::ExcludedRay);
  EXPECT_EQ(membership_oriented(UHPoint(0.5, kRt3 / 2)).boundary, Boundary::Corner);
  EXPECT_EQ(membership_oriented(UHPoint(std::polar(1.0, 1.3))).boundary, Boundary::ArcAB);
  EXPECT_TRUE(membership_oriented(UHPoint(std::polar(1.0, 1.3))).inside);
  const RegionMembership mirror = membership_oriented(UHPoint(1.0 - std::conj(std::polar(1.0, 1.3))));
  EXPECT_FALSE(mirror.inside);
  EXPECT_EQ(mirror.boundary, Boundary::ArcAB);
  EXPECT_EQ(membership_oriented(UHPoint(0.0, 0.5)).boundary, Boundary::Outside);
  EXPECT_FALSE(membership_oriented(UHPoint(-0.2, 0.5)).inside);
}

TEST(Membership, Unoriented) {
  EXPECT_TRUE(membership_unoriented(UHPoint(0.3, 2)).inside);
  EXPECT_TRUE(membership_unoriented(UHPoint(-1, 2)).inside);
  EXPECT_EQ(membership_unoriented(UHPoint(1, 2)).boundary, Boundary::Outside);
  EXPECT_FALSE(membership_unoriented(UHPoint(0.7, 2)).inside);
  EXPECT_EQ(membership_unoriented(UHPoint(0.5, 2)).boundary, Boundary::LineBC);
  EXPECT_EQ(membership_unoriented(UHPoint(std::polar(1.0, 1.3))).boundary, Boundary::ArcAB);
  EXPECT_EQ(membership_unoriented(UHPoint(0.5, kRt3 / 2)).boundary, Boundary::Corner);
  EXPECT_FALSE(membership_unoriented(UHPoint(0.0, 0.9)).inside);
}

TEST(Membership, PropertyInsideIffSortedTripod) {
  // A point of the oriented region is exactly a tilde_p image of a triple
  // with the first side largest.
  proptest::Gen gen(25);
  for (int i = 0; i < 5000; ++i) {
    const UHPoint z(gen.uniform(-1.0, 2.0), gen.uniform(0.05, 4.0));
    const auto t = fermat_tripod(z);
    const RegionMembership m = membership_oriented(z);
    if (!t) {
      ASSERT_FALSE(m.inside);
      continue;
    }
    const double eps = 1e-9;
    const bool a_max = t->a() >= t->b() - eps && t->a() >= t->c() - eps;
    const bool clear = t->a() > t->b() + eps && t->a() > t->c() + eps;
    if (clear) ASSERT_TRUE(m.inside) << z.re() << " " << z.im();
    if (!a_max) ASSERT_FALSE(m.inside) << z.re() << " " << z.im();
  }
}

TEST(Membership, PropertyBoundaryCoherence) {
  // Points pushed onto a boundary curve report that curve.
  proptest::Gen gen(26);
  for (int i = 0; i < 1000; ++i) {
    const double theta = gen.uniform(kPi / 3 + 1e-3, kPi / 2 - 1e-3);
    EXPECT_EQ(membership_oriented(UHPoint(std::polar(1.0, theta))).boundary, Boundary::ArcAB);
    const double y = gen.uniform(0.9, 5.0);
    EXPECT_EQ(membership_oriented(UHPoint(0.5, y)).boundary, Boundary::LineBC);
    EXPECT_TRUE(membership_oriented(UHPoint(0.5, y)).inside);
    EXPECT_EQ(membership_unoriented(UHPoint(0.5, y)).boundary, Boundary::LineBC);
  }
}

TEST(EdgeLengths, HexagonalTorus) {
  const auto e = edge_lengths_normalized(HexTriple(1, 1, 1));
  for (double x : e) EXPECT_NEAR(x, 0.6204032394013996, 1e-14);
  EXPECT_NEAR(e[0] + e[1] + e[2], 1.8612097182041991, 1e-14);
}

TEST(DiscModel, Values) {
  const Complex d = disc_model_transform(UHPoint(0, 1));
  EXPECT_NEAR(d.real(), -0.23205080756887728, 1e-15);
  EXPECT_NEAR(d.imag(), 0.13397459621556138, 1e-15);
  EXPECT_NEAR(std::abs(d), 0.2679491924311227, 1e-15);
  EXPECT_NEAR(std::abs(disc_model_transform(UHPoint(0.5, kRt3 / 2))), 0.0, 1e-15);
  proptest::Gen gen(27);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(std::abs(disc_model_transform(gen.half_plane())), 1.0);
}
