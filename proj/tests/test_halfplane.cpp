#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "spinelab/errors.hpp"
#include "spinelab/halfplane.hpp"
#include "support/generators.hpp"

using namespace spinelab;

namespace {

const Complex kHex = std::polar(1.0, std::numbers::pi / 3.0);

void ExpectNear(UHPoint got, Complex want, double tol = 1e-12) {
  EXPECT_NEAR(got.re(), want.real(), tol);
  EXPECT_NEAR(got.im(), want.imag(), tol);
}

}  // namespace

TEST(UHPoint, RejectsNonPositiveImaginaryPart) {
  EXPECT_THROW(UHPoint(0.0, 0.0), DomainError);
  EXPECT_THROW(UHPoint(1.0, -2.0), DomainError);
  EXPECT_THROW(UHPoint(NAN, 1.0), DomainError);
  EXPECT_NO_THROW(UHPoint(0.0, 1e-300));
}

TEST(UnimodularMatrix, RejectsWrongDeterminant) {
  EXPECT_THROW(UnimodularMatrix(1, 1, 1, 1), DomainError);
  EXPECT_THROW(UnimodularMatrix(-1, 0, 0, 1), DomainError);
  const auto m = UnimodularMatrix(2, 1, 1, 1) * UnimodularMatrix::inversion();
  EXPECT_EQ(m.determinant(), 1);
}

TEST(Moebius, Examples) {
  ExpectNear(moebius_apply(UnimodularMatrix::identity(), UHPoint(0.3, 2.0)), {0.3, 2.0});
  ExpectNear(moebius_apply(UnimodularMatrix(1, -3, 0, 1), UHPoint(3.5, 2.0)), {0.5, 2.0});
  ExpectNear(moebius_apply(UnimodularMatrix::inversion(), UHPoint(0.0, 0.5)), {0.0, 2.0});
}

TEST(Reduce, Examples) {
  const Reduction a = reduce_to_fundamental_domain(UHPoint(3.5, 2.0));
  ExpectNear(a.point, {0.5, 2.0});
  EXPECT_EQ(a.matrix, UnimodularMatrix(1, -3, 0, 1));

  const Reduction b = reduce_to_fundamental_domain(UHPoint(0.0, 1.0));
  ExpectNear(b.point, {0.0, 1.0});
  EXPECT_EQ(b.matrix, UnimodularMatrix::identity());

  // -1/(i/2) = 2i by hand.
  const Reduction c = reduce_to_fundamental_domain(UHPoint(0.0, 0.5));
  ExpectNear(c.point, {0.0, 2.0});
  EXPECT_EQ(c.matrix, UnimodularMatrix::inversion());
}

TEST(Reduce, BoundaryTieBreaks) {
  // Left vertical side moves to the right one.
  ExpectNear(reduce_to_fundamental_domain(UHPoint(-0.5, 3.0)).point, {0.5, 3.0});
  // Left half of the unit arc moves to the right half.
  const Complex left = std::polar(1.0, 0.6 * std::numbers::pi);
  ExpectNear(reduce_to_fundamental_domain(UHPoint(left)).point, -std::conj(left));
  // Left corner becomes the hexagonal point.
  ExpectNear(reduce_to_fundamental_domain(UHPoint(-0.5, std::numbers::sqrt3 / 2)).point, kHex);
}

TEST(Reduce, PropertyDomainDeterminantAndImage) {
  proptest::Gen gen(11);
  for (int i = 0; i < 10000; ++i) {
    const UHPoint z = gen.half_plane();
    const Reduction r = reduce_to_fundamental_domain(z);
    ASSERT_EQ(r.matrix.determinant(), 1);
    ASSERT_GE(std::norm(r.point.value()), 1.0 - 1e-12);
    ASSERT_LE(r.point.re(), 0.5);
    ASSERT_GT(r.point.re(), -0.5);
    const UHPoint image = moebius_apply(r.matrix, z);
    ASSERT_LE(std::abs(image.value() - r.point.value()), 1e-12 * std::abs(r.point.value()))
        << "z = " << z.re() << " + " << z.im() << "i";
  }
}

TEST(Reduce, PropertyIdempotentExactly) {
  proptest::Gen gen(12);
  for (int i = 0; i < 10000; ++i) {
    const UHPoint z0 = reduce_to_fundamental_domain(gen.half_plane()).point;
    const Reduction again = reduce_to_fundamental_domain(z0);
    ASSERT_EQ(again.point, z0);
  }
  // Boundary representatives are fixed too.
  for (const Complex z : {Complex(0.5, 2.0), Complex(0.5, std::numbers::sqrt3 / 2), Complex(0.0, 1.0),
                          std::polar(1.0, 1.3)}) {
    ASSERT_EQ(reduce_to_fundamental_domain(UHPoint(z)).point, UHPoint(z));
  }
}

TEST(Reduce, PropertyModularInvariance) {
  proptest::Gen gen(13);
  for (int i = 0; i < 3000; ++i) {
    const UHPoint z = gen.reduced(4.0, 1e-6);
    const UHPoint moved = moebius_apply(gen.modular(), z);
    const UHPoint back = reduce_to_fundamental_domain(moved).point;
    ASSERT_LE(std::abs(back.value() - z.value()), 1e-9);
  }
}

TEST(SameTorus, Oriented) {
  EXPECT_TRUE(same_oriented_torus(UHPoint(0, 1), UHPoint(1, 1)));
  EXPECT_TRUE(same_oriented_torus(UHPoint(0, 2), UHPoint(0, 0.5)));
  EXPECT_FALSE(same_oriented_torus(UHPoint(0, 2), UHPoint(0, 3)));
  // Mirror images are different oriented tori off the symmetric loci.
  EXPECT_FALSE(same_oriented_torus(UHPoint(0.25, 2), UHPoint(-0.25, 2)));
}

TEST(SameTorus, Unoriented) {
  EXPECT_TRUE(same_unoriented_torus(UHPoint(0.25, 2), UHPoint(-0.25, 2)));
  EXPECT_TRUE(same_unoriented_torus(UHPoint(0.25, 2), UHPoint(0.25, 2)));
  EXPECT_FALSE(same_unoriented_torus(UHPoint(0.25, 2), UHPoint(0.3, 2)));
}

TEST(Classify, SpecialTori) {
  EXPECT_EQ(classify_torus(UHPoint(0, 1)), TorusKind::Square);
  EXPECT_EQ(classify_torus(UHPoint(kHex)), TorusKind::Hexagonal);
  EXPECT_EQ(classify_torus(UHPoint(0, 2)), TorusKind::Rectangular);
  EXPECT_EQ(classify_torus(UHPoint(std::polar(1.0, 1.3))), TorusKind::FatRhombic);
  EXPECT_EQ(classify_torus(UHPoint(3.5, 2)), TorusKind::ThinRhombic);
  EXPECT_EQ(classify_torus(UHPoint(0.3, 1.5)), TorusKind::Generic);
  // Equivalent inputs classify the same way.
  EXPECT_EQ(classify_torus(UHPoint(1, 1)), TorusKind::Square);
  EXPECT_EQ(classify_torus(UHPoint(kHex - 1.0)), TorusKind::Hexagonal);
  EXPECT_EQ(classify_torus(UHPoint(7, 0.5)), TorusKind::Rectangular);
  EXPECT_EQ(to_string(TorusKind::FatRhombic), "fat-rhombic");
}
