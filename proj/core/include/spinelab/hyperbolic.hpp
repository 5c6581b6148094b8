#pragma once

#include <vector>

namespace spinelab {

/// Point of the hyperboloid -x0^2 + x1^2 + x2^2 = -1, x0 > 0.
class HPoint {
 public:
  /// Throws DomainError when off the upper sheet by more than 1e-12.
  HPoint(double x0, double x1, double x2);

  /// Point at distance r from (1,0,0) in direction theta.
  static HPoint polar(double r, double theta);

  [[nodiscard]] double x0() const noexcept { return x_[0]; }
  [[nodiscard]] double x1() const noexcept { return x_[1]; }
  [[nodiscard]] double x2() const noexcept { return x_[2]; }

 private:
  double x_[3];
};

/// -x0 y0 + x1 y1 + x2 y2
double lorentz_dot(const HPoint& p, const HPoint& q) noexcept;

double dist(const HPoint& p, const HPoint& q) noexcept;

/// (lambda x1 + (1-lambda) x2) / ||lambda x1 + (1-lambda) x2||. Lies on the
/// segment [x2, x1]; at lambda = 1/2 it is the midpoint, but in general it
/// is not at arclength fraction lambda.
HPoint convex_combination(double lambda, const HPoint& x1, const HPoint& x2);

/// The point of [x2, x1] at distance lambda d(x1, x2) from x2.
HPoint geodesic_point(double lambda, const HPoint& x1, const HPoint& x2);

/// lambda d(x1,y1) + (1-lambda) d(x2,y2) - d(x_lambda, y_lambda) with x_lambda,
/// y_lambda the constant-speed geodesic points. Nonnegative; zero when all
/// four points lie on one line (and the pairs do not cross).
double convexity_gap(const HPoint& x1, const HPoint& x2, const HPoint& y1, const HPoint& y2,
                     double lambda);

struct PolygonConstruction {
  std::vector<HPoint> vertices;
  double closure_error;      // distance from the last step back to the start
  double heading_error;      // mismatch of the final tangent direction
  double max_angle_error;    // measured interior angles vs requested
  double max_side_error;
  double measured_inradius;  // center to edge midpoints
  double measured_circumradius;
};

struct RegularPolygonData {
  int n;
  double interior_angle;
  double side;
  double inradius;
  double circumradius;
  double area;
  PolygonConstruction construction;  // the check regular_polygon ran

  [[nodiscard]] double perimeter() const noexcept { return n * side; }
};

/// Regular hyperbolic n-gon with the given interior angle, from the right
/// triangle (center, edge midpoint, vertex). The result is checked against
/// an explicit construction; see construct_polygon.
RegularPolygonData regular_polygon(int n, double interior_angle);

/// Walks n sides of the given length, turning by pi - angle at each vertex,
/// then measures what came out.
PolygonConstruction construct_polygon(int n, long double side, long double interior_angle);

/// Minimum spine length over genus-g hyperbolic surfaces: half the perimeter
/// of the regular (12g-6)-gon with angles 2pi/3. Throws InvalidGenus for g < 2.
double extremal_spine_systole(int genus);

}  // namespace spinelab
