#include <cmath>
#include <numbers>

#include "abplab/geometry.hpp"
#include "doctest.h"

using namespace abplab;

namespace {

double ngon_area(int n, double r) { return 0.5 * n * r * r * std::sin(2.0 * std::numbers::pi / n); }
double ngon_perimeter(int n, double r) { return 2.0 * n * r * std::sin(std::numbers::pi / n); }

}  // namespace

TEST_CASE("polygon measures against closed forms") {
  const Polygon sq = rectangle(1.0, 1.0);
  CHECK(area(sq) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(perimeter(sq) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(diameter(sq) == doctest::Approx(std::sqrt(2.0)));
  for (int n : {3, 7, 64, 512}) {
    const Polygon p = regular_ngon(n, 1.5);
    CHECK(area(p) == doctest::Approx(ngon_area(n, 1.5)).epsilon(1e-13));
    CHECK(perimeter(p) == doctest::Approx(ngon_perimeter(n, 1.5)).epsilon(1e-13));
  }
  const Polygon l({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  CHECK(area(l) == doctest::Approx(3.0));
  CHECK(perimeter(l) == doctest::Approx(8.0));
  CHECK(min_interior_angle(l) == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("invalid polygons are rejected") {
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}}), GeometryError);
  CHECK_THROWS_AS(Polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), GeometryError);  // clockwise
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), GeometryError);  // bow tie
}

TEST_CASE("containment and distance") {
  const Polygon sq = rectangle(2.0, 2.0, {-1.0, -1.0});
  CHECK(contains(sq, {0.0, 0.0}));
  CHECK(contains(sq, {1.0, 0.3}));
  CHECK_FALSE(contains_strictly(sq, {1.0, 0.3}, 1e-9));
  CHECK_FALSE(contains(sq, {1.2, 0.0}));
  CHECK(distance_to_boundary(sq, {0.25, 0.5}) == doctest::Approx(0.5));
}

TEST_CASE("convex hull drops interior and collinear points") {
  const Polygon h = convex_hull({{0, 0}, {1, 0}, {0.5, 0}, {1, 1}, {0, 1}, {0.4, 0.6}});
  CHECK(h.size() == 4);
  CHECK(area(h) == doctest::Approx(1.0));
}

TEST_CASE("cone membership and clipping") {
  const ConvexCone q = ConvexCone::quadrant();
  CHECK(q.contains({1.0, 1.0}));
  CHECK_FALSE(q.contains({-0.1, 1.0}));
  CHECK(q.contains_closed({0.0, 1.0}));
  CHECK(q.segment_on_boundary({0.0, 0.5}, {0.0, 2.0}));
  CHECK_FALSE(q.segment_on_boundary({0.1, 0.5}, {0.0, 2.0}));
  CHECK(q.distance_to_boundary({0.3, 2.0}) == doctest::Approx(0.3));

  const Polygon clipped = clip_to_cone(regular_ngon(256, 1.0), q);
  const double quarter = 0.25 * ngon_area(256, 1.0);
  CHECK(area(clipped) == doctest::Approx(quarter).epsilon(1e-12));
  CHECK_THROWS_AS(clip_to_cone(translated(rectangle(1, 1), {-3, -3}), q), GeometryError);

  const Polygon shifted = shift_into_cone(rectangle(1, 1), q, 0.01);
  for (Vec2 v : shifted.vertices()) CHECK(q.contains(v));
}

TEST_CASE("ball constants") {
  const double pi = std::numbers::pi;
  CHECK(ball_constants(2).volume == doctest::Approx(pi));
  CHECK(ball_constants(2).perimeter == doctest::Approx(2 * pi));
  CHECK(ball_constants(3).volume == doctest::Approx(4 * pi / 3));
  CHECK(ball_constants(3).perimeter == doctest::Approx(4 * pi));
  CHECK(ball_constants(4).volume == doctest::Approx(pi * pi / 2));
}

TEST_CASE("ear clipping and polygon integration") {
  const Polygon l({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  double s = 0.0;
  for (const auto& t : ear_clip(l)) s += 0.5 * cross(t[1] - t[0], t[2] - t[0]);
  CHECK(s == doctest::Approx(3.0));
  // x^2 y over the L: [0,2]x[0,1] gives 8/3 * 1/2, [0,1]x[1,2] gives 1/3 * 3/2.
  const double v = integrate_polygon(l, [](Vec2 p) { return p.x * p.x * p.y; });
  CHECK(v == doctest::Approx(8.0 / 6.0 + 0.5).epsilon(1e-12));
}
