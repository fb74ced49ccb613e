#include "hyperbicomb/convexity.hpp"

#include "hyperbicomb/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace hyperbicomb;
using hyperbicomb::testing::random_tree;
using hyperbicomb::testing::random_tree_point;

namespace {

ConvexBody random_polygon(Rng& rng) {
  int n = rng.uniform_int(3, 10);
  std::vector<Eigen::Vector2d> pts;
  for (int i = 0; i < n; ++i)
    pts.push_back({rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)});
  return ConvexBody::polygon_unchecked(planar_hull(std::move(pts)));
}

}  // namespace

TEST_CASE("convex hull on the line") {
  BaseSpace line = BaseSpace::line();
  FiniteCompactSet pts(line, {BasePoint::scalar(3.0), BasePoint::scalar(-1.0),
                              BasePoint::scalar(2.0)});
  ConvexBody h = convex_hull(line, pts);
  CHECK(h.as_interval().lo == -1.0);
  CHECK(h.as_interval().hi == 3.0);
}

TEST_CASE("convex hull in the plane") {
  BaseSpace l2 = BaseSpace::plane(Norm::L2);
  FiniteCompactSet pts(l2, {BasePoint::planar(0, 0), BasePoint::planar(4, 0),
                            BasePoint::planar(4, 4), BasePoint::planar(0, 4),
                            BasePoint::planar(2, 2), BasePoint::planar(2, 0)});
  ConvexBody h = convex_hull(l2, pts);
  CHECK(h.polygon_vertices().size() == 4);  // interior and collinear points dropped

  FiniteCompactSet two(l2, {BasePoint::planar(1, 1), BasePoint::planar(3, 5)});
  CHECK(convex_hull(l2, two).polygon_vertices().size() == 2);
  FiniteCompactSet one(l2, {BasePoint::planar(1, 1)});
  CHECK(convex_hull(l2, one).polygon_vertices().size() == 1);
}

TEST_CASE("convex hull on trees is the spanned subtree") {
  RTree t({0, 1, 2, 3}, {{0, 0, 1, 1.0}, {1, 0, 2, 1.0}, {2, 0, 3, 1.0}});
  BaseSpace s = BaseSpace::tree(t);
  FiniteCompactSet leaves(s, {BasePoint::on_edge(0, 1.0), BasePoint::on_edge(1, 1.0)});
  ConvexBody span = convex_hull(s, leaves);
  REQUIRE(span.subtree_intervals().size() == 2);
  CHECK(span.subtree_intervals()[0].edge == 0);
  CHECK(span.subtree_intervals()[0].lo == 0.0);
  CHECK(span.subtree_intervals()[0].hi == 1.0);
  CHECK(span.subtree_intervals()[1].edge == 1);

  FiniteCompactSet all3(s, {BasePoint::on_edge(0, 1.0), BasePoint::on_edge(1, 1.0),
                            BasePoint::on_edge(2, 1.0)});
  CHECK(convex_hull(s, all3).subtree_intervals().size() == 3);

  // hull of a hull's endpoints reproduces the hull
  std::vector<BasePoint> eps = span.extreme_points(s);
  ConvexBody again = convex_hull(s, FiniteCompactSet(s, eps));
  CHECK(hausdorff_distance(s, span, again) == 0.0);
}

TEST_CASE("minkowski combination") {
  ConvexBody A = ConvexBody::interval(-1.0, 1.0);
  ConvexBody B = ConvexBody::interval(-2.0, 3.0);
  ConvexBody M = minkowski_combination(A, B, 0.5);
  CHECK(M.as_interval().lo == -1.5);
  CHECK(M.as_interval().hi == 2.0);

  BaseSpace line = BaseSpace::line();
  CHECK(hausdorff_distance(line, minkowski_combination(A, B, 0.0), A) == 0.0);
  CHECK(hausdorff_distance(line, minkowski_combination(A, B, 1.0), B) == 0.0);

  SUBCASE("segment blended with a point stays a segment") {
    BaseSpace l2 = BaseSpace::plane(Norm::L2);
    ConvexBody seg = ConvexBody::polygon({{0, 0}, {2, 0}});
    ConvexBody pt = ConvexBody::point(l2, BasePoint::planar(0, 2));
    ConvexBody M2 = minkowski_combination(seg, pt, 0.5);
    REQUIRE(M2.polygon_vertices().size() == 2);
    CHECK(M2.polygon_vertices()[0].x() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(M2.polygon_vertices()[0].y() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(M2.polygon_vertices()[1].x() == doctest::Approx(1.0).epsilon(1e-15));
  }

  SUBCASE("subtree operands are rejected") {
    RTree t({0, 1}, {{0, 0, 1, 1.0}});
    BaseSpace s = BaseSpace::tree(t);
    ConvexBody sub = ConvexBody::subtree(s, {{0, 0.0, 1.0}});
    CHECK_THROWS_AS(minkowski_combination(sub, sub, 0.5), std::invalid_argument);
  }
}

TEST_CASE("support functional") {
  ConvexBody tri = ConvexBody::polygon({{0, 0}, {2, 0}, {0, 2}});
  Eigen::VectorXd diag(2);
  diag << std::sqrt(0.5), std::sqrt(0.5);
  CHECK(support_functional(tri, diag) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  ConvexBody sq = ConvexBody::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  Eigen::VectorXd ex(2);
  ex << 1.0, 0.0;
  CHECK(support_functional(sq, ex) == 1.0);

  Eigen::VectorXd notunit(2);
  notunit << 1.0, 1.0;
  CHECK_THROWS_AS(support_functional(sq, notunit), std::invalid_argument);

  ConvexBody iv = ConvexBody::interval(-2.0, 5.0);
  Eigen::VectorXd plus(1), minus(1);
  plus << 1.0;
  minus << -1.0;
  CHECK(support_functional(iv, plus) == 5.0);
  CHECK(support_functional(iv, minus) == 2.0);
}

TEST_CASE("support sampling grids") {
  BaseSpace line = BaseSpace::line();
  CHECK_THROWS_AS(support_sample(line, ConvexBody::interval(0.0, 3.0), 7),
                  std::invalid_argument);
  SupportSample s1 = support_sample(line, ConvexBody::interval(0.0, 3.0), 8);
  REQUIRE(s1.directions.size() == 2);  // the line needs only the two unit directions
  CHECK(s1.values[0] == 3.0);
  CHECK(s1.values[1] == 0.0);

  BaseSpace l2 = BaseSpace::plane(Norm::L2);
  SupportSample s2 = support_sample(l2, ConvexBody::polygon({{0, 0}, {1, 0}, {0, 1}}), 360);
  REQUIRE(s2.directions.size() == 360);
  CHECK(s2.directions[0](0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s2.values[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("embedding gap") {
  BaseSpace line = BaseSpace::line();
  Rng rng(211);

  SUBCASE("exact on the line") {
    for (int i = 0; i < 50; ++i) {
      double a1 = rng.uniform(-10.0, 10.0), a2 = rng.uniform(-10.0, 10.0);
      double b1 = rng.uniform(-10.0, 10.0), b2 = rng.uniform(-10.0, 10.0);
      ConvexBody A = ConvexBody::interval(std::min(a1, a2), std::max(a1, a2));
      ConvexBody B = ConvexBody::interval(std::min(b1, b2), std::max(b1, b2));
      CHECK(hormander_gap(line, A, B, 8) <= 1e-12);
    }
  }

  SUBCASE("within the angular resolution bound on polygons") {
    BaseSpace l2 = BaseSpace::plane(Norm::L2);
    for (int i = 0; i < 30; ++i) {
      ConvexBody A = random_polygon(rng);
      ConvexBody B = random_polygon(rng);
      double d = std::max(diameter(l2, SetOperand{A}), diameter(l2, SetOperand{B}));
      CHECK(hormander_gap(l2, A, B, 3600) <= 1e-3 * (1.0 + d));
    }
  }

  SUBCASE("polyhedral norms are rejected") {
    BaseSpace l1 = BaseSpace::plane(Norm::L1);
    ConvexBody A = random_polygon(rng);
    CHECK_THROWS_AS(hormander_gap(l1, A, A, 100), std::invalid_argument);
  }
}

TEST_CASE("support additivity along the combination") {
  BaseSpace l2 = BaseSpace::plane(Norm::L2);
  Rng rng(223);
  for (int i = 0; i < 25; ++i) {
    ConvexBody A = random_polygon(rng);
    ConvexBody B = random_polygon(rng);
    double t = rng.uniform(0.0, 1.0);
    ConvexBody M = minkowski_combination(A, B, t);
    SupportSample sa = support_sample(l2, A, 256);
    SupportSample sb = support_sample(l2, B, 256);
    SupportSample sm = support_sample(l2, M, 256);
    for (std::size_t k = 0; k < sa.directions.size(); ++k) {
      double want = (1.0 - t) * sa.values[k] + t * sb.values[k];
      CHECK(std::abs(sm.values[k] - want) <= 1e-12 * (1.0 + std::abs(want)));
    }
  }
}

TEST_CASE("hulling is 1-Lipschitz in the Hausdorff metric") {
  Rng rng(227);
  BaseSpace line = BaseSpace::line();
  BaseSpace l2 = BaseSpace::plane(Norm::L2);
  BaseSpace l1 = BaseSpace::plane(Norm::L1);

  auto finite = [&](const BaseSpace& s) {
    int n = rng.uniform_int(1, 8);
    std::vector<BasePoint> pts;
    for (int i = 0; i < n; ++i) {
      if (s.is_tree())
        pts.push_back(random_tree_point(rng, s.rtree()));
      else if (s.dim() == 1)
        pts.push_back(BasePoint::scalar(rng.uniform(-10.0, 10.0)));
      else
        pts.push_back(BasePoint::planar(rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)));
    }
    return FiniteCompactSet(s, std::move(pts));
  };

  for (const BaseSpace& s : {line, l1, l2}) {
    for (int i = 0; i < 40; ++i)
      CHECK(cco_lipschitz_slack(s, finite(s), finite(s)) <= 1e-9);
  }
  for (int trial = 0; trial < 4; ++trial) {
    BaseSpace s = BaseSpace::tree(random_tree(rng));
    for (int i = 0; i < 15; ++i)
      CHECK(cco_lipschitz_slack(s, finite(s), finite(s)) <= 1e-9);
  }
}
