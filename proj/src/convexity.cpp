#include "hyperbicomb/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hyperbicomb {

namespace {

// Union of the geodesics from the first point to every other; in a tree this is the
// subtree spanned by the whole set.
ConvexBody tree_span(const BaseSpace& s, const std::vector<BasePoint>& pts) {
  const RTree& T = s.rtree();
  std::vector<EdgeInterval> ivs;
  TreePoint base = T.canonical(pts.front().tree_pt());
  ivs.push_back({base.edge, base.offset, base.offset});
  for (std::size_t i = 1; i < pts.size(); ++i) {
    for (const TreeSegment& sg : tree_path(s, pts.front(), pts[i])) {
      double lo = std::min(sg.from, sg.to);
      double hi = std::max(sg.from, sg.to);
      ivs.push_back({sg.edge, lo, hi});
    }
  }
  return ConvexBody::subtree(s, std::move(ivs));
}

}  // namespace

ConvexBody convex_hull(const BaseSpace& s, const FiniteCompactSet& S) {
  for (const BasePoint& p : S.points()) validate_point(s, p);
  if (s.is_line()) {
    double lo = S.points().front().vec()(0);
    double hi = lo;
    for (const BasePoint& p : S.points()) {
      lo = std::min(lo, p.vec()(0));
      hi = std::max(hi, p.vec()(0));
    }
    return ConvexBody::interval(lo, hi);
  }
  if (s.is_plane()) {
    std::vector<Eigen::Vector2d> pts;
    pts.reserve(S.points().size());
    for (const BasePoint& p : S.points()) pts.emplace_back(p.vec()(0), p.vec()(1));
    return ConvexBody::polygon_unchecked(planar_hull(std::move(pts)));
  }
  if (s.is_tree()) return tree_span(s, S.points());
  throw std::invalid_argument("convex_hull: bodies are supported on the line, planes, and trees");
}

ConvexBody minkowski_combination(const ConvexBody& A, const ConvexBody& B, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("minkowski: t must be in [0, 1]");
  if (A.kind() == ConvexBody::Kind::Subtree || B.kind() == ConvexBody::Kind::Subtree)
    throw std::invalid_argument("minkowski: undefined for subtree bodies");
  if (A.kind() != B.kind())
    throw std::invalid_argument("minkowski: operands live in different spaces");
  if (A.kind() == ConvexBody::Kind::Interval) {
    const Interval& a = A.as_interval();
    const Interval& b = B.as_interval();
    return ConvexBody::interval((1.0 - t) * a.lo + t * b.lo, (1.0 - t) * a.hi + t * b.hi);
  }
  const auto& va = A.polygon_vertices();
  const auto& vb = B.polygon_vertices();
  std::vector<Eigen::Vector2d> combos;
  combos.reserve(va.size() * vb.size());
  for (const auto& a : va)
    for (const auto& b : vb) combos.emplace_back((1.0 - t) * a + t * b);
  return ConvexBody::polygon_unchecked(planar_hull(std::move(combos)));
}

double support_functional(const ConvexBody& A, const Eigen::VectorXd& u) {
  if (std::abs(u.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("support: direction must be Euclidean-unit");
  if (A.kind() == ConvexBody::Kind::Subtree)
    throw std::invalid_argument("support: undefined for subtree bodies");
  if (A.kind() == ConvexBody::Kind::Interval) {
    if (u.size() != 1) throw std::invalid_argument("support: direction dimension mismatch");
    const Interval& iv = A.as_interval();
    return std::max(u(0) * iv.lo, u(0) * iv.hi);
  }
  if (u.size() != 2) throw std::invalid_argument("support: direction dimension mismatch");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : A.polygon_vertices()) best = std::max(best, u(0) * v.x() + u(1) * v.y());
  return best;
}

SupportSample support_sample(const BaseSpace& s, const ConvexBody& A, int n_dirs) {
  if (n_dirs < 8) throw std::invalid_argument("support sample: need at least 8 directions");
  validate_operand(s, A);
  SupportSample out;
  if (s.is_line()) {
    for (double d : {1.0, -1.0}) {
      Eigen::VectorXd u(1);
      u << d;
      out.values.push_back(support_functional(A, u));
      out.directions.push_back(std::move(u));
    }
    return out;
  }
  for (int k = 0; k < n_dirs; ++k) {
    double th = 2.0 * std::numbers::pi * k / n_dirs;
    Eigen::VectorXd u(2);
    u << std::cos(th), std::sin(th);
    out.values.push_back(support_functional(A, u));
    out.directions.push_back(std::move(u));
  }
  return out;
}

double hormander_gap(const BaseSpace& s, const ConvexBody& A, const ConvexBody& B, int n_dirs) {
  if (!s.is_normed() || (s.dim() == 2 && s.norm() != Norm::L2))
    throw std::invalid_argument(
        "hormander: the sampled support-difference form is asserted only for Euclidean norms");
  SupportSample sa = support_sample(s, A, n_dirs);
  SupportSample sb = support_sample(s, B, n_dirs);
  double sup = 0.0;
  for (std::size_t k = 0; k < sa.values.size(); ++k)
    sup = std::max(sup, std::abs(sa.values[k] - sb.values[k]));
  return std::abs(sup - hausdorff_distance(s, A, B));
}

double cco_lipschitz_slack(const BaseSpace& s, const FiniteCompactSet& S,
                           const FiniteCompactSet& T) {
  return hausdorff_distance(s, convex_hull(s, S), convex_hull(s, T)) -
         hausdorff_distance(s, S, T);
}

}  // namespace hyperbicomb
