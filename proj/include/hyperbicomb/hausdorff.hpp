#pragma once

#include "hyperbicomb/spaces.hpp"

#include <variant>
#include <vector>

namespace hyperbicomb {

// Nonempty, deduplicated (1e-12), canonically ordered point set.
class FiniteCompactSet {
 public:
  FiniteCompactSet(const BaseSpace& s, std::vector<BasePoint> pts);
  const std::vector<BasePoint>& points() const { return points_; }
  int size() const { return static_cast<int>(points_.size()); }

 private:
  std::vector<BasePoint> points_;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Closed subinterval [lo, hi] of one tree edge, offsets from the tail.
struct EdgeInterval {
  int edge = 0;
  double lo = 0.0;
  double hi = 0.0;
};

// Closed convex body in a base space: an interval on the line, a convex polygon in a
// plane (1 vertex = point, 2 = segment, >= 3 strictly convex CCW starting at the
// lexicographically smallest vertex), or a closed connected subtree of a metric tree
// (at most one interval per edge, ascending edge ids).
class ConvexBody {
 public:
  enum class Kind { Interval, Polygon, Subtree };

  static ConvexBody interval(double lo, double hi);
  // Accepts convex-position vertices in either orientation; canonicalizes. Rejects
  // inputs with duplicate, collinear, or interior vertices.
  static ConvexBody polygon(std::vector<Eigen::Vector2d> vertices);
  static ConvexBody subtree(const BaseSpace& s, std::vector<EdgeInterval> intervals);
  static ConvexBody point(const BaseSpace& s, const BasePoint& p);

  Kind kind() const { return kind_; }
  const Interval& as_interval() const;
  const std::vector<Eigen::Vector2d>& polygon_vertices() const;
  const std::vector<EdgeInterval>& subtree_intervals() const;

  // Interval endpoints, polygon vertices, or subtree interval endpoints, as points.
  // Every extreme point of the body is included.
  std::vector<BasePoint> extreme_points(const BaseSpace& s) const;

  // Canonical hull of already-hulled vertices; skips the convex-position check.
  static ConvexBody polygon_unchecked(std::vector<Eigen::Vector2d> hull);

 private:
  ConvexBody() = default;
  Kind kind_ = Kind::Interval;
  Interval interval_;
  std::vector<Eigen::Vector2d> vertices_;
  std::vector<EdgeInterval> intervals_;
};

// Operand of the hyperspace metrics: either representation, mixed pairs allowed.
using SetOperand = std::variant<FiniteCompactSet, ConvexBody>;

// Monotone-chain convex hull, CCW, collinear vertices eliminated (cross tolerance
// 1e-12), starting at the lexicographically smallest vertex.
std::vector<Eigen::Vector2d> planar_hull(std::vector<Eigen::Vector2d> pts);

// Distance from p to the segment [a, b] under the given norm. Exact: closed-form
// projection for L2, kink enumeration for the polyhedral norms.
double point_to_segment(Norm n, const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                        const Eigen::Vector2d& b);

void validate_operand(const BaseSpace& s, const SetOperand& A);

// Exact infimum of d(x, a) over the set.
double point_to_set(const BaseSpace& s, const BasePoint& x, const SetOperand& A);

// max(sup_{a in A} d(a, B), sup_{b in B} d(b, A)); sups over convex bodies are taken
// over extreme points (d(., other) is convex on a convex body).
double hausdorff_distance(const BaseSpace& s, const SetOperand& A, const SetOperand& B);

// Same value via the neighborhood formulation inf{eps : A in N_eps(B), B in N_eps(A)},
// by bisection (60 iterations).
double hausdorff_infimum_form(const BaseSpace& s, const SetOperand& A, const SetOperand& B);

// Membership in the closed eps-neighborhood: d(x, A) <= eps + 1e-12.
bool in_eps_neighborhood(const BaseSpace& s, const BasePoint& x, const SetOperand& A,
                         double eps);

// Max pairwise distance; attained on extreme points for bodies.
double diameter(const BaseSpace& s, const SetOperand& A);

// All points for finite sets, extreme points for bodies.
std::vector<BasePoint> witness_points(const BaseSpace& s, const SetOperand& A);

}  // namespace hyperbicomb
