#pragma once

#include "hyperbicomb/convexity.hpp"

namespace hyperbicomb {

// The bicombing Sigma(A, B, t) on closed bounded convex sets, in three computable forms:
//   Minkowski     closure((1-t)A + tB) on normed spaces, via extreme points;
//   Tree          the union of base geodesics on a tree, which is already a subtree
//                 (no hull step); computed as the span of sigma over the per-edge
//                 interval endpoints of the operands, which is exact;
//   HullOfUnions  cco of the sigma image over extreme-point pairs, on any supported
//                 space. Coincides with the specialized forms where both apply.
struct CBForm {
  enum class Kind { Minkowski, Tree, HullOfUnions };
  Kind kind = Kind::Minkowski;
  static CBForm minkowski() { return {Kind::Minkowski}; }
  static CBForm tree() { return {Kind::Tree}; }
  static CBForm hull_of_unions() { return {Kind::HullOfUnions}; }
  static CBForm preferred(const BaseSpace& s) {
    return s.is_tree() ? tree() : minkowski();
  }
};

ConvexBody cb_sigma(const BaseSpace& s, const CBForm& form, const ConvexBody& A,
                    const ConvexBody& B, double t);

// |d_H(Sigma(A,B,s), Sigma(A,B,t)) - |t-s| * d_H(A,B)|.
double cb_geodesic_slack(const BaseSpace& s, const CBForm& form, const ConvexBody& A,
                         const ConvexBody& B, double t1, double t2);

// The contraction Sigma(A, P, t) toward a basepoint body P.
ConvexBody contract_to(const BaseSpace& s, const CBForm& form, const ConvexBody& A,
                       const ConvexBody& P, double t);

}  // namespace hyperbicomb
