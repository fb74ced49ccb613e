#pragma once

#include "hyperbicomb/hausdorff.hpp"

namespace hyperbicomb {

// Closed convex hull: [min, max] on the line, monotone-chain hull in a plane, the
// spanned subtree (union of pairwise geodesics) on a tree.
ConvexBody convex_hull(const BaseSpace& s, const FiniteCompactSet& S);

// The body (1-t)A + tB, computed exactly from extreme points; interpolation between
// bodies in a normed space. Undefined for subtree bodies.
ConvexBody minkowski_combination(const ConvexBody& A, const ConvexBody& B, double t);

// s_A(u) = sup of <u, a> over A, for a Euclidean-unit direction u.
double support_functional(const ConvexBody& A, const Eigen::VectorXd& u);

struct SupportSample {
  std::vector<Eigen::VectorXd> directions;
  std::vector<double> values;
};

// Support values on the uniform direction grid ({+1,-1} on the line, n_dirs angles in
// a plane).
SupportSample support_sample(const BaseSpace& s, const ConvexBody& A, int n_dirs);

// |max_k |s_A(u_k) - s_B(u_k)| - d_H(A, B)| on the direction grid. The sampled sup can
// only undershoot, by at most diam * pi / n_dirs. Euclidean norms only.
double hormander_gap(const BaseSpace& s, const ConvexBody& A, const ConvexBody& B, int n_dirs);

// d_H(cco S, cco T) - d_H(S, T); nonpositive up to roundoff when the base space carries
// a conical bicombing.
double cco_lipschitz_slack(const BaseSpace& s, const FiniteCompactSet& S,
                           const FiniteCompactSet& T);

}  // namespace hyperbicomb
