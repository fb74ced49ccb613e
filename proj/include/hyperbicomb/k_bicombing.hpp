#pragma once

#include "hyperbicomb/hausdorff.hpp"

namespace hyperbicomb {

struct ProjectionResult {
  std::vector<BasePoint> minimizers;  // all points within 1e-12 of the minimum
  double min_distance = 0.0;
};

// P_A(x): the nearest points of A to x.
ProjectionResult metric_projection(const BaseSpace& s, const FiniteCompactSet& A,
                                   const BasePoint& x);

// omega(a, b, t): the set of points x with d(a,x) = t*d(a,b) and d(x,b) = (1-t)*d(a,b).
// Only evaluated on uniquely geodesic spaces, where it is the singleton sigma(a,b,t);
// membership is re-verified within 1e-12.
FiniteCompactSet omega(const BaseSpace& s, const BasePoint& a, const BasePoint& b, double t);

// The finite-set bicombing: geodesic points toward metric projections in both
// directions. Geodesic, but not conical.
FiniteCompactSet k_sigma(const BaseSpace& s, const FiniteCompactSet& A,
                         const FiniteCompactSet& B, double t);

// The all-pairs construction {sigma(a,b,t) : a in A, b in B}. Fails the midpoint
// property; kept as a negative control.
FiniteCompactSet naive_union_sigma(const BaseSpace& s, const FiniteCompactSet& A,
                                   const FiniteCompactSet& B, double t);

// The first union term of k_sigma, whose diameter obeys
// diam <= 2t*d_H(A,B) + diam(A); exposed for the boundedness check.
FiniteCompactSet k_sigma_forward_term(const BaseSpace& s, const FiniteCompactSet& A,
                                      const FiniteCompactSet& B, double t);

}  // namespace hyperbicomb
