#include "hyperbicomb/cb_bicombing.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperbicomb {

namespace {

// Hull of the sigma image over extreme-point pairs. On a tree the extreme set is every
// per-edge interval endpoint, and the span of those images equals the full union
// (the image parameter is affine in the endpoint offsets of each segment pair, so each
// pair contributes exactly the geodesic between its corner images).
ConvexBody hull_of_sigma_images(const BaseSpace& s, const ConvexBody& A, const ConvexBody& B,
                                double t) {
  const Sigma sg = Sigma::for_space(s);
  std::vector<BasePoint> img;
  const std::vector<BasePoint> pa = A.extreme_points(s);
  const std::vector<BasePoint> pb = B.extreme_points(s);
  img.reserve(pa.size() * pb.size());
  for (const BasePoint& a : pa)
    for (const BasePoint& b : pb) img.push_back(sigma_eval(s, sg, a, b, t));
  return convex_hull(s, FiniteCompactSet(s, std::move(img)));
}

}  // namespace

ConvexBody cb_sigma(const BaseSpace& s, const CBForm& form, const ConvexBody& A,
                    const ConvexBody& B, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("cb_sigma: t must be in [0, 1]");
  validate_operand(s, A);
  validate_operand(s, B);
  switch (form.kind) {
    case CBForm::Kind::Minkowski:
      if (!s.is_normed())
        throw std::invalid_argument("cb_sigma: the Minkowski form needs a normed space");
      return minkowski_combination(A, B, t);
    case CBForm::Kind::Tree:
      if (!s.is_tree()) throw std::invalid_argument("cb_sigma: the tree form needs a tree");
      return hull_of_sigma_images(s, A, B, t);
    case CBForm::Kind::HullOfUnions:
      return hull_of_sigma_images(s, A, B, t);
  }
  throw std::invalid_argument("cb_sigma: unknown form");
}

double cb_geodesic_slack(const BaseSpace& s, const CBForm& form, const ConvexBody& A,
                         const ConvexBody& B, double t1, double t2) {
  ConvexBody s1 = cb_sigma(s, form, A, B, t1);
  ConvexBody s2 = cb_sigma(s, form, A, B, t2);
  return std::abs(hausdorff_distance(s, s1, s2) -
                  std::abs(t2 - t1) * hausdorff_distance(s, A, B));
}

ConvexBody contract_to(const BaseSpace& s, const CBForm& form, const ConvexBody& A,
                       const ConvexBody& P, double t) {
  return cb_sigma(s, form, A, P, t);
}

}  // namespace hyperbicomb
