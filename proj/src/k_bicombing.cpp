#include "hyperbicomb/k_bicombing.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hyperbicomb {

ProjectionResult metric_projection(const BaseSpace& s, const FiniteCompactSet& A,
                                   const BasePoint& x) {
  validate_point(s, x);
  ProjectionResult out;
  out.min_distance = std::numeric_limits<double>::infinity();
  std::vector<double> dists;
  dists.reserve(A.points().size());
  for (const BasePoint& a : A.points()) {
    double d = distance(s, x, a);
    dists.push_back(d);
    out.min_distance = std::min(out.min_distance, d);
  }
  for (std::size_t i = 0; i < dists.size(); ++i)
    if (dists[i] <= out.min_distance + kPointTol) out.minimizers.push_back(A.points()[i]);
  return out;
}

FiniteCompactSet omega(const BaseSpace& s, const BasePoint& a, const BasePoint& b, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("omega: t must be in [0, 1]");
  if (!s.uniquely_geodesic())
    throw std::invalid_argument(
        "omega: evaluation needs a uniquely geodesic space (Euclidean norm or tree); the "
        "L1/Linf plane admits multiple geodesics between some pairs");
  BasePoint p = sigma_eval(s, Sigma::for_space(s), a, b, t);
  const double d = distance(s, a, b);
  if (std::abs(distance(s, a, p) - t * d) > kPointTol ||
      std::abs(distance(s, p, b) - (1.0 - t) * d) > kPointTol)
    throw std::logic_error("omega: geodesic point failed membership re-verification");
  return FiniteCompactSet(s, {std::move(p)});
}

namespace {

void append_projection_legs(const BaseSpace& s, const FiniteCompactSet& from,
                            const FiniteCompactSet& to, double t, bool toward,
                            std::vector<BasePoint>& out) {
  const Sigma sg = Sigma::for_space(s);
  for (const BasePoint& p : from.points()) {
    ProjectionResult proj = metric_projection(s, to, p);
    for (const BasePoint& q : proj.minimizers) {
      // toward: p travels to its projection q; otherwise q travels to p.
      out.push_back(toward ? sigma_eval(s, sg, p, q, t) : sigma_eval(s, sg, q, p, t));
    }
  }
}

}  // namespace

FiniteCompactSet k_sigma_forward_term(const BaseSpace& s, const FiniteCompactSet& A,
                                      const FiniteCompactSet& B, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("k_sigma: t must be in [0, 1]");
  if (!s.uniquely_geodesic())
    throw std::invalid_argument(
        "k_sigma: needs a uniquely geodesic space (Euclidean norm or tree)");
  std::vector<BasePoint> pts;
  append_projection_legs(s, A, B, t, true, pts);
  return FiniteCompactSet(s, std::move(pts));
}

FiniteCompactSet k_sigma(const BaseSpace& s, const FiniteCompactSet& A,
                         const FiniteCompactSet& B, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("k_sigma: t must be in [0, 1]");
  if (!s.uniquely_geodesic())
    throw std::invalid_argument(
        "k_sigma: needs a uniquely geodesic space (Euclidean norm or tree)");
  std::vector<BasePoint> pts;
  append_projection_legs(s, A, B, t, true, pts);   // a -> P_B(a)
  append_projection_legs(s, B, A, t, false, pts);  // P_A(b) -> b
  return FiniteCompactSet(s, std::move(pts));
}

FiniteCompactSet naive_union_sigma(const BaseSpace& s, const FiniteCompactSet& A,
                                   const FiniteCompactSet& B, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("sigma: t must be in [0, 1]");
  if (!s.uniquely_geodesic())
    throw std::invalid_argument(
        "naive_union_sigma: needs a uniquely geodesic space (Euclidean norm or tree)");
  const Sigma sg = Sigma::for_space(s);
  std::vector<BasePoint> pts;
  pts.reserve(A.points().size() * B.points().size());
  for (const BasePoint& a : A.points())
    for (const BasePoint& b : B.points()) pts.push_back(sigma_eval(s, sg, a, b, t));
  return FiniteCompactSet(s, std::move(pts));
}

}  // namespace hyperbicomb
