#pragma once

#include "hyperbicomb/cb_bicombing.hpp"
#include "hyperbicomb/convexity.hpp"
#include "hyperbicomb/json_io.hpp"
#include "hyperbicomb/k_bicombing.hpp"
#include "hyperbicomb/rng.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hyperbicomb {

// What gets interpolated: base points under the base bicombing, convex bodies under one
// of the three hyperspace forms, or finite sets under the projection bicombing.
enum class Target { Linear, CBMinkowski, CBTree, CBHull, KSigma };

enum class Family { Line, L1Plane, L2Plane, LinfPlane, RTreeFamily, EuclideanRn };

std::string target_name(Target t);
std::string family_label(Family f, int dim = 2);
std::optional<Target> target_from_name(const std::string& name);
std::optional<Family> family_from_name(const std::string& name);

struct CheckReport {
  std::string suite;
  std::string target;
  std::string family;
  int trials = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  double worst_slack = 0.0;
  bool passed = false;
  // Tuple achieving worst_slack: {"space", "elements", "params"}. Re-evaluating it via
  // replay_slack reproduces worst_slack within 1e-12.
  nlohmann::json witness;
  nlohmann::json to_json() const;
};

using Elem = std::variant<BasePoint, ConvexBody, FiniteCompactSet>;

// Base metric for points, Hausdorff metric for bodies and finite sets.
double elem_distance(const BaseSpace& s, const Elem& a, const Elem& b);
Elem elem_sigma(const BaseSpace& s, Target target, const Elem& a, const Elem& b, double t);
nlohmann::json elem_to_json(const Elem& e);
Elem elem_from_json(const BaseSpace& s, const nlohmann::json& j);

struct TrialContext {
  BaseSpace space = BaseSpace::line();
  std::vector<Elem> elems;
  std::string family = "fixed";
  // Pins the interpolation parameter (fixed regression triples); checks draw it
  // from the trial generator otherwise.
  std::optional<double> fixed_t;
};

struct ElemRequest {
  int count = 2;
  // The contraction checks need the last element degenerate (a single point).
  bool last_is_point = false;
};

// Trial i runs on its own generator seeded from (seed, i), so serial and parallel
// executions, and reruns, see identical data.
using TrialSampler = std::function<TrialContext(Rng&, const ElemRequest&)>;

// Elements match the target's kind: points for Linear, bodies for the CB forms
// (intervals / polygon hulls of 3-10 points / subtree spans of 1-4 points), finite sets
// of 1-8 points for KSigma; coordinates uniform in [-10,10], trees of 2-20 edges with
// lengths in [0.1,5]. Throws std::invalid_argument on unsupported target/family pairs.
TrialSampler family_sampler(Target target, Family family, int dim = 2);

// Replays one fixed context in every trial.
TrialSampler fixed_sampler(TrialContext ctx);

// d(sigma(x,y,s), sigma(x,y,t)) = |t-s| d(x,y); slack is the absolute deviation.
CheckReport check_geodesic(Target target, const TrialSampler& sampler, int trials,
                           std::uint64_t seed, double tol);
// d(sigma(a,b,t), sigma(c,d,t)) <= (1-t) d(a,c) + t d(b,d); slack is the excess.
CheckReport check_conical(Target target, const TrialSampler& sampler, int trials,
                          std::uint64_t seed, double tol);
// Midpoint convexity of t -> d(sigma(a,b,t), sigma(c,d,t)) over adjacent grid triples.
CheckReport check_convex(Target target, const TrialSampler& sampler, int trials,
                         std::uint64_t seed, double tol, int t_grid = 33);
// d(sigma(sigma(x,y,r), sigma(x,y,s), t), sigma(x,y,(1-t)r+ts)), r < s.
CheckReport check_consistent(Target target, const TrialSampler& sampler, int trials,
                             std::uint64_t seed, double tol);
// d(sigma(x,y,t), sigma(y,x,1-t)).
CheckReport check_reversible(Target target, const TrialSampler& sampler, int trials,
                             std::uint64_t seed, double tol);
// phi(A,t) = sigma(A,P,t) retracts A to the point body P: endpoint identities within
// 1e-12 and the Lipschitz proxy d_H(phi(t), phi(t')) <= d_H(A,P)|t-t'| + 1e-9 on a
// t grid. Slack is the worst excess over those bounds, so the tolerance is 0.
CheckReport check_contractible(Target target, const TrialSampler& sampler, int trials,
                               std::uint64_t seed);
// diam of the forward half of k_sigma(A,B,t) stays within 2t d_H(A,B) + diam(A);
// slack is the excess.
CheckReport check_diameter_bound(const TrialSampler& sampler, int trials, std::uint64_t seed,
                                 double tol);
// Support-function oracle on Euclidean families: the sampled direction sup stays within
// 1e-3 (1 + diam) of d_H, and s_{sigma(A,B,t)} = (1-t) s_A + t s_B within 1e-12 per
// direction. Slack is the worst excess over those bounds; tolerance 0.
CheckReport check_hormander(const TrialSampler& sampler, int trials, std::uint64_t seed,
                            int n_dirs = 3600);

// Recomputes a report's slack from its serialized witness.
double replay_slack(const CheckReport& report);

// Three fixed regressions reproducing printed reference values within 1e-12:
//   failed-bicombing     the all-pairs union that overshoots the midpoint distances
//   non-unique-geodesic  the interval quadruple with four unit cross-distances, plus
//                        its product lift to the Linf plane
//   non-conical          the projection bicombing triple whose conical gap is 0.05
std::vector<CheckReport> run_paper_examples();

struct MatrixConfig {
  int trials = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int t_grid = 33;
  int n_dirs = 3600;
};

// The full default suite grid: every target on every family it supports, each axiom
// check that is expected to hold there, plus the support oracle and the fixed
// regressions. Every report in the result should pass.
std::vector<CheckReport> run_default_matrix(const MatrixConfig& cfg);

// Whenever consistent and conical both passed for a (target, family) cell, convex must
// have passed there too.
bool implication_chain_holds(const std::vector<CheckReport>& reports);

}  // namespace hyperbicomb
