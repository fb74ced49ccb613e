#include "hyperbicomb/cli.hpp"

#include "hyperbicomb/json_io.hpp"
#include "hyperbicomb/svg.hpp"
#include "hyperbicomb/verify.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace hyperbicomb {

namespace {

using nlohmann::json;

CBForm form_from_name(const BaseSpace& s, const std::string& name) {
  if (name == "auto") return CBForm::preferred(s);
  if (name == "minkowski") return CBForm::minkowski();
  if (name == "tree") return CBForm::tree();
  if (name == "hull") return CBForm::hull_of_unions();
  throw std::invalid_argument("unknown form \"" + name +
                              "\" (expected minkowski, tree, hull, or auto)");
}

std::uint64_t effective_seed(std::uint64_t configured) {
  const char* env = std::getenv("HYPERBICOMB_SEED");
  if (!env || !*env) return configured;
  errno = 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || end == env || *end != '\0')
    throw std::invalid_argument("HYPERBICOMB_SEED is not an unsigned integer: " +
                                std::string(env));
  return static_cast<std::uint64_t>(v);
}

void require_t(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("--t must be in [0, 1]");
}

int run_hausdorff(const RunConfig& cfg, std::ostream& out) {
  BaseSpace s = space_from_json(load_json_file(cfg.space_path));
  SetOperand A = operand_from_json(s, load_json_file(cfg.a_path));
  SetOperand B = operand_from_json(s, load_json_file(cfg.b_path));
  out << json{{"d_h", hausdorff_distance(s, A, B)}}.dump() << "\n";
  return 0;
}

int run_sigma_cb(const RunConfig& cfg, std::ostream& out) {
  require_t(cfg.t);
  BaseSpace s = space_from_json(load_json_file(cfg.space_path));
  ConvexBody A = body_from_json(s, load_json_file(cfg.a_path));
  ConvexBody B = body_from_json(s, load_json_file(cfg.b_path));
  out << body_to_json(cb_sigma(s, form_from_name(s, cfg.form), A, B, cfg.t)).dump() << "\n";
  return 0;
}

int run_sigma_k(const RunConfig& cfg, std::ostream& out) {
  require_t(cfg.t);
  BaseSpace s = space_from_json(load_json_file(cfg.space_path));
  FiniteCompactSet A = finite_set_from_json(s, load_json_file(cfg.a_path));
  FiniteCompactSet B = finite_set_from_json(s, load_json_file(cfg.b_path));
  FiniteCompactSet Z =
      cfg.naive ? naive_union_sigma(s, A, B, cfg.t) : k_sigma(s, A, B, cfg.t);
  out << finite_set_to_json(Z).dump() << "\n";
  return 0;
}

int run_plot(const RunConfig& cfg, std::ostream& out) {
  if (cfg.t_steps < 1) throw std::invalid_argument("--steps must be >= 1");
  BaseSpace s = space_from_json(load_json_file(cfg.space_path));
  ConvexBody A = body_from_json(s, load_json_file(cfg.a_path));
  ConvexBody B = body_from_json(s, load_json_file(cfg.b_path));
  CBForm form = form_from_name(s, cfg.form);
  std::vector<ConvexBody> snaps;
  for (int i = 0; i <= cfg.t_steps; ++i)
    snaps.push_back(cb_sigma(s, form, A, B, static_cast<double>(i) / cfg.t_steps));
  emit_svg(snaps, cfg.out_path);
  out << "wrote " << cfg.out_path << " (" << snaps.size() << " layers)\n";
  return 0;
}

void print_report_line(std::ostream& out, const CheckReport& rep, bool expected_fail) {
  const char* status = rep.passed ? (expected_fail ? "XPASS" : "PASS")
                                  : (expected_fail ? "XFAIL" : "FAIL");
  out << status << " " << rep.suite << " " << rep.target << " " << rep.family
      << " worst_slack=" << json(rep.worst_slack).dump() << " trials=" << rep.trials << "\n";
}

int finish_reports(const RunConfig& cfg, const std::vector<CheckReport>& reports,
                   std::ostream& out) {
  bool ok = true;
  for (const CheckReport& rep : reports) {
    const bool expected_fail = std::find(cfg.expect_fail.begin(), cfg.expect_fail.end(),
                                         rep.suite) != cfg.expect_fail.end();
    print_report_line(out, rep, expected_fail);
    if (rep.passed == expected_fail) ok = false;
  }
  if (!cfg.report_path.empty()) {
    json arr = json::array();
    for (const CheckReport& rep : reports) arr.push_back(rep.to_json());
    std::ofstream f(cfg.report_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open " + cfg.report_path);
    f << arr.dump(2) << "\n";
  }
  return ok ? 0 : 2;
}

int run_verify(const RunConfig& cfg, std::uint64_t seed, std::ostream& out) {
  if (cfg.trials < 1) throw std::invalid_argument("--trials must be >= 1");
  static const std::vector<std::string> kSuites = {
      "geodesic", "conical", "convex", "consistent", "reversible", "contractible",
      "hormander", "all"};
  if (std::find(kSuites.begin(), kSuites.end(), cfg.suite) == kSuites.end())
    throw std::invalid_argument("unknown suite \"" + cfg.suite + "\"");
  for (const std::string& e : cfg.expect_fail)
    if (std::find(kSuites.begin(), kSuites.end(), e) == kSuites.end() || e == "all")
      throw std::invalid_argument("--expect-fail: unknown suite \"" + e + "\"");

  std::vector<CheckReport> reports;
  if (cfg.suite == "all") {
    MatrixConfig mc;
    mc.trials = cfg.trials;
    mc.seed = seed;
    mc.tol = cfg.tol;
    mc.t_grid = cfg.t_grid;
    mc.n_dirs = cfg.dirs;
    reports = run_default_matrix(mc);
  } else {
    std::optional<Target> tgt = target_from_name(cfg.target);
    if (!tgt) throw std::invalid_argument("unknown target \"" + cfg.target + "\"");
    std::optional<Family> fam = family_from_name(cfg.family);
    if (!fam) throw std::invalid_argument("unknown family \"" + cfg.family + "\"");
    if (cfg.suite == "hormander") {
      if (*fam != Family::Line && *fam != Family::L2Plane)
        throw std::invalid_argument("hormander needs a Euclidean family (line or l2)");
      reports.push_back(check_hormander(family_sampler(Target::CBMinkowski, *fam), cfg.trials,
                                        seed, cfg.dirs));
    } else {
      TrialSampler smp = family_sampler(*tgt, *fam);
      if (cfg.suite == "geodesic")
        reports.push_back(check_geodesic(*tgt, smp, cfg.trials, seed, cfg.tol));
      else if (cfg.suite == "conical")
        reports.push_back(check_conical(*tgt, smp, cfg.trials, seed, cfg.tol));
      else if (cfg.suite == "convex")
        reports.push_back(check_convex(*tgt, smp, cfg.trials, seed, cfg.tol, cfg.t_grid));
      else if (cfg.suite == "consistent")
        reports.push_back(check_consistent(*tgt, smp, cfg.trials, seed, cfg.tol));
      else if (cfg.suite == "reversible")
        reports.push_back(check_reversible(*tgt, smp, cfg.trials, seed, cfg.tol));
      else
        reports.push_back(check_contractible(*tgt, smp, cfg.trials, seed));
    }
  }
  return finish_reports(cfg, reports, out);
}

int run_paper_cmd(const RunConfig& cfg, std::ostream& out) {
  return finish_reports(cfg, run_paper_examples(), out);
}

}  // namespace

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const std::uint64_t seed = effective_seed(cfg.seed);
    if (cfg.subcommand == "hausdorff") return run_hausdorff(cfg, out);
    if (cfg.subcommand == "sigma-cb") return run_sigma_cb(cfg, out);
    if (cfg.subcommand == "sigma-k") return run_sigma_k(cfg, out);
    if (cfg.subcommand == "verify") return run_verify(cfg, seed, out);
    if (cfg.subcommand == "paper-examples") return run_paper_cmd(cfg, out);
    if (cfg.subcommand == "plot") return run_plot(cfg, out);
    err << "error: unknown subcommand \"" << cfg.subcommand << "\"\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hyperbicomb
