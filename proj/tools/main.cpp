#include "hyperbicomb/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Geodesic bicombings on hyperspaces of metric spaces"};
  app.require_subcommand(1);

  hyperbicomb::RunConfig cfg;

  CLI::App* hd = app.add_subcommand("hausdorff", "Hausdorff distance between two sets");
  hd->add_option("--space", cfg.space_path, "base space JSON file")->required();
  hd->add_option("--a", cfg.a_path, "first operand JSON file")->required();
  hd->add_option("--b", cfg.b_path, "second operand JSON file")->required();

  CLI::App* scb = app.add_subcommand("sigma-cb", "Convex-body bicombing at parameter t");
  scb->add_option("--space", cfg.space_path, "base space JSON file")->required();
  scb->add_option("--a", cfg.a_path, "first body JSON file")->required();
  scb->add_option("--b", cfg.b_path, "second body JSON file")->required();
  scb->add_option("--t", cfg.t, "interpolation parameter in [0,1]");
  scb->add_option("--form", cfg.form, "minkowski | tree | hull | auto");

  CLI::App* sk = app.add_subcommand("sigma-k", "Finite-set bicombing at parameter t");
  sk->add_option("--space", cfg.space_path, "base space JSON file")->required();
  sk->add_option("--a", cfg.a_path, "first finite set JSON file")->required();
  sk->add_option("--b", cfg.b_path, "second finite set JSON file")->required();
  sk->add_option("--t", cfg.t, "interpolation parameter in [0,1]");
  sk->add_flag("--naive", cfg.naive, "all-pairs union instead of the projection bicombing");

  CLI::App* vf = app.add_subcommand("verify", "Randomized property suites");
  vf->add_option("--suite", cfg.suite,
                 "geodesic | conical | convex | consistent | reversible | contractible | "
                 "hormander | all");
  vf->add_option("--family", cfg.family, "line | l1 | l2 | linf | rtree");
  vf->add_option("--target", cfg.target,
                 "linear | cb-minkowski | cb-tree | cb-hull | k-sigma");
  vf->add_option("--trials", cfg.trials, "trials per suite");
  vf->add_option("--seed", cfg.seed, "base seed (HYPERBICOMB_SEED overrides)");
  vf->add_option("--tol", cfg.tol, "pass tolerance");
  vf->add_option("--t-grid", cfg.t_grid, "grid size for the convexity check");
  vf->add_option("--dirs", cfg.dirs, "direction count for the support oracle");
  vf->add_option("--report", cfg.report_path, "write CheckReport JSON array here");
  vf->add_option("--expect-fail", cfg.expect_fail,
                 "suites expected to fail (their failure keeps exit code 0)");

  CLI::App* pe = app.add_subcommand("paper-examples", "Fixed reference regressions");
  pe->add_option("--report", cfg.report_path, "write CheckReport JSON array here");

  CLI::App* pl = app.add_subcommand("plot", "SVG trace of a convex-body geodesic");
  pl->add_option("--space", cfg.space_path, "base space JSON file")->required();
  pl->add_option("--a", cfg.a_path, "first body JSON file")->required();
  pl->add_option("--b", cfg.b_path, "second body JSON file")->required();
  pl->add_option("--steps", cfg.t_steps, "snapshots at t = 0, 1/k, ..., 1");
  pl->add_option("--form", cfg.form, "minkowski | tree | hull | auto");
  pl->add_option("--out", cfg.out_path, "output SVG path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  for (CLI::App* sub : {hd, scb, sk, vf, pe, pl})
    if (sub->parsed()) cfg.subcommand = sub->get_name();
  return hyperbicomb::dispatch(cfg, std::cout, std::cerr);
}
