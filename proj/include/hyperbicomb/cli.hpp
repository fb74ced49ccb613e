#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hyperbicomb {

struct RunConfig {
  std::string subcommand;

  std::string space_path;
  std::string a_path;
  std::string b_path;

  double t = 0.5;
  int t_steps = 4;             // plot: snapshots at t = 0, 1/k, ..., 1
  std::string form = "auto";   // sigma-cb / plot: minkowski | tree | hull | auto

  std::string suite = "all";
  std::string family = "l2";
  std::string target = "cb-minkowski";
  bool naive = false;
  int trials = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int t_grid = 33;
  int dirs = 3600;
  std::string report_path;
  std::string out_path = "trace.svg";
  std::vector<std::string> expect_fail;
};

// Exit code 0 on success / all requested suites passing (expected failures declared via
// expect_fail count as passing), 1 on validation or input errors, 2 on an unexpected
// property failure or an unexpected pass of an expect_fail suite. The environment
// variable HYPERBICOMB_SEED overrides the configured seed. All output is deterministic
// given inputs and seed.
int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace hyperbicomb
