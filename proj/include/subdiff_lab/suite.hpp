#pragma once

#include <string>

#include "subdiff_lab/instances.hpp"
#include "subdiff_lab/json_io.hpp"

namespace subdiff {

// Seeded verification suite: one entry per claim the library certifies.
// The seed fully determines every generated instance.
struct SuiteConfig {
  std::uint64_t seed = 42;

  int n_link = 200;             // enlargement link instances (half 1D, half 2D, half convex)
  int n_mvi = 500;              // mean-value-inequality tuples
  int n_ekeland = 200;          // perturbed-minimum witnesses
  int n_equivalence = 300;      // optimality-test instances (shared by both tests)
  int n_absorb_convex = 100;    // convex 1D absorbing instances
  int n_absorb_nonconvex = 50;  // nonconvex 1D absorbing instances
  int n_maxmono = 50;           // convex maximal-monotonicity instances
  int n_parser = 100;           // expression round-trips

  double grid_frac = 1.0 / 64;  // grid resolution as a fraction of region width
  double tol = 1e-7;
  std::vector<double> eps_schedule = default_eps_schedule();

  enum class Format { Text, Json, Csv };
  Format format = Format::Text;
};

struct CriterionResult {
  std::string id;      // stable identifier, e.g. "link-nonempty"
  std::string label;   // human-readable claim
  int checked = 0;     // instances examined
  int failed = 0;
  bool pass = false;
  std::string detail;  // first failure or summary statistics
};

std::vector<CriterionResult> run_suite(const SuiteConfig& cfg);

// Full report ("subdiff-lab-report/1"): configuration echo + per-criterion
// results. The timestamp field is the only non-reproducible entry.
ordered_json suite_report_json(const SuiteConfig& cfg, const std::vector<CriterionResult>& results);
std::string suite_report_csv(const std::vector<CriterionResult>& results);
std::string suite_report_text(const std::vector<CriterionResult>& results);

}  // namespace subdiff
