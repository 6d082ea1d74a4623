#ifndef SOCLELAB_SUITES_HPP
#define SOCLELAB_SUITES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace soclelab {

/// One failed case of a suite: which case, the seed that reproduces it, a
/// printable description of the sampled input, and what went wrong.
struct SuiteViolation {
  std::string case_id;
  std::uint64_t seed = 0;
  std::string input;
  std::string detail;
};

/// Outcome of one suite run. `cases` counts cases that ran to a verdict;
/// `skipped` counts cases whose preconditions put them out of scope (for
/// example, semiprime-only operations on the triangular control algebras,
/// or involution-dependent operations on algebras without one). `wall_ms`
/// is for human-facing output only and is never serialized to JSON, which
/// keeps reports byte-identical across runs.
struct SuiteReport {
  std::string suite;
  std::string claim;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t skipped = 0;
  std::vector<SuiteViolation> violations;
  std::string verdict;  // "pass" | "fail" | "experimental-observation"
  double wall_ms = 0.0;
};

/// Canonical suite order; `run_all_suites` and the reports follow it.
const std::vector<std::string>& suite_ids();
bool is_suite_id(const std::string& id);

/// Experimental suites report observations and never gate an exit code.
bool suite_is_experimental(const std::string& id);

/// Runs one suite. Every case derives its own seed from (seed, suite id,
/// case index), so results are independent of thread count and of which
/// other suites run.
SuiteReport run_suite(const std::string& id, std::uint64_t seed);

/// All suites in canonical order, distributed across OpenMP threads.
std::vector<SuiteReport> run_all_suites(std::uint64_t seed);

/// Canonical JSON (stable field order, two-space indent, no timing data).
std::string reports_to_json(const std::vector<SuiteReport>& reports);

/// Human-facing summary table plus violation details; includes wall time.
std::string reports_to_markdown(const std::vector<SuiteReport>& reports);

/// True when every non-experimental suite passed.
bool all_passed(const std::vector<SuiteReport>& reports);

}  // namespace soclelab

#endif
