#ifndef BEZSOLVE_PIPELINE_HPP
#define BEZSOLVE_PIPELINE_HPP

#include <iosfwd>
#include <string>

namespace bezsolve {

/// End-to-end driver shared by the CLI and the tests.
struct RunConfig {
  std::string input;        // system file path
  std::string out_dir;      // artifacts land here when non-empty
  std::string stage = "all";  // bezout | rank | reduce | companions | roots | all
  double tau = -1.0;          // <= 0 means size * eps
  unsigned seed = 1;
  bool use_blocks = false;
  bool oracle = false;  // cross-check the Fourier family symbolically
};

/// Exit codes shared with the CLI front end.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kNotZeroDimensional = 3,
  kIllConditioned = 4,
};

/// Runs the pipeline through the configured stage, printing a short
/// deterministic report to `out` and writing stage artifacts under
/// cfg.out_dir. Returns one of the ExitCode values instead of throwing.
int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Builds the family and dumps it (and nothing downstream) as JSON.
int cmd_dump(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace bezsolve

#endif
