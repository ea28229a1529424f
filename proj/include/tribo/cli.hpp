#pragma once

// Command-line front end. run_cli() is the whole program minus process
// plumbing so it can be driven in-process by tests.
//
// Exit codes: 0 success/agreement, 2 input error, 3 verification mismatch.

#include <iosfwd>
#include <string>
#include <vector>

#include "tribo/equation.hpp"
#include "tribo/output.hpp"

namespace tribo {

enum ExitCode : int { kExitOk = 0, kExitInputError = 2, kExitMismatch = 3 };

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One axis of a sweep grid: `steps` evenly spaced exact points from lo to hi
/// (just lo when steps = 1).
struct GridAxis {
  Rational lo;
  Rational hi;
  long steps = 1;

  std::vector<Rational> points() const;
};

/// Parses "lo:hi" or a single value.
GridAxis parse_axis(const std::string& text, long steps);

struct SweepOptions {
  bool convergence = false;
  Rational x_m1 = 1;
  Rational x_0 = 1;
  double tol = 1e-8;
  long n_max = 400;
  unsigned threads = 0;  // 0 = hardware concurrency
  Admissibility mode = Admissibility::Strict;
};

/// Fields reported for one parameter point by both `stability` and `sweep`.
Row stability_fields(const EquationParams& eq);

/// Rows in alpha-major, then beta, then gamma order, independent of threads.
/// Per-point failures are recorded in an "error" field.
std::vector<Row> sweep_rows(const GridAxis& alpha, const GridAxis& beta, const GridAxis& gamma,
                            const SweepOptions& options);

}  // namespace tribo
