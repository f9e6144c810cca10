#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ellsurf/case_file.hpp"
#include "ellsurf/surface_invariants.hpp"

namespace ellsurf {

enum class OutputFormat { Human, Machine };

// One pass/fail line of a report's comparison against the expected block.
struct CheckLine {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = true;
};

// Everything cmd_analyze prints: input echo, computed invariants, and the
// comparison lines.  Deterministic given the case file.
struct Report {
  std::string group_display;
  std::string datum_text;
  std::string mon_e_text;
  Int genus_c;
  CaseLabel label;
  AutZReport aut;
  AbelianInvariants h1_s;
  std::vector<CheckLine> checks;
  bool all_pass = true;
};

// Runs the full pipeline on a parsed case file (requires the elliptic-side
// datum).  Throws on validation failures.
Report run_analysis(const CaseFile& c);

// Subcommand bodies.  Each writes to the given streams and returns the exit
// code: 0 success, 1 parse/validation/mismatch error, 2 internal error.
int cmd_analyze(const std::string& path, OutputFormat fmt, std::ostream& out,
                std::ostream& err);
// table_key is "a1" (the 20 abelian cases) or "a2" (the 11 sporadic cases);
// recomputes every case and compares with the bundled expected values,
// failing with MismatchAgainstPaper when any row disagrees.  Cases run in a
// parallel map (ELLSURF_JOBS workers; default: hardware concurrency); output
// order is the table order regardless of scheduling.
int cmd_reproduce(const std::string& table_key, OutputFormat fmt,
                  std::ostream& out, std::ostream& err);
int cmd_simplify(const std::string& path, std::ostream& out,
                 std::ostream& err);
// which_list: 1, 2, or 0 for both.  Prints the bundled tables (inputs and
// recorded expected values; no recomputation).
int cmd_catalog(int which_list, OutputFormat fmt, std::ostream& out,
                std::ostream& err);

}  // namespace ellsurf
