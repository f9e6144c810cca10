#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellsurf/monodromy.hpp"
#include "ellsurf/surface_invariants.hpp"

namespace ellsurf {

// Expected results a case file may carry; every field is optional and each
// provided field becomes one pass/fail line in the report.
struct ExpectedResults {
  std::optional<Int> genus_c;
  std::optional<std::string> label;
  std::optional<std::size_t> trivial_action_count;
  std::optional<AbelianInvariants> h1_s;
  std::optional<std::size_t> aut_order;
  std::optional<Certainty> aut_certainty;
};

// A parsed case file: the base-side monodromy, the (optional) elliptic-side
// branch datum, and the optional expected block.
//
// JSON schema:
//   {
//     "group": "Z3xMu3" | {"r": 4, "lattice": [[a, b], [c, d]]},
//     "h": 2,
//     "ab_images": [{"t": [x, y], "k": k}, ...],   // 2h entries
//     "gamma_images": [{"t": [x, y], "k": k}, ...],
//     "mon_e": "preset" | [{"t": [x, y], "k": k}, ...],   // optional
//     "expected": {                                       // optional
//       "genus_C": 10,
//       "label": "I-2",
//       "trivial_action_count": 9,
//       "h1_S": {"rank": 4, "torsion": [2, 4]},
//       "aut_z": {"order": 3, "certainty": "exact" | "upper bound"}
//     }
//   }
// The lattice lists two basis vectors (columns); translation parts and
// rotation exponents are reduced canonically, so any integers are accepted.
// "mon_e": "preset" selects the bundled elliptic-side line of a named preset
// group.  Unknown keys anywhere are rejected.
struct CaseFile {
  MonodromyDatum datum;
  std::optional<EllipticBranchDatum> mon_e;
  std::optional<ExpectedResults> expected;
  std::string group_text;  // display name of the group for reports
};

// Parse and structural checks only (field presence, types, shapes); the
// mathematical validation happens when the pipeline runs.  Throws ParseError
// naming the offending field.
CaseFile parse_case_file(const std::string& json_text);

// Reads the file and parses it; ParseError when unreadable.
CaseFile load_case_file(const std::string& path);

}  // namespace ellsurf
