#include "ellsurf/cli.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace ellsurf {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json int_json(const Int& v) {
  // JSON numbers are 64-bit here; anything larger is emitted as a decimal
  // string so no precision is lost.
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

ordered_json abelian_json(const AbelianInvariants& a) {
  ordered_json torsion = ordered_json::array();
  for (const Int& d : a.torsion) torsion.push_back(int_json(d));
  ordered_json out;
  out["rank"] = a.free_rank;
  out["torsion"] = std::move(torsion);
  return out;
}

// Invariant-factor lists (subgroup types) rendered like "Z/3 + Z/3".
std::string factors_text(const std::vector<Int>& factors) {
  if (factors.empty()) return "trivial";
  AbelianInvariants a;
  a.torsion = factors;
  return a.to_string();
}

std::string check_line_text(const CheckLine& c) {
  std::ostringstream os;
  os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": expected "
     << c.expected << ", actual " << c.actual << "\n";
  return os.str();
}

void add_check(Report& r, const std::string& name, std::string expected,
               std::string actual) {
  CheckLine line{name, std::move(expected), std::move(actual), false};
  line.pass = line.expected == line.actual;
  r.all_pass = r.all_pass && line.pass;
  r.checks.push_back(std::move(line));
}

std::string human_report(const Report& r) {
  std::ostringstream os;
  os << "group:         " << r.group_display << "\n";
  os << "monodromy:     " << r.datum_text << "\n";
  os << "elliptic side: " << r.mon_e_text << "\n";
  os << "genus(C):      " << r.genus_c.get_str() << "\n";
  os << "normal form:   " << r.label.to_string() << "\n";
  os << "K (trivial on H_1(C,Z)_G): order " << r.aut.trivial_subgroup.size()
     << ", type " << factors_text(r.aut.trivial_subgroup_type) << "\n";
  os << "candidates:    order " << r.aut.order() << ", type "
     << factors_text(r.aut.candidate_type) << "\n";
  os << "Aut_Z(S):      order " << r.aut.order() << " ("
     << to_string(r.aut.certainty) << ")\n";
  os << "H_1(S,Z):      " << r.h1_s.to_string() << "\n";
  os << "reasoning:\n";
  for (const std::string& line : r.aut.rule_trail) os << "  - " << line << "\n";
  if (!r.checks.empty()) {
    std::size_t passed = 0;
    for (const CheckLine& c : r.checks) passed += c.pass ? 1 : 0;
    os << "checks against expected results (" << passed << "/"
       << r.checks.size() << " pass):\n";
    for (const CheckLine& c : r.checks) os << check_line_text(c);
    os << "result: " << (r.all_pass ? "PASS" : "FAIL") << "\n";
  }
  return os.str();
}

std::string machine_report(const Report& r) {
  ordered_json j;
  j["group"] = r.group_display;
  j["monodromy"] = r.datum_text;
  j["elliptic_side"] = r.mon_e_text;
  j["genus_C"] = int_json(r.genus_c);
  j["label"] = r.label.to_string();
  j["trivial_action_order"] = r.aut.trivial_subgroup.size();
  ordered_json ktype = ordered_json::array();
  for (const Int& d : r.aut.trivial_subgroup_type) ktype.push_back(int_json(d));
  j["trivial_action_type"] = std::move(ktype);
  j["aut_z"] = ordered_json();
  j["aut_z"]["order"] = r.aut.order();
  j["aut_z"]["certainty"] = to_string(r.aut.certainty);
  ordered_json ctype = ordered_json::array();
  for (const Int& d : r.aut.candidate_type) ctype.push_back(int_json(d));
  j["aut_z"]["type"] = std::move(ctype);
  j["h1_S"] = abelian_json(r.h1_s);
  j["rule_trail"] = r.aut.rule_trail;
  ordered_json checks = ordered_json::array();
  for (const CheckLine& c : r.checks) {
    ordered_json line;
    line["name"] = c.name;
    line["expected"] = c.expected;
    line["actual"] = c.actual;
    line["pass"] = c.pass;
    checks.push_back(std::move(line));
  }
  j["checks"] = std::move(checks);
  j["pass"] = r.all_pass;
  return j.dump(2) + "\n";
}

// ----- reproduce -----------------------------------------------------------

struct RowOutcome {
  std::size_t k_order = 0;
  std::size_t aut_order = 0;
  Certainty certainty = Certainty::UpperBound;
  std::optional<AbelianInvariants> h1;
  CaseLabel label;
  std::vector<std::string> mismatches;
};

RowOutcome compute_row(const CatalogEntry& e) {
  RowOutcome o;
  o.label = classify(e.datum);
  AutZReport aut = aut_z_report(e.datum, e.mon_e);
  o.k_order = aut.trivial_subgroup.size();
  o.aut_order = aut.order();
  o.certainty = aut.certainty;
  if (aut.h1_s)
    o.h1 = *aut.h1_s;
  else if (e.expected.torsion)
    o.h1 = h1_S(e.datum, e.mon_e);

  if (!(o.label == e.label))
    o.mismatches.push_back("normal form " + o.label.to_string() +
                           " != " + e.label.to_string());
  if (o.k_order != e.expected.trivial_action_count)
    o.mismatches.push_back(
        "|K| " + std::to_string(o.k_order) +
        " != " + std::to_string(e.expected.trivial_action_count));
  if (o.aut_order != e.expected.aut_z_order)
    o.mismatches.push_back(
        "Aut_Z order " + std::to_string(o.aut_order) +
        " != " + std::to_string(e.expected.aut_z_order));
  if ((o.certainty == Certainty::Exact) != e.expected.aut_z_exact)
    o.mismatches.push_back(std::string("certainty ") + to_string(o.certainty) +
                           (e.expected.aut_z_exact ? " != exact"
                                                   : " != upper bound"));
  if (e.expected.torsion) {
    AbelianInvariants want;
    want.free_rank = 2 * e.datum.h;
    want.torsion = *e.expected.torsion;
    if (!o.h1 || !(*o.h1 == want))
      o.mismatches.push_back(
          "H_1(S,Z) " + (o.h1 ? o.h1->to_string() : std::string("missing")) +
          " != " + want.to_string());
  }
  return o;
}

std::size_t jobs_from_env(std::size_t tasks) {
  std::size_t jobs = std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  if (const char* env = std::getenv("ELLSURF_JOBS")) {
    std::string s(env);
    std::size_t pos = 0;
    unsigned long parsed = 0;
    try {
      parsed = std::stoul(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || parsed == 0)
      fail(ErrorCode::ParseError,
           "ELLSURF_JOBS must be a positive integer, got '" + s + "'");
    jobs = parsed;
  }
  if (jobs > 64) jobs = 64;
  if (tasks > 0 && jobs > tasks) jobs = tasks;
  return jobs;
}

// Index-parallel map with deterministic result slots; f(i) must only touch
// its own slot.
template <typename F>
void parallel_for(std::size_t n, std::size_t jobs, F&& f) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) f(i);
    });
  for (std::thread& t : pool) t.join();
}

std::string reproduce_human(const std::string& table_name,
                            const std::vector<CatalogEntry>& entries,
                            const std::vector<RowOutcome>& rows) {
  std::ostringstream os;
  os << "table " << table_name << " (" << entries.size() << " cases)\n";
  os << std::left << std::setw(16) << "group" << std::setw(10) << "case"
     << std::setw(6) << "|K|" << std::setw(18) << "Aut_Z(S)" << std::setw(20)
     << "H_1(S,Z)" << "status"
     << "\n";
  std::size_t bad = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const CatalogEntry& e = entries[i];
    const RowOutcome& o = rows[i];
    std::ostringstream aut;
    aut << o.aut_order << " (" << to_string(o.certainty) << ")";
    os << std::left << std::setw(16) << e.group_display << std::setw(10)
       << e.row_label << std::setw(6) << o.k_order << std::setw(18)
       << aut.str() << std::setw(20) << (o.h1 ? o.h1->to_string() : "-");
    if (o.mismatches.empty()) {
      os << "ok";
    } else {
      ++bad;
      os << "MISMATCH: ";
      for (std::size_t m = 0; m < o.mismatches.size(); ++m)
        os << (m ? "; " : "") << o.mismatches[m];
    }
    os << "\n";
  }
  if (bad == 0)
    os << "all " << entries.size() << " cases match the bundled tables\n";
  else
    os << bad << " of " << entries.size()
       << " cases disagree with the bundled tables\n";
  return os.str();
}

std::string reproduce_machine(const std::string& table_name,
                              const std::vector<CatalogEntry>& entries,
                              const std::vector<RowOutcome>& rows) {
  ordered_json j;
  j["table"] = table_name;
  ordered_json cases = ordered_json::array();
  bool pass = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const CatalogEntry& e = entries[i];
    const RowOutcome& o = rows[i];
    ordered_json row;
    row["group"] = e.group_display;
    row["case"] = e.row_label;
    row["label"] = o.label.to_string();
    row["trivial_action_order"] = o.k_order;
    row["aut_z"] = ordered_json();
    row["aut_z"]["order"] = o.aut_order;
    row["aut_z"]["certainty"] = to_string(o.certainty);
    row["h1_S"] = o.h1 ? abelian_json(*o.h1) : ordered_json(nullptr);
    ordered_json expected;
    expected["trivial_action_count"] = e.expected.trivial_action_count;
    if (e.expected.torsion) {
      ordered_json t = ordered_json::array();
      for (const Int& d : *e.expected.torsion) t.push_back(int_json(d));
      expected["torsion"] = std::move(t);
    } else {
      expected["torsion"] = nullptr;
    }
    expected["aut_z_order"] = e.expected.aut_z_order;
    expected["aut_z_exact"] = e.expected.aut_z_exact;
    row["expected"] = std::move(expected);
    row["status"] = o.mismatches.empty() ? "ok" : "mismatch";
    row["mismatches"] = o.mismatches;
    pass = pass && o.mismatches.empty();
    cases.push_back(std::move(row));
  }
  j["cases"] = std::move(cases);
  j["pass"] = pass;
  return j.dump(2) + "\n";
}

// ----- catalog printing ----------------------------------------------------

std::string catalog_human(const std::vector<CatalogEntry>& entries, int list) {
  std::ostringstream os;
  os << "bundled table " << (list == 1 ? "a1" : "a2") << " (" << entries.size()
     << " cases)\n";
  for (const CatalogEntry& e : entries) {
    os << std::left << std::setw(16) << e.group_display << std::setw(10)
       << e.row_label << std::setw(10) << e.label.to_string()
       << describe(e.datum) << "\n";
    os << std::setw(36) << "" << "elliptic side: " << describe(e.mon_e)
       << "\n";
    os << std::setw(36) << "" << "expected: |K| = "
       << e.expected.trivial_action_count << ", Aut_Z order "
       << e.expected.aut_z_order << " ("
       << (e.expected.aut_z_exact ? "exact" : "upper bound") << ")";
    if (e.expected.torsion) {
      AbelianInvariants a;
      a.free_rank = 2 * e.datum.h;
      a.torsion = *e.expected.torsion;
      os << ", H_1(S,Z) = " << a.to_string();
    }
    os << "\n";
  }
  return os.str();
}

ordered_json catalog_machine_list(const std::vector<CatalogEntry>& entries,
                                  int list) {
  ordered_json j;
  j["list"] = list;
  ordered_json cases = ordered_json::array();
  for (const CatalogEntry& e : entries) {
    ordered_json row;
    row["group"] = e.group_display;
    row["group_key"] = e.group_key;
    row["case"] = e.row_label;
    row["label"] = e.label.to_string();
    row["monodromy"] = describe(e.datum);
    row["elliptic_side"] = describe(e.mon_e);
    ordered_json expected;
    expected["trivial_action_count"] = e.expected.trivial_action_count;
    if (e.expected.torsion) {
      ordered_json t = ordered_json::array();
      for (const Int& d : *e.expected.torsion) t.push_back(int_json(d));
      expected["torsion"] = std::move(t);
    } else {
      expected["torsion"] = nullptr;
    }
    expected["aut_z_order"] = e.expected.aut_z_order;
    expected["aut_z_exact"] = e.expected.aut_z_exact;
    row["expected"] = std::move(expected);
    cases.push_back(std::move(row));
  }
  j["cases"] = std::move(cases);
  return j;
}

}  // namespace

Report run_analysis(const CaseFile& c) {
  if (!c.mon_e)
    fail(ErrorCode::InvalidParams,
         "the case file has no elliptic-side datum (mon_e)");
  validate(c.datum);
  validate(*c.mon_e);
  if (!(c.datum.group == c.mon_e->group))
    fail(ErrorCode::GroupMismatch,
         "the base-side and elliptic-side data must name the same group");

  Report r;
  r.group_display = c.group_text;
  r.datum_text = describe(c.datum);
  r.mon_e_text = describe(*c.mon_e);
  r.genus_c = genus_C(c.datum);
  r.label = classify(c.datum);
  r.aut = aut_z_report(c.datum, *c.mon_e);
  r.h1_s = r.aut.h1_s ? *r.aut.h1_s : h1_S(c.datum, *c.mon_e);

  if (c.expected) {
    const ExpectedResults& want = *c.expected;
    if (want.genus_c)
      add_check(r, "genus_C", want.genus_c->get_str(), r.genus_c.get_str());
    if (want.label)
      add_check(r, "label", *want.label, r.label.to_string());
    if (want.trivial_action_count)
      add_check(r, "trivial_action_count",
                std::to_string(*want.trivial_action_count),
                std::to_string(r.aut.trivial_subgroup.size()));
    if (want.h1_s)
      add_check(r, "h1_S", want.h1_s->to_string(), r.h1_s.to_string());
    if (want.aut_order)
      add_check(r, "aut_z.order", std::to_string(*want.aut_order),
                std::to_string(r.aut.order()));
    if (want.aut_certainty)
      add_check(r, "aut_z.certainty", to_string(*want.aut_certainty),
                to_string(r.aut.certainty));
  }
  return r;
}

int cmd_analyze(const std::string& path, OutputFormat fmt, std::ostream& out,
                std::ostream& err) {
  try {
    CaseFile c = load_case_file(path);
    Report r = run_analysis(c);
    out << (fmt == OutputFormat::Machine ? machine_report(r)
                                         : human_report(r));
    if (!r.all_pass) {
      std::size_t failed = 0;
      for (const CheckLine& line : r.checks) failed += line.pass ? 0 : 1;
      err << "error: " << failed << " of " << r.checks.size()
          << " expected-result check(s) failed\n";
      return 1;
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_reproduce(const std::string& table_key, OutputFormat fmt,
                  std::ostream& out, std::ostream& err) {
  try {
    std::vector<CatalogEntry> entries;
    if (table_key == "a1")
      entries = catalog_list1();
    else if (table_key == "a2")
      entries = catalog_list2();
    else
      fail(ErrorCode::InvalidParams,
           "unknown table '" + table_key + "' (known: a1, a2)");

    std::vector<RowOutcome> rows(entries.size());
    std::vector<std::string> internal_errors(entries.size());
    parallel_for(entries.size(), jobs_from_env(entries.size()),
                 [&](std::size_t i) {
                   try {
                     rows[i] = compute_row(entries[i]);
                   } catch (const Error& e) {
                     rows[i].mismatches.push_back(
                         std::string("computation failed: ") + e.what());
                   } catch (const std::exception& e) {
                     internal_errors[i] = e.what();
                   }
                 });
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (!internal_errors[i].empty()) {
        err << "internal error: case " << entries[i].group_display << " "
            << entries[i].row_label << ": " << internal_errors[i] << "\n";
        return 2;
      }

    out << (fmt == OutputFormat::Machine
                ? reproduce_machine(table_key, entries, rows)
                : reproduce_human(table_key, entries, rows));

    std::vector<std::string> offenders;
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (!rows[i].mismatches.empty())
        offenders.push_back(entries[i].group_display + " " +
                            entries[i].row_label);
    if (!offenders.empty()) {
      std::ostringstream msg;
      msg << offenders.size() << " case(s) disagree:";
      for (const std::string& o : offenders) msg << " " << o << ";";
      Error e(ErrorCode::MismatchAgainstPaper, msg.str());
      err << "error: " << e.what() << "\n";
      return 1;
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_simplify(const std::string& path, std::ostream& out,
                 std::ostream& err) {
  try {
    CaseFile c = load_case_file(path);
    validate(c.datum);
    out << "input:   " << describe(c.datum) << "\n";
    out << "genus(C) = " << genus_C(c.datum).get_str() << "\n";
    SimplifyResult s = simplify(c.datum);
    if (s.steps.empty()) {
      out << "already in normal form: " << s.label.to_string()
          << " (0 steps)\n";
      return 0;
    }
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
      const SimplifyStep& st = s.steps[i];
      out << "step " << (i + 1) << " " << st.rule << ": " << st.description
          << "\n";
      out << "    -> " << describe(st.result) << "\n";
    }
    out << "minimal: " << describe(s.minimal) << "\n";
    out << "genus(C) = " << genus_C(s.minimal).get_str() << "\n";
    out << "normal form: " << s.label.to_string() << "\n";
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_catalog(int which_list, OutputFormat fmt, std::ostream& out,
                std::ostream& err) {
  try {
    if (which_list != 0 && which_list != 1 && which_list != 2)
      fail(ErrorCode::InvalidParams, "--list must be 1 or 2");
    if (fmt == OutputFormat::Machine) {
      ordered_json j = ordered_json::array();
      if (which_list == 0 || which_list == 1)
        j.push_back(catalog_machine_list(catalog_list1(), 1));
      if (which_list == 0 || which_list == 2)
        j.push_back(catalog_machine_list(catalog_list2(), 2));
      out << j.dump(2) << "\n";
    } else {
      if (which_list == 0 || which_list == 1)
        out << catalog_human(catalog_list1(), 1);
      if (which_list == 0 || which_list == 2) {
        if (which_list == 0) out << "\n";
        out << catalog_human(catalog_list2(), 2);
      }
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ellsurf
