#include "ellsurf/case_file.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ellsurf {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(ErrorCode::ParseError, where + ": " + what);
}

void expect_keys(const json& obj, const std::string& where,
                 std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) bad(where, "unknown field '" + key + "'");
  }
}

const json& require(const json& obj, const std::string& where,
                    const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

long long integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where, "must be an integer");
  return v.get<long long>();
}

// mpz_class has no long long constructor; go through a decimal string so the
// full 64-bit range survives.
Int to_int(long long v) { return Int(std::to_string(v)); }

std::size_t count(const json& v, const std::string& where) {
  long long n = integer(v, where);
  if (n < 0) bad(where, "must be nonnegative");
  return static_cast<std::size_t>(n);
}

// {"t": [x, y], "k": k} -> canonical element id.
std::size_t element(const json& v, const EllipticGroup& g,
                    const std::string& where) {
  if (!v.is_object()) bad(where, "must be an object {\"t\": [x, y], \"k\": k}");
  expect_keys(v, where, {"t", "k"});
  const json& t = require(v, where, "t");
  if (!t.is_array() || t.size() != 2)
    bad(where + ".t", "must be an array of two integers");
  Int x = to_int(integer(t[0], where + ".t[0]"));
  Int y = to_int(integer(t[1], where + ".t[1]"));
  long long k = integer(require(v, where, "k"), where + ".k");
  return g.element({x, y}, static_cast<long>(k));
}

std::vector<std::size_t> element_list(const json& v, const EllipticGroup& g,
                                      const std::string& where) {
  if (!v.is_array()) bad(where, "must be an array of elements");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(
        element(v[i], g, where + "[" + std::to_string(i) + "]"));
  return out;
}

EllipticGroupSpec group_spec(const json& v, std::string& display) {
  if (v.is_string()) {
    const std::string name = v.get<std::string>();
    try {
      EllipticGroupSpec spec = group_preset_spec(name);
      display = group_preset_display(name);
      return spec;
    } catch (const Error& e) {
      bad("group", e.what());
    }
  }
  if (!v.is_object())
    bad("group", "must be a preset name or {\"r\": r, \"lattice\": [...]}");
  expect_keys(v, "group", {"r", "lattice"});
  long long r = integer(require(v, "group", "r"), "group.r");
  if (r != static_cast<long long>(static_cast<int>(r)))
    bad("group.r", "out of range");
  const json& lat = require(v, "group", "lattice");
  if (!lat.is_array() || lat.size() != 2)
    bad("group.lattice", "must list two basis vectors [x, y]");
  IntMatrix L(2, 2);
  for (std::size_t col = 0; col < 2; ++col) {
    const json& b = lat[col];
    const std::string where = "group.lattice[" + std::to_string(col) + "]";
    if (!b.is_array() || b.size() != 2)
      bad(where, "must be an array of two integers");
    L.at(0, col) = to_int(integer(b[0], where + "[0]"));
    L.at(1, col) = to_int(integer(b[1], where + "[1]"));
  }
  EllipticGroupSpec spec = make_spec(static_cast<int>(r), L);
  std::ostringstream os;
  os << "r=" << r << ", lattice [(" << spec.L.at(0, 0) << ", "
     << spec.L.at(1, 0) << "), (" << spec.L.at(0, 1) << ", " << spec.L.at(1, 1)
     << ")]";
  display = os.str();
  return spec;
}

std::vector<Int> torsion_vector(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where, "must be an array of integers");
  std::vector<Int> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(to_int(integer(v[i], where + "[" + std::to_string(i) + "]")));
  return out;
}

ExpectedResults expected_block(const json& v) {
  if (!v.is_object()) bad("expected", "must be an object");
  expect_keys(v, "expected",
              {"genus_C", "label", "trivial_action_count", "h1_S", "aut_z"});
  ExpectedResults out;
  if (v.contains("genus_C"))
    out.genus_c = to_int(integer(v["genus_C"], "expected.genus_C"));
  if (v.contains("label")) {
    if (!v["label"].is_string()) bad("expected.label", "must be a string");
    out.label = v["label"].get<std::string>();
  }
  if (v.contains("trivial_action_count"))
    out.trivial_action_count =
        count(v["trivial_action_count"], "expected.trivial_action_count");
  if (v.contains("h1_S")) {
    const json& h = v["h1_S"];
    if (!h.is_object()) bad("expected.h1_S", "must be an object");
    expect_keys(h, "expected.h1_S", {"rank", "torsion"});
    AbelianInvariants inv;
    inv.free_rank = count(require(h, "expected.h1_S", "rank"),
                          "expected.h1_S.rank");
    if (h.contains("torsion"))
      inv.torsion = torsion_vector(h["torsion"], "expected.h1_S.torsion");
    out.h1_s = std::move(inv);
  }
  if (v.contains("aut_z")) {
    const json& a = v["aut_z"];
    if (!a.is_object()) bad("expected.aut_z", "must be an object");
    expect_keys(a, "expected.aut_z", {"order", "certainty"});
    out.aut_order =
        count(require(a, "expected.aut_z", "order"), "expected.aut_z.order");
    if (a.contains("certainty")) {
      if (!a["certainty"].is_string())
        bad("expected.aut_z.certainty", "must be a string");
      const std::string c = a["certainty"].get<std::string>();
      if (c == "exact")
        out.aut_certainty = Certainty::Exact;
      else if (c == "upper bound")
        out.aut_certainty = Certainty::UpperBound;
      else
        bad("expected.aut_z.certainty",
            "must be \"exact\" or \"upper bound\", got \"" + c + "\"");
    }
  }
  return out;
}

}  // namespace

CaseFile parse_case_file(const std::string& json_text) {
  json root = json::parse(json_text, nullptr, false);
  if (root.is_discarded()) bad("case file", "not valid JSON");
  if (!root.is_object()) bad("case file", "top level must be an object");
  expect_keys(root, "case file",
              {"group", "h", "ab_images", "gamma_images", "mon_e", "expected"});

  CaseFile out;
  out.datum.group = group_spec(require(root, "case file", "group"),
                               out.group_text);
  EllipticGroup g(out.datum.group);

  out.datum.h = count(require(root, "case file", "h"), "h");
  out.datum.ab_images =
      element_list(require(root, "case file", "ab_images"), g, "ab_images");
  out.datum.gamma_images = element_list(
      require(root, "case file", "gamma_images"), g, "gamma_images");
  for (std::size_t x : out.datum.gamma_images)
    out.datum.local_orders.emplace_back(g.element_order(x));

  if (root.contains("mon_e")) {
    const json& m = root["mon_e"];
    if (m.is_string()) {
      if (m.get<std::string>() != "preset")
        bad("mon_e", "the only recognized string value is \"preset\"");
      if (!root["group"].is_string())
        bad("mon_e", "\"preset\" requires the group to be a preset name");
      const std::string name = root["group"].get<std::string>();
      bool found = false;
      for (const CatalogEntry& e : catalog_list1())
        if (e.group_key == name && !found) {
          out.mon_e = e.mon_e;
          found = true;
        }
      for (const CatalogEntry& e : catalog_list2())
        if (e.group_key == name && !found) {
          out.mon_e = e.mon_e;
          found = true;
        }
      if (!found) bad("mon_e", "no bundled elliptic side for '" + name + "'");
    } else {
      out.mon_e = EllipticBranchDatum{out.datum.group,
                                      element_list(m, g, "mon_e")};
    }
  }

  if (root.contains("expected")) out.expected = expected_block(root["expected"]);
  return out;
}

CaseFile load_case_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot read case file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_case_file(buf.str());
}

}  // namespace ellsurf
