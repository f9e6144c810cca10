#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ellsurf/monodromy.hpp"
#include "ellsurf/surface_invariants.hpp"

using namespace ellsurf;

namespace {

template <typename Fn>
ErrorCode error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error to be thrown");
  return ErrorCode::InvalidParams;
}

// Named elements of a preset group, resolved once per test block.
struct Ctx {
  EllipticGroupSpec spec;
  EllipticGroup g;
  std::size_t one;

  explicit Ctx(const std::string& preset)
      : spec(group_preset_spec(preset)), g(spec), one(g.identity()) {}

  std::size_t rot(long k) const { return g.element({Int(0), Int(0)}, k); }
  std::size_t tr(long x, long y) const {
    return g.element({Int(x), Int(y)}, 0);
  }
};

MonodromyDatum datum(const Ctx& c, std::size_t h, std::vector<std::size_t> ab,
                     std::vector<std::size_t> gam) {
  MonodromyDatum d;
  d.group = c.spec;
  d.h = h;
  d.ab_images = std::move(ab);
  d.gamma_images = std::move(gam);
  for (std::size_t x : d.gamma_images)
    d.local_orders.emplace_back(c.g.element_order(x));
  return d;
}

std::vector<Int> orders_list(const std::vector<long>& v) {
  return std::vector<Int>(v.begin(), v.end());
}

AbelianInvariants free_part(long rank) {
  return AbelianInvariants{static_cast<std::size_t>(rank), {}};
}

AbelianInvariants with_torsion(long rank, const std::vector<long>& t) {
  AbelianInvariants a;
  a.free_rank = static_cast<std::size_t>(rank);
  a.torsion = orders_list(t);
  return a;
}

const CatalogEntry& find_row(const std::vector<CatalogEntry>& list,
                             const std::string& key,
                             const std::string& row_label) {
  for (const CatalogEntry& e : list)
    if (e.group_key == key && e.row_label == row_label) return e;
  FAIL("catalog row not found: ", key, " ", row_label);
  return list.front();
}

mpq_class q(long num, long den) { return mpq_class(num, den); }

}  // namespace

TEST_CASE("orbifold homology matches hand computations") {
  // Genus-h surface group with no branching: Z^{2h}.
  CHECK(h1_orb(2, {}) == free_part(4));
  CHECK(h1_orb(0, {}) == free_part(0));

  // One branch point: the single torsion generator is killed by the sum
  // relation, leaving Z^2 untouched.
  CHECK(h1_orb(1, orders_list({2})) == free_part(2));
  CHECK(h1_orb(1, orders_list({5})) == free_part(2));
  // An order of 1 contributes nothing.
  CHECK(h1_orb(1, orders_list({1})) == free_part(2));

  // (Z/2 + Z/2 + Z/3 + Z/3) / <(1,1,1,1)>: the diagonal has order 6, so the
  // quotient is abelian of order 6, hence cyclic.
  CHECK(h1_orb(0, orders_list({2, 2, 3, 3})) == with_torsion(0, {6}));
  // (Z/3)^3 modulo the diagonal.
  CHECK(h1_orb(0, orders_list({3, 3, 3})) == with_torsion(0, {3, 3}));

  CHECK(error_code_of([] { h1_orb(0, orders_list({2, 0, 2})); }) ==
        ErrorCode::InvalidParams);
  CHECK(error_code_of([] { h1_orb(1, orders_list({-3})); }) ==
        ErrorCode::InvalidParams);
}

TEST_CASE("orbifold homology agrees with the presentation route") {
  // The matrix form and the abelianized orbifold presentation must present
  // the same group.
  const std::vector<std::pair<std::size_t, std::vector<long>>> shapes = {
      {0, {3, 3, 3}}, {0, {2, 2, 3, 3}}, {1, {2, 2}},
      {1, {3, 3}},    {2, {}},           {2, {2, 2, 4}},
  };
  for (const auto& [h, orders] : shapes) {
    Presentation p = orbifold_presentation(h, orders_list(orders));
    CHECK(abelianization(p).invariants == h1_orb(h, orders_list(orders)));
  }
}

TEST_CASE("coinvariant space of the order-4 bielliptic-type cover") {
  // G = Z/2 x mu_2 acting on a genus-3 curve: base of genus 1 with two
  // branch points of order 2.
  Ctx c("Z2xMu2");
  const std::size_t e = c.rot(1), t = c.tr(1, 0);
  MonodromyDatum d = datum(c, 1, {e, c.one}, {t, t});
  REQUIRE(genus_C(d) == 3);

  CoinvariantSpace cs(d);
  CHECK(cs.group().order() == 4);

  // H_1(C,Z) = Z^6, and the G-coinvariants are Z^2 + Z/2.
  CHECK(cs.curve_h1() == free_part(6));
  CHECK(cs.invariants() == with_torsion(2, {2}));

  CHECK(cs.basis().size() == cs.relations().cols());
  CHECK(cs.relator_row_count() > 0);
  CHECK(cs.relator_row_count() < cs.relations().rows());

  // Quotienting by the curve relators alone recovers H_1(C,Z).
  const IntMatrix& R = cs.relations();
  const std::size_t n = R.cols();
  IntMatrix curve_rows(0, n), conj_rows(0, n);
  for (std::size_t i = 0; i < R.rows(); ++i) {
    if (i < cs.relator_row_count())
      curve_rows.append_row(R.row(i));
    else
      conj_rows.append_row(R.row(i));
  }
  CHECK(abelian_invariants(n, curve_rows) == cs.curve_h1());

  // Two-stage quotient: first H_1(C,Z) in Smith coordinates, then the
  // conjugation rows mapped into those coordinates.  The result must match
  // the one-stage computation.
  SnfDecomposition s = smith_normal_form(curve_rows);
  std::vector<Int> diag(n, Int(0));
  for (std::size_t j = 0; j < std::min(curve_rows.rows(), n); ++j)
    diag[j] = s.D.at(j, j);
  IntMatrix stage2(0, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (diag[j] == 0) continue;
    std::vector<Int> row(n, Int(0));
    row[j] = diag[j];
    stage2.append_row(row);
  }
  for (std::size_t i = 0; i < conj_rows.rows(); ++i)
    stage2.append_row(vec_mat(conj_rows.row(i), s.V));
  CHECK(abelian_invariants(n, stage2) == cs.invariants());

  // Membership in the full relation lattice looks the same from both sides.
  QuotientChart one_stage(n, R);
  QuotientChart second(n, stage2);
  CHECK(one_stage.invariants() == cs.invariants());
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Int> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = Int(coef(rng));
    CHECK(one_stage.is_zero(v) == second.is_zero(vec_mat(v, s.V)));
  }
}

TEST_CASE("coinvariant words: lifts, relators and the action criterion") {
  Ctx c("Z2xMu2");
  const std::size_t e = c.rot(1), t = c.tr(1, 0);
  MonodromyDatum d = datum(c, 1, {e, c.one}, {t, t});
  CoinvariantSpace cs(d);

  // lift_word(x) evaluates to x under the monodromy map.
  const std::vector<std::size_t> images = {e, c.one, t, t};
  for (std::size_t x = 0; x < c.g.order(); ++x)
    CHECK(c.g.eval_word(images, cs.lift_word(x)) == x);

  // Orbifold relators die already in H_1(C,Z): the order relation of the
  // first branch generator (generator 3) and the long surface relator.
  CHECK(cs.is_zero({3, 3}));
  CHECK(cs.is_zero({1, 2, -1, -2, 3, 4}));

  // Coordinates have one entry per basis element and reject words that do
  // not land in the kernel (generator 1 maps to the rotation e).
  CHECK(cs.quotient_coordinates({3, 3}).size() == cs.basis().size());
  CHECK_NOTHROW(cs.quotient_coordinates(commutator_word({1}, {3})));
  CHECK(error_code_of([&] { cs.quotient_coordinates({1}); }) ==
        ErrorCode::NotInSubgroup);

  // The rotation does NOT act trivially on the coinvariants here: the
  // commutator of its lift with a lift of t is nonzero, so the criterion
  // subgroup is trivial.
  CHECK(!cs.is_zero(commutator_word(cs.lift_word(e), cs.lift_word(t))));
  CHECK(trivial_action_subgroup(d) ==
        std::vector<std::size_t>{c.g.identity()});

  // Invalid data are rejected before any enumeration starts.
  MonodromyDatum bad = datum(c, 1, {e, t}, {});
  CHECK(error_code_of([&] { CoinvariantSpace cs2(bad); }) ==
        ErrorCode::GenusTooSmall);
}

TEST_CASE("trivial-action subgroup on tabulated cases") {
  const std::vector<CatalogEntry> l1 = catalog_list1();
  const std::vector<CatalogEntry> l2 = catalog_list2();

  // Order-9 cover with nontrivial commutator pairing: only the identity
  // acts trivially.
  {
    const CatalogEntry& row = find_row(l1, "Z3xMu3", "I-1");
    Ctx c("Z3xMu3");
    CoinvariantSpace cs(row.datum);
    CHECK(!cs.is_zero(
        commutator_word(cs.lift_word(c.rot(1)), cs.lift_word(c.tr(0, 1)))));
    CHECK(trivial_action_subgroup(row.datum).size() == 1);
  }

  // Genus-2 base, trivial commutator pairing: all of G acts trivially.
  {
    const CatalogEntry& row = find_row(l1, "Z3xMu3", "I-2");
    std::vector<std::size_t> k = trivial_action_subgroup(row.datum);
    CHECK(k.size() == 9);
  }

  // Z/2 x mu_4: the square of the rotation survives.
  {
    const CatalogEntry& row = find_row(l1, "Z2xMu4", "I-1");
    Ctx c("Z2xMu4");
    std::vector<std::size_t> k = trivial_action_subgroup(row.datum);
    CHECK(k.size() == 2);
    CHECK(std::find(k.begin(), k.end(), c.rot(2)) != k.end());
  }

  // Spot-check stored counts across both tables.
  for (const char* label : {"II-2", "II-3"}) {
    const CatalogEntry& row = find_row(l1, "Z2xMu4", label);
    CHECK(trivial_action_subgroup(row.datum).size() ==
          row.expected.trivial_action_count);
  }
  CHECK(trivial_action_subgroup(find_row(l1, "Z22xMu2", "I-1").datum).size() ==
        1);
  CHECK(trivial_action_subgroup(find_row(l1, "Z2xMu2", "I-2").datum).size() ==
        4);
  CHECK(trivial_action_subgroup(find_row(l2, "Sporadic16", "VI*").datum)
            .size() == 2);
  CHECK(trivial_action_subgroup(find_row(l2, "Sporadic16", "VII").datum)
            .size() == 1);

  // The verdict does not depend on the enumeration order.
  {
    const CatalogEntry& row = find_row(l1, "Z2xMu4", "I-1");
    SchreierOptions opt;
    opt.generator_order = {3, 2, 1, 0};
    CHECK(trivial_action_subgroup(row.datum, opt) ==
          trivial_action_subgroup(row.datum));
  }
}

TEST_CASE("elliptic-side covers all have H_1 = Z^2") {
  std::vector<CatalogEntry> rows = catalog_list1();
  for (CatalogEntry& e : catalog_list2()) rows.push_back(std::move(e));
  std::vector<std::string> seen;
  for (const CatalogEntry& e : rows) {
    if (std::find(seen.begin(), seen.end(), e.group_key) != seen.end())
      continue;
    seen.push_back(e.group_key);
    CHECK(elliptic_cover_h1(e.mon_e) == free_part(2));
  }
  CHECK(seen.size() == 5);
}

TEST_CASE("homology of the quotient surface") {
  const std::vector<CatalogEntry> l1 = catalog_list1();

  // Genus-1 base over Z/2 x mu_2: H_1(S,Z) = Z^2 + Z/2 + Z/4.
  {
    const CatalogEntry& row = find_row(l1, "Z2xMu2", "I-1");
    CHECK(h1_S(row.datum, row.mon_e) == with_torsion(2, {2, 4}));
  }
  // Genus-1 base over Z/2 x mu_4: H_1(S,Z) = Z^2 + (Z/2)^2.
  {
    const CatalogEntry& row = find_row(l1, "Z2xMu4", "I-1");
    CHECK(h1_S(row.datum, row.mon_e) == with_torsion(2, {2, 2}));

    // Enumeration order of the product presentation does not matter: the
    // base side has 4 generators and the elliptic side 3.
    SchreierOptions opt;
    opt.generator_order = {6, 5, 4, 3, 2, 1, 0};
    CHECK(h1_S(row.datum, row.mon_e, opt) == with_torsion(2, {2, 2}));
  }
  // Genus-2 bases: free rank is always 2h = 4.
  {
    const CatalogEntry& row = find_row(l1, "Z3xMu3", "I-2");
    CHECK(h1_S(row.datum, row.mon_e) == free_part(4));
  }
  {
    const CatalogEntry& row = find_row(l1, "Z2xMu4", "II-2");
    CHECK(h1_S(row.datum, row.mon_e) == with_torsion(4, {2}));
  }

  // The two data must name the same group.
  {
    const CatalogEntry& a = find_row(l1, "Z2xMu2", "I-1");
    const CatalogEntry& b = find_row(l1, "Z3xMu3", "I-1");
    CHECK(error_code_of([&] { h1_S(a.datum, b.mon_e); }) ==
          ErrorCode::GroupMismatch);
    CHECK(error_code_of([&] { pi1_S_presentation(a.datum, b.mon_e); }) ==
          ErrorCode::GroupMismatch);
  }
}

TEST_CASE("automorphism report: exactness rules and upper bounds") {
  const std::vector<CatalogEntry> l1 = catalog_list1();
  const std::vector<CatalogEntry> l2 = catalog_list2();

  auto trail_mentions = [](const AutZReport& r, const std::string& needle) {
    for (const std::string& line : r.rule_trail)
      if (line.find(needle) != std::string::npos) return true;
    return false;
  };

  // Genus-1 base, K = <e^2> of order 2, t generates the translations:
  // exact answer Z/2.
  {
    const CatalogEntry& row = find_row(l1, "Z2xMu4", "I-1");
    AutZReport r = aut_z_report(row.datum, row.mon_e);
    CHECK(r.order() == 2);
    CHECK(r.certainty == Certainty::Exact);
    CHECK(r.trivial_subgroup.size() == 2);
    CHECK(r.trivial_subgroup_type == orders_list({2}));
    CHECK(r.candidate_type == orders_list({2}));
    CHECK(trail_mentions(r, "generates the (cyclic) translation subgroup"));
    REQUIRE(r.h1_s.has_value());
    CHECK(*r.h1_s == with_torsion(2, {2, 2}));
  }

  // Genus-2 base, K = G of order 9, candidates = translations, H_1(S,Z)
  // torsion-free: exact answer Z/3.
  {
    const CatalogEntry& row = find_row(l1, "Z3xMu3", "I-2");
    AutZReport r = aut_z_report(row.datum, row.mon_e);
    CHECK(r.order() == 3);
    CHECK(r.certainty == Certainty::Exact);
    CHECK(r.trivial_subgroup.size() == 9);
    CHECK(r.candidate_type == orders_list({3}));
    CHECK(trail_mentions(r, "torsion-free"));
    for (std::size_t id : r.candidates) {
      Ctx c("Z3xMu3");
      CHECK(c.g.is_translation(id));
    }
    REQUIRE(r.h1_s.has_value());
    CHECK(*r.h1_s == free_part(4));
  }

  // Genus-2 base with torsion in H_1(S,Z): only an upper bound.
  {
    const CatalogEntry& row = find_row(l1, "Z2xMu2", "I-2");
    AutZReport r = aut_z_report(row.datum, row.mon_e);
    CHECK(r.order() == 2);
    CHECK(r.certainty == Certainty::UpperBound);
    CHECK(r.trivial_subgroup.size() == 4);
    CHECK(trail_mentions(r, "upper bound"));
    REQUIRE(r.h1_s.has_value());
    CHECK(*r.h1_s == with_torsion(4, {2}));
  }

  // Trivial criterion subgroup: exact answer 1, no surface homology run.
  {
    const CatalogEntry& row = find_row(l1, "Z2xMu2", "I-1");
    AutZReport r = aut_z_report(row.datum, row.mon_e);
    CHECK(r.order() == 1);
    CHECK(r.certainty == Certainty::Exact);
    CHECK(r.trivial_subgroup_type.empty());
    CHECK(trail_mentions(r, "trivial"));
    CHECK(!r.h1_s.has_value());
  }

  // Nonabelian case with K of order 2: the candidates must be translations,
  // so the answer collapses to 1 exactly, with torsion-free H_1(S,Z).
  {
    const CatalogEntry& row = find_row(l2, "Sporadic16", "VI*");
    AutZReport r = aut_z_report(row.datum, row.mon_e);
    CHECK(r.order() == 1);
    CHECK(r.certainty == Certainty::Exact);
    CHECK(r.trivial_subgroup.size() == 2);
    REQUIRE(r.h1_s.has_value());
    CHECK(*r.h1_s == free_part(4));
  }

  // The report is reproducible under permuted base-side enumeration.
  {
    const CatalogEntry& row = find_row(l1, "Z2xMu4", "I-1");
    SchreierOptions opt;
    opt.generator_order = {3, 2, 1, 0};
    AutZReport a = aut_z_report(row.datum, row.mon_e);
    AutZReport b = aut_z_report(row.datum, row.mon_e, opt);
    CHECK(a.trivial_subgroup == b.trivial_subgroup);
    CHECK(a.candidates == b.candidates);
    CHECK(a.certainty == b.certainty);
    CHECK(a.rule_trail == b.rule_trail);
    CHECK(a.h1_s == b.h1_s);
  }

  CHECK(to_string(Certainty::Exact) == "exact");
  CHECK(to_string(Certainty::UpperBound) == "upper bound");
}

TEST_CASE("translation-only surfaces: homology from fractional data") {
  const IntMatrix I2 = IntMatrix::identity(2);

  // Genus-0 base, four branch points with translations of orders 2,2,m,m:
  // H_1(S,Z) is free of rank 2.
  for (long m : {3L, 5L, 7L}) {
    PseudoEllipticDatum p;
    p.h = 0;
    p.lattice = I2;
    p.x = {{q(1, 2), q(0, 1)},
           {q(1, 2), q(0, 1)},
           {q(0, 1), q(1, m)},
           {q(-1, 1), q(-1, m)}};
    p.orders = orders_list({2, 2, m, m});
    CHECK(pseudo_elliptic_h1(p) == free_part(2));
  }

  // No branch points over a genus-2 base: Z^{2h} + Lambda.
  {
    PseudoEllipticDatum p;
    p.h = 2;
    p.lattice = I2;
    CHECK(pseudo_elliptic_h1(p) == free_part(6));
  }

  // Genus-1 base with a cancelling pair of half-periods.
  {
    PseudoEllipticDatum p;
    p.h = 1;
    p.lattice = I2;
    p.x = {{q(1, 2), q(0, 1)}, {q(-1, 2), q(0, 1)}};
    p.orders = orders_list({2, 2});
    CHECK(pseudo_elliptic_h1(p) == free_part(4));
  }

  // A coarser lattice changes the orders: (1/2, 0) has order 4 modulo
  // span{(2,0),(0,1)}.
  {
    PseudoEllipticDatum p;
    p.h = 0;
    p.lattice = IntMatrix::identity(2);
    p.lattice.at(0, 0) = 2;
    p.x = {{q(1, 2), q(0, 1)}, {q(-1, 2), q(0, 1)}};
    p.orders = orders_list({4, 4});
    CHECK(pseudo_elliptic_h1(p) == free_part(2));
  }
}

TEST_CASE("translation-only surfaces: inconsistent data are rejected") {
  const IntMatrix I2 = IntMatrix::identity(2);
  auto make = [&](std::vector<std::array<mpq_class, 2>> x,
                  std::vector<long> orders) {
    PseudoEllipticDatum p;
    p.h = 1;
    p.lattice = I2;
    p.x = std::move(x);
    p.orders = orders_list(orders);
    return p;
  };

  // Two half-periods that do not cancel: the translations must sum to zero
  // exactly, which is impossible for a genus-1 base with these orders.
  CHECK(error_code_of([&] {
          pseudo_elliptic_h1(
              make({{q(1, 2), q(0, 1)}, {q(1, 2), q(0, 1)}}, {2, 2}));
        }) == ErrorCode::InconsistentFractions);

  // order * x must land in the lattice.
  CHECK(error_code_of([&] {
          pseudo_elliptic_h1(
              make({{q(1, 3), q(0, 1)}, {q(-1, 3), q(0, 1)}}, {2, 2}));
        }) == ErrorCode::InconsistentFractions);

  // The recorded order must be minimal: (1/2, 0) has order 2, not 4.
  CHECK(error_code_of([&] {
          pseudo_elliptic_h1(
              make({{q(1, 2), q(0, 1)}, {q(-1, 2), q(0, 1)}}, {4, 4}));
        }) == ErrorCode::InconsistentFractions);

  // Shape errors.
  CHECK(error_code_of([&] {
          pseudo_elliptic_h1(make({{q(1, 2), q(0, 1)}}, {2, 2}));
        }) == ErrorCode::InvalidParams);
  {
    PseudoEllipticDatum p;
    p.h = 1;
    p.lattice = IntMatrix(2, 2);  // zero matrix
    CHECK(error_code_of([&] { pseudo_elliptic_h1(p); }) ==
          ErrorCode::DegenerateLattice);
  }
  {
    PseudoEllipticDatum p;
    p.h = 1;
    p.lattice = IntMatrix(2, 3);
    CHECK(error_code_of([&] { pseudo_elliptic_h1(p); }) ==
          ErrorCode::InvalidParams);
  }
}

TEST_CASE("detector for the exceptional translation-only shape") {
  auto images = [](std::vector<long> v) { return orders_list(v); };

  // Cyclic of order 2m, m odd: half-period twice plus a pair g, -g with g
  // of order m.
  CHECK(pseudo_elliptic_exception(Int(6), 0, images({3, 3, 2, 4})));
  CHECK(pseudo_elliptic_exception(Int(6), 0, images({3, 2, 3, 4})));
  CHECK(pseudo_elliptic_exception(Int(10), 0, images({5, 5, 2, 8})));
  CHECK(pseudo_elliptic_exception(Int(10), 0, images({5, 5, 4, 6})));
  CHECK(pseudo_elliptic_exception(Int(14), 0, images({7, 7, 2, 12})));

  // Everything else falls outside the exception.
  CHECK(!pseudo_elliptic_exception(Int(6), 1, images({3, 3, 2, 4})));
  CHECK(!pseudo_elliptic_exception(Int(4), 0, images({2, 2, 1, 3})));
  CHECK(!pseudo_elliptic_exception(Int(6), 0, images({3, 3, 1, 5})));
  CHECK(!pseudo_elliptic_exception(Int(6), 0, images({3, 3, 2, 2})));
  CHECK(!pseudo_elliptic_exception(Int(6), 0, images({3, 3, 3, 3})));
  CHECK(!pseudo_elliptic_exception(Int(6), 0, images({3, 3, 2, 4, 2, 4})));
  CHECK(!pseudo_elliptic_exception(Int(12), 0, images({6, 6, 4, 8})));
  CHECK(!pseudo_elliptic_exception(Int(18), 0, images({9, 9, 6, 12})));
  CHECK(!pseudo_elliptic_exception(Int(2), 0, images({1, 1, 0, 0})));
}
