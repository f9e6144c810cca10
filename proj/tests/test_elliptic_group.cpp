#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ellsurf/elliptic_group.hpp"
#include "ellsurf/fp_group.hpp"

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

IntMatrix mat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Int>> conv;
  for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
  return IntMatrix::from_rows(conv);
}

AbelianInvariants torsion_only(const std::vector<long>& t) {
  AbelianInvariants inv;
  inv.torsion.assign(t.begin(), t.end());
  return inv;
}

bool brute_force_abelian(const FiniteGroup& g) {
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b)
      if (!g.commute(a, b)) return false;
  return true;
}

void check_group_axioms(const EllipticGroup& g) {
  REQUIRE(g.order() >= 1);
  for (std::size_t a = 0; a < g.order(); ++a) {
    CHECK(g.mul(a, g.identity()) == a);
    CHECK(g.mul(g.identity(), a) == a);
    CHECK(g.mul(a, g.inv(a)) == g.identity());
    CHECK(g.mul(g.inv(a), a) == g.identity());
    CHECK(g.order() % static_cast<std::size_t>(g.element_order(a)) == 0);
  }
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      for (std::size_t c = 0; c < g.order(); ++c)
        CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
}

}  // namespace

TEST_CASE("cyclotomic actions") {
  for (int r : {2, 3, 4, 6}) {
    CyclotomicAction act = cyclotomic_action(r);
    IntMatrix p = IntMatrix::identity(2);
    for (int s = 1; s < r; ++s) {
      p = act.M * p;
      CHECK(p != IntMatrix::identity(2));
    }
    CHECK(act.M * p == IntMatrix::identity(2));
    CHECK(act.M.det() == 1);
  }
  // Characteristic polynomials x^2 - tr x + det of the r >= 3 actions are
  // the cyclotomic polynomials: traces -1, 0, 1.
  CHECK(cyclotomic_action(3).M.at(0, 0) + cyclotomic_action(3).M.at(1, 1) ==
        -1);
  CHECK(cyclotomic_action(4).M.at(0, 0) + cyclotomic_action(4).M.at(1, 1) ==
        0);
  CHECK(cyclotomic_action(6).M.at(0, 0) + cyclotomic_action(6).M.at(1, 1) ==
        1);
  CHECK(error_code_of([] { cyclotomic_action(5); }) ==
        ErrorCode::InvalidParams);
}

TEST_CASE("spec construction and canonicalization") {
  SUBCASE("ideal lattice of norm 3 lands in Hermite form") {
    EllipticGroupSpec s = make_spec(3, mat({{1, 1}, {-1, 2}}));
    CHECK(s.L == mat({{1, 0}, {2, 3}}));
  }
  SUBCASE("degenerate lattice rejected") {
    CHECK(error_code_of([] { make_spec(3, mat({{1, 2}, {2, 4}})); }) ==
          ErrorCode::DegenerateLattice);
  }
  SUBCASE("non-invariant lattice rejected") {
    CHECK(error_code_of([] { make_spec(4, mat({{2, 0}, {0, 1}})); }) ==
          ErrorCode::LatticeNotInvariant);
    CHECK(error_code_of([] { make_spec(3, mat({{2, 0}, {0, 1}})); }) ==
          ErrorCode::LatticeNotInvariant);
  }
  SUBCASE("scaled lattices always invariant") {
    for (int r : {2, 3, 4, 6})
      CHECK(make_spec(r, mat({{3, 0}, {0, 3}})).L == mat({{3, 0}, {0, 3}}));
  }
}

TEST_CASE("index of a primitive eta") {
  CHECK(index_m(3, Int(1), Int(-1)) == 3);
  CHECK(index_m(4, Int(1), Int(1)) == 2);
  CHECK(index_m(6, Int(1), Int(0)) == 1);
  CHECK(index_m(3, Int(2), Int(-1)) == 7);
  CHECK(error_code_of([] { index_m(2, Int(1), Int(0)); }) ==
        ErrorCode::UnsupportedR);
  CHECK(error_code_of([] { index_m(4, Int(0), Int(0)); }) ==
        ErrorCode::InvalidParams);
}

TEST_CASE("lattices from the (r, m1, m2, eta) normal form") {
  SUBCASE("norm-3 ideal gives T = Z/3") {
    EllipticGroupSpec s = from_lemma43(3, Int(3), Int(1), Int(1), Int(-1));
    CHECK(s.L == mat({{1, 0}, {2, 3}}));
    CHECK(smith_normal_form(s.L).D == mat({{1, 0}, {0, 3}}));
  }
  SUBCASE("norm-2 Gaussian ideal gives T = Z/2") {
    EllipticGroupSpec s = from_lemma43(4, Int(2), Int(1), Int(1), Int(1));
    CHECK(s.L == mat({{1, 0}, {1, 2}}));
  }
  SUBCASE("r=2 diagonal lattice") {
    EllipticGroupSpec s = from_lemma43(2, Int(2), Int(2), Int(0), Int(0));
    CHECK(s.L == mat({{2, 0}, {0, 2}}));
    CHECK(error_code_of([] {
            from_lemma43(2, Int(3), Int(2), Int(0), Int(0));
          }) == ErrorCode::InconsistentIndex);
  }
  SUBCASE("index mismatch rejected") {
    CHECK(error_code_of([] {
            from_lemma43(3, Int(4), Int(1), Int(1), Int(-1));
          }) == ErrorCode::InconsistentIndex);
  }
  SUBCASE("non-primitive eta rejected through the Smith form") {
    CHECK(error_code_of([] {
            from_lemma43(3, Int(4), Int(1), Int(2), Int(2));
          }) == ErrorCode::InconsistentIndex);
  }
}

TEST_CASE("concrete groups and their element arithmetic") {
  SUBCASE("order-9 abelian group") {
    EllipticGroup g = make_group(from_lemma43(3, Int(3), Int(1), Int(1), Int(-1)));
    CHECK(g.order() == 9);
    CHECK(brute_force_abelian(g));
    CHECK(abelian_criterion(g.spec()));
    CHECK(translations(g).size() == 3);
    std::size_t t = g.element({Int(0), Int(1)}, 0);
    CHECK(g.is_translation(t));
    CHECK(g.element_order(t) == 3);
    std::size_t e = g.element({Int(0), Int(0)}, 1);
    CHECK(g.element_order(e) == 3);
    check_group_axioms(g);
  }
  SUBCASE("order-16 group with center of order 4") {
    EllipticGroup g = make_group(make_spec(4, mat({{2, 0}, {0, 2}})));
    CHECK(g.order() == 16);
    CHECK(!brute_force_abelian(g));
    CHECK(!abelian_criterion(g.spec()));
    CHECK(translations(g).size() == 4);
    std::vector<std::size_t> z = center_elements(g);
    std::vector<std::size_t> expect = {
        g.identity(), g.element({Int(1), Int(1)}, 0),
        g.element({Int(0), Int(0)}, 2), g.element({Int(1), Int(1)}, 2)};
    std::sort(expect.begin(), expect.end());
    CHECK(z == expect);
    CHECK(abelian_subgroup_invariants(g, z) == torsion_only({2, 2}));
    check_group_axioms(g);
  }
  SUBCASE("dihedral group from r=2 over Z/4") {
    EllipticGroup g = make_group(make_spec(2, mat({{4, 0}, {0, 1}})));
    CHECK(g.order() == 8);
    CHECK(!brute_force_abelian(g));
    std::vector<std::size_t> z = center_elements(g);
    std::vector<std::size_t> expect = {g.identity(),
                                       g.element({Int(2), Int(0)}, 0)};
    std::sort(expect.begin(), expect.end());
    CHECK(z == expect);
    check_group_axioms(g);
  }
  SUBCASE("Klein group from r=2 over Z/2") {
    EllipticGroup g = make_group(make_spec(2, mat({{2, 0}, {0, 1}})));
    CHECK(g.order() == 4);
    CHECK(brute_force_abelian(g));
    CHECK(abelian_subgroup_invariants(g, center_elements(g)) ==
          torsion_only({2, 2}));
    check_group_axioms(g);
  }
  SUBCASE("element naming") {
    EllipticGroup g = make_group(make_spec(4, mat({{2, 0}, {0, 2}})));
    CHECK(g.element_name(g.identity()) == "1");
    CHECK(g.element_name(g.element({Int(1), Int(0)}, 0)) == "t(1,0)");
    CHECK(g.element_name(g.element({Int(0), Int(0)}, 2)) == "e^2");
    CHECK(g.element_name(g.element({Int(1), Int(1)}, 1)) == "t(1,1)*e");
  }
  SUBCASE("residue reduction is constant on lattice cosets") {
    EllipticGroup g = make_group(from_lemma43(3, Int(3), Int(1), Int(1), Int(-1)));
    const IntMatrix& L = g.spec().L;
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> entry(-30, 30);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Int> v = {Int(entry(rng)), Int(entry(rng))};
      Int w1(entry(rng)), w2(entry(rng));
      std::vector<Int> shifted = {
          v[0] + L.at(0, 0) * w1 + L.at(0, 1) * w2,
          v[1] + L.at(1, 0) * w1 + L.at(1, 1) * w2};
      CHECK(g.reduce_mod_lattice(v) == g.reduce_mod_lattice(shifted));
    }
    CHECK(g.in_lattice({L.at(0, 0), L.at(1, 0)}));
    CHECK(g.in_lattice({L.at(0, 1), L.at(1, 1)}));
    CHECK(!g.in_lattice({Int(0), Int(1)}));
  }
  SUBCASE("translations form a normal subgroup") {
    EllipticGroup g = make_group(make_spec(4, mat({{2, 0}, {0, 2}})));
    std::vector<std::size_t> t = translations(g);
    for (std::size_t x : t) CHECK(g.is_translation(x));
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t x : t)
        CHECK(g.is_translation(g.mul(g.mul(a, x), g.inv(a))));
  }
}

TEST_CASE("abelianized maximal groups") {
  CHECK(gcal_ab(2) == torsion_only({2, 2, 2}));
  CHECK(gcal_ab(3) == torsion_only({3, 3}));
  CHECK(gcal_ab(4) == torsion_only({2, 4}));
  CHECK(gcal_ab(6) == torsion_only({6}));

  SUBCASE("matches the presentation route") {
    for (int r : {2, 3, 4, 6}) {
      CyclotomicAction act = cyclotomic_action(r);
      // <e1, e2, ep | [e1,e2], ep^r, ep ei ep^-1 = M ei>
      Presentation p;
      p.generator_names = {"e1", "e2", "ep"};
      p.relators.push_back(commutator_word({1}, {2}));
      p.relators.push_back(power_word(3, Int(r)));
      for (int i = 0; i < 2; ++i) {
        Word image = concat_words(power_word(1, act.M.at(0, i)),
                                  power_word(2, act.M.at(1, i)));
        p.relators.push_back(
            concat_words(conjugate_word({3}, {i + 1}), inverse_word(image)));
      }
      CHECK(abelianization(p).invariants == gcal_ab(r));
    }
  }
  SUBCASE("coinvariants of the full lattice under r=3") {
    CyclotomicAction act = cyclotomic_action(3);
    IntMatrix rel(2, 2);
    for (std::size_t j = 0; j < 2; ++j) {
      rel.at(j, 0) = act.M.at(0, j) - (j == 0 ? 1 : 0);
      rel.at(j, 1) = act.M.at(1, j) - (j == 1 ? 1 : 0);
    }
    CHECK(abelian_invariants(2, rel) == torsion_only({3}));
  }
}

TEST_CASE("center structure across a sweep of groups") {
  struct Built {
    EllipticGroupSpec spec;
    Int m1, m2, ap, bp;
  };
  std::vector<Built> sweep;
  for (long m1 : {1, 2, 3, 4, 6})
    for (long m2 : {1, 2, 3})
      if (m1 % m2 == 0)
        sweep.push_back({from_lemma43(2, Int(m1), Int(m2), Int(0), Int(0)),
                         Int(m1), Int(m2), Int(0), Int(0)});
  for (int r : {3, 4, 6})
    for (auto [ap, bp] : std::vector<std::pair<long, long>>{
             {1, 0}, {1, 1}, {1, -1}, {2, 1}, {1, 2}, {2, -1}})
      for (long m2 : {1, 2, 3}) {
        Int m = index_m(r, Int(ap), Int(bp));
        Built b{from_lemma43(r, m * m2, Int(m2), Int(ap), Int(bp)), m * m2,
                Int(m2), Int(ap), Int(bp)};
        if (b.spec.L.det() * r <= 200) sweep.push_back(b);
      }
  REQUIRE(sweep.size() >= 20);

  for (const Built& b : sweep) {
    EllipticGroup g = make_group(b.spec);
    int r = b.spec.action.r;
    std::string lattice = b.spec.L.to_string();
    CAPTURE(r);
    CAPTURE(lattice);
    bool abelian = brute_force_abelian(g);
    CHECK(abelian == abelian_criterion(b.spec));

    std::vector<std::size_t> z = center_elements(g);
    std::vector<std::size_t> zt;
    for (std::size_t x : z)
      if (g.is_translation(x)) zt.push_back(x);

    // Z(G) ∩ T is constrained by r: subgroup of (Z/2)^2, Z/3, Z/2, 0.
    if (abelian) {
      CHECK(z.size() == g.order());
    } else {
      switch (r) {
        case 2:
          CHECK(zt.size() <= 4);
          for (std::size_t x : zt)
            CHECK(g.mul(x, x) == g.identity());
          break;
        case 3: CHECK((zt.size() == 1 || zt.size() == 3)); break;
        case 4: CHECK(zt.size() <= 2); break;
        case 6: CHECK(zt.size() == 1); break;
      }
      CHECK(z.size() <= 4);  // |Z(G)| > 4 only for abelian G
      if (r == 3) {
        bool criterion = (b.m2 * (b.ap + b.bp)) % 3 == 0;
        CHECK((z.size() == 3 && zt.size() == 3) == criterion);
        if (!criterion) CHECK(z.size() == 1);
      }
      if (r == 4) {
        bool criterion = b.m1 % 2 == 0;
        CHECK((zt.size() == 2) == criterion);
      }
    }
  }
}
