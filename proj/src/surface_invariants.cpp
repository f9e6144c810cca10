#include "ellsurf/surface_invariants.hpp"

#include <algorithm>
#include <utility>

#include "ellsurf/errors.hpp"
#include "ellsurf/finite_group.hpp"

namespace ellsurf {

namespace {

std::vector<std::size_t> datum_images(const MonodromyDatum& d) {
  std::vector<std::size_t> images = d.ab_images;
  images.insert(images.end(), d.gamma_images.begin(), d.gamma_images.end());
  return images;
}

}  // namespace

AbelianInvariants h1_orb(std::size_t h, const std::vector<Int>& local_orders) {
  for (const Int& m : local_orders)
    if (m < 1)
      fail(ErrorCode::InvalidParams,
           "branching orders must be positive, got " + m.get_str());
  const std::size_t k = local_orders.size();
  const std::size_t n = 2 * h + k;
  IntMatrix rel(0, n);
  if (k > 0) {
    std::vector<Int> sum_row(n, Int(0));
    for (std::size_t i = 0; i < k; ++i) sum_row[2 * h + i] = 1;
    rel.append_row(sum_row);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Int> row(n, Int(0));
      row[2 * h + i] = local_orders[i];
      rel.append_row(row);
    }
  }
  return abelian_invariants(n, rel);
}

CoinvariantSpace::CoinvariantSpace(const MonodromyDatum& d,
                                   SchreierOptions options)
    : group_(d.group) {
  validate(d);
  Presentation orb = orbifold_presentation(d.h, d.local_orders);
  const std::vector<std::size_t> images = datum_images(d);
  FiniteQuotientMap map = check_homomorphism(orb, group_, images);
  schreier_ = std::make_unique<SchreierData>(
      std::move(map), std::vector<std::size_t>{group_.identity()},
      std::move(options));

  const Presentation& sub = schreier_->subgroup_presentation();
  basis_ = sub.generator_names;
  const std::size_t n = sub.generator_count();

  Abelianization curve = abelianization(sub);
  curve_h1_ = curve.invariants;
  const Int expected_rank = 2 * genus_C(d);
  if (!curve_h1_.torsion.empty() ||
      Int(static_cast<unsigned long>(curve_h1_.free_rank)) != expected_rank)
    fail(ErrorCode::InvalidParams,
         "H_1 of the covering curve must be free of rank " +
             expected_rank.get_str() + ", got " + curve_h1_.to_string());

  relations_ = IntMatrix(0, n);
  for (const Word& rel : sub.relators)
    relations_.append_row(exponent_vector(n, rel));
  relator_rows_ = relations_.rows();

  // One conjugation-difference row per (generator image of G) x (Schreier
  // generator); the datum's images generate G, so this kills the whole
  // G-action on H_1(C,Z).
  std::vector<std::size_t> conjugators;
  for (std::size_t img : images) {
    if (img == group_.identity()) continue;
    if (std::find(conjugators.begin(), conjugators.end(), img) !=
        conjugators.end())
      continue;
    conjugators.push_back(img);
  }
  for (std::size_t c : conjugators) {
    const Word lc = lift_word(c);
    for (const Word& u : schreier_->schreier_generator_words()) {
      const Word w = commutator_word(lc, u);
      relations_.append_row(exponent_vector(n, schreier_->rewrite_word(w)));
    }
  }

  chart_ = QuotientChart(n, relations_);
  invariants_ = chart_.invariants();
}

Word CoinvariantSpace::lift_word(std::size_t element_id) const {
  return schreier_->transversal()[schreier_->coset_of(element_id)];
}

std::vector<Int> CoinvariantSpace::quotient_coordinates(const Word& w) const {
  const Word rewritten = schreier_->rewrite_word(w);
  return chart_.coordinates(exponent_vector(basis_.size(), rewritten));
}

bool CoinvariantSpace::is_zero(const Word& w) const {
  const Word rewritten = schreier_->rewrite_word(w);
  return chart_.is_zero(exponent_vector(basis_.size(), rewritten));
}

std::vector<std::size_t> trivial_action_subgroup(
    const MonodromyDatum& d, const SchreierOptions& options) {
  CoinvariantSpace cs(d, options);
  const EllipticGroup& g = cs.group();
  std::vector<std::size_t> accepted{g.identity()};
  for (std::size_t z : center_elements(g)) {
    if (z == g.identity()) continue;
    const Word lz = cs.lift_word(z);
    bool trivial = true;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (!cs.is_zero(commutator_word(lz, cs.lift_word(x)))) {
        trivial = false;
        break;
      }
    }
    if (trivial) accepted.push_back(z);
  }
  return subgroup_closure(g, accepted);
}

AbelianInvariants elliptic_cover_h1(const EllipticBranchDatum& e,
                                    const SchreierOptions& options) {
  validate(e);
  EllipticGroup g(e.group);
  std::vector<Int> e_orders;
  for (std::size_t img : e.gamma_images)
    e_orders.emplace_back(g.element_order(img));
  Presentation orb = orbifold_presentation(0, e_orders);
  FiniteQuotientMap map =
      check_homomorphism(orb, g, std::vector<std::size_t>(e.gamma_images));
  SchreierData sd(std::move(map), {g.identity()}, options);
  return abelianization(sd.subgroup_presentation()).invariants;
}

Presentation pi1_S_presentation(const MonodromyDatum& d,
                                const EllipticBranchDatum& e,
                                const SchreierOptions& options) {
  if (!(d.group == e.group))
    fail(ErrorCode::GroupMismatch,
         "the base-side and elliptic-side data must act through the same "
         "group");
  validate(d);
  validate(e);
  EllipticGroup g(d.group);
  DirectProductGroup gg(g, g);

  Presentation p1 = orbifold_presentation(d.h, d.local_orders);
  std::vector<Int> e_orders;
  for (std::size_t img : e.gamma_images)
    e_orders.emplace_back(g.element_order(img));
  Presentation p2 = orbifold_presentation(0, e_orders);
  Presentation prod = direct_product(p1, p2);

  std::vector<std::size_t> images;
  for (std::size_t img : datum_images(d))
    images.push_back(gg.pair(img, g.identity()));
  for (std::size_t img : e.gamma_images)
    images.push_back(gg.pair(g.identity(), img));

  FiniteQuotientMap map = check_homomorphism(prod, gg, std::move(images));
  SchreierData sd(std::move(map), gg.diagonal_subgroup(), options);
  return sd.subgroup_presentation();
}

AbelianInvariants h1_S(const MonodromyDatum& d, const EllipticBranchDatum& e,
                       const SchreierOptions& options) {
  return abelianization(pi1_S_presentation(d, e, options)).invariants;
}

AutZReport aut_z_report(const MonodromyDatum& d, const EllipticBranchDatum& e,
                        const SchreierOptions& options) {
  if (!(d.group == e.group))
    fail(ErrorCode::GroupMismatch,
         "the base-side and elliptic-side data must act through the same "
         "group");
  EllipticGroup g(d.group);
  AutZReport rep;

  rep.trivial_subgroup = trivial_action_subgroup(d, options);
  rep.trivial_subgroup_type =
      abelian_subgroup_invariants(g, rep.trivial_subgroup).torsion;
  rep.rule_trail.push_back(
      "criterion: the subgroup of Z(G) acting trivially on H_1(C,Z)_G has "
      "order " +
      std::to_string(rep.trivial_subgroup.size()));

  if (d.h >= 2) {
    const std::vector<std::size_t> trans = translations(g);
    for (std::size_t z : rep.trivial_subgroup)
      if (contains(trans, z)) rep.candidates.push_back(z);
    rep.rule_trail.push_back(
        "base genus >= 2: only lifts acting on E by translations remain (" +
        std::to_string(rep.candidates.size()) + " candidate(s))");
  } else {
    rep.candidates = rep.trivial_subgroup;
    rep.rule_trail.push_back(
        "base genus 1: every element of the subgroup remains a candidate");
  }
  rep.candidate_type = abelian_subgroup_invariants(g, rep.candidates).torsion;

  // The fiber-product rewriting runs on its own presentation (with its own
  // generator count), so it always uses the natural enumeration; `options`
  // only steers the base-side coinvariant computation above.
  if (rep.trivial_subgroup.size() > 1) rep.h1_s = h1_S(d, e);

  bool local_generates_t = false;
  for (std::size_t gamma : d.gamma_images)
    if (subgroup_closure(g, {gamma}).size() == g.translation_count()) {
      local_generates_t = true;
      break;
    }

  if (rep.candidates.size() == 1) {
    rep.certainty = Certainty::Exact;
    rep.rule_trail.push_back("exact: the candidate subgroup is trivial");
  } else if (d.h == 1 && local_generates_t) {
    rep.certainty = Certainty::Exact;
    rep.rule_trail.push_back(
        "exact: a local monodromy generates the (cyclic) translation "
        "subgroup, so triviality on H_1(C,Z)_G forces triviality on "
        "H_1(S,Z)");
  } else if (d.h >= 2 && rep.h1_s && rep.h1_s->torsion.empty()) {
    rep.certainty = Certainty::Exact;
    rep.rule_trail.push_back(
        "exact: H_1(S,Z) is torsion-free, so triviality on rational "
        "homology suffices");
  } else {
    rep.certainty = Certainty::UpperBound;
    rep.rule_trail.push_back(
        "upper bound: no recorded exactness rule applies");
  }
  return rep;
}

namespace {

// Coordinates of v in the lattice basis: the exact solution of L c = v.
std::array<mpq_class, 2> lattice_coordinates(const IntMatrix& L,
                                             const Int& det,
                                             const mpq_class& vx,
                                             const mpq_class& vy) {
  mpq_class c0 =
      (mpq_class(L.at(1, 1)) * vx - mpq_class(L.at(0, 1)) * vy) /
      mpq_class(det);
  mpq_class c1 =
      (mpq_class(L.at(0, 0)) * vy - mpq_class(L.at(1, 0)) * vx) /
      mpq_class(det);
  c0.canonicalize();
  c1.canonicalize();
  return {c0, c1};
}

bool in_lattice(const IntMatrix& L, const Int& det, const mpq_class& vx,
                const mpq_class& vy) {
  const auto c = lattice_coordinates(L, det, vx, vy);
  return c[0].get_den() == 1 && c[1].get_den() == 1;
}

std::vector<Int> prime_divisors(Int m) {
  std::vector<Int> primes;
  for (Int p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) primes.push_back(m);
  return primes;
}

}  // namespace

AbelianInvariants pseudo_elliptic_h1(const PseudoEllipticDatum& p) {
  if (p.lattice.rows() != 2 || p.lattice.cols() != 2)
    fail(ErrorCode::InvalidParams, "the lattice must be a 2x2 basis matrix");
  const Int det = p.lattice.det();
  if (det == 0)
    fail(ErrorCode::DegenerateLattice, "the lattice basis is singular");
  if (p.x.size() != p.orders.size())
    fail(ErrorCode::InvalidParams,
         "each fractional translation needs exactly one order (" +
             std::to_string(p.x.size()) + " translations, " +
             std::to_string(p.orders.size()) + " orders)");

  mpq_class sum_x = 0, sum_y = 0;
  for (const auto& v : p.x) {
    sum_x += v[0];
    sum_y += v[1];
  }
  if (sum_x != 0 || sum_y != 0)
    fail(ErrorCode::InconsistentFractions,
         "the fractional translations must sum to zero, got (" +
             sum_x.get_str() + ", " + sum_y.get_str() + ")");

  const std::size_t r = p.x.size();
  std::vector<std::array<Int, 2>> lattice_part(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Int& m = p.orders[i];
    if (m < 1)
      fail(ErrorCode::InvalidParams,
           "orders must be positive, got " + m.get_str());
    const mpq_class mx = mpq_class(m) * p.x[i][0];
    const mpq_class my = mpq_class(m) * p.x[i][1];
    const auto c = lattice_coordinates(p.lattice, det, mx, my);
    if (c[0].get_den() != 1 || c[1].get_den() != 1)
      fail(ErrorCode::InconsistentFractions,
           "translation " + std::to_string(i + 1) +
               " times its order must land in the lattice");
    lattice_part[i] = {Int(c[0].get_num()), Int(c[1].get_num())};
    for (const Int& q : prime_divisors(m)) {
      const Int reduced = m / q;
      if (in_lattice(p.lattice, det, mpq_class(reduced) * p.x[i][0],
                     mpq_class(reduced) * p.x[i][1]))
        fail(ErrorCode::InconsistentFractions,
             "the order of translation " + std::to_string(i + 1) +
                 " is not minimal: " + reduced.get_str() +
                 " times it already lies in the lattice");
    }
  }

  // Generators: 2h from the base, two lattice directions, one per branch
  // point.  Relations: the branch generators sum to zero, and m_i times the
  // i-th branch generator equals the lattice vector m_i x_i.
  const std::size_t n = 2 * p.h + 2 + r;
  IntMatrix rel(0, n);
  std::vector<Int> sum_row(n, Int(0));
  for (std::size_t i = 0; i < r; ++i) sum_row[2 * p.h + 2 + i] = 1;
  rel.append_row(sum_row);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Int> row(n, Int(0));
    row[2 * p.h + 2 + i] = p.orders[i];
    row[2 * p.h] = -lattice_part[i][0];
    row[2 * p.h + 1] = -lattice_part[i][1];
    rel.append_row(row);
  }
  return abelian_invariants(n, rel);
}

bool pseudo_elliptic_exception(const Int& group_order, std::size_t h,
                               const std::vector<Int>& images) {
  if (h != 0 || images.size() != 4) return false;
  const Int& n = group_order;
  if (n < 6 || n % 2 != 0) return false;
  const Int m = n / 2;
  if (m % 2 == 0) return false;  // the cyclic group must have order twice odd

  std::vector<Int> reduced;
  for (const Int& x : images) {
    Int v = floor_mod(x, n);
    if (v == 0) return false;
    reduced.push_back(v);
  }
  std::vector<Int> rest;
  std::size_t half_periods = 0;
  for (const Int& v : reduced) {
    if (v == m)
      ++half_periods;
    else
      rest.push_back(v);
  }
  if (half_periods != 2 || rest.size() != 2) return false;
  if (rest[0] + rest[1] != n) return false;       // the pair g, -g
  return n / gcd(n, rest[0]) == m;                // of odd order m
}

std::string to_string(Certainty c) {
  return c == Certainty::Exact ? "exact" : "upper bound";
}

}  // namespace ellsurf
