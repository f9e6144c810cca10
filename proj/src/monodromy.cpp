#include "ellsurf/monodromy.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace ellsurf {

namespace {

std::string ordinal_gamma(std::size_t j) { return "gamma_" + std::to_string(j + 1); }

bool is_permutation_of(const std::vector<std::size_t>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void check_ids(const EllipticGroup& g, const std::vector<std::size_t>& ids,
               const char* what) {
  for (std::size_t id : ids)
    if (id >= g.order())
      fail(ErrorCode::InvalidParams, std::string(what) + " element id " +
                                         std::to_string(id) +
                                         " is out of range for a group of order " +
                                         std::to_string(g.order()));
}

std::size_t commutator(const EllipticGroup& g, std::size_t a, std::size_t b) {
  return g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
}

std::size_t relator_product(const EllipticGroup& g, const MonodromyDatum& d) {
  std::size_t prod = g.identity();
  for (std::size_t i = 0; i < d.h; ++i)
    prod = g.mul(prod, commutator(g, d.ab_images[2 * i], d.ab_images[2 * i + 1]));
  for (std::size_t x : d.gamma_images) prod = g.mul(prod, x);
  return prod;
}

std::vector<std::size_t> all_images(const MonodromyDatum& d) {
  std::vector<std::size_t> out = d.ab_images;
  out.insert(out.end(), d.gamma_images.begin(), d.gamma_images.end());
  return out;
}

bool pure_primitive_rotation(const EllipticGroup& g, std::size_t p) {
  if (g.is_translation(p)) return false;
  std::vector<Int> tp = g.translation_part(p);
  if (tp[0] != 0 || tp[1] != 0) return false;
  return std::gcd(static_cast<long>(g.rotation_exponent(p)),
                  static_cast<long>(g.r())) == 1;
}

}  // namespace

std::string CaseLabel::to_string() const {
  switch (tag) {
    case CaseTag::AbelianI1: return "I-1";
    case CaseTag::AbelianI2: return "I-2";
    case CaseTag::AbelianI3: return "I-3";
    case CaseTag::AbelianII: return "II";
    case CaseTag::AbelianII1: return "II-1";
    case CaseTag::AbelianII2: return "II-2";
    case CaseTag::AbelianII3: return "II-3";
    case CaseTag::AbelianIII: return "III";
    case CaseTag::SporadicIII: return "III-" + std::to_string(k);
    case CaseTag::SporadicIV: return "IV-" + std::to_string(k);
    case CaseTag::SporadicV: return "V-" + std::to_string(k);
    case CaseTag::SporadicVStar: return "V*-" + std::to_string(k);
    case CaseTag::SporadicVStarStar: return "V**-" + std::to_string(k);
    case CaseTag::SporadicVTripleStar: return "V***-" + std::to_string(k);
    case CaseTag::SporadicVI: return "VI";
    case CaseTag::SporadicVIStar: return "VI*";
    case CaseTag::SporadicVIStarStar: return "VI**";
    case CaseTag::SporadicVII: return "VII";
    case CaseTag::SporadicVIIStar: return "VII*";
    case CaseTag::SporadicVIII: return "VIII";
    case CaseTag::NotNormal: return "not-normal";
  }
  return "not-normal";
}

Int genus_from_orders(const Int& group_order, std::size_t h,
                      const std::vector<Int>& orders) {
  if (group_order < 1)
    fail(ErrorCode::InvalidParams, "group order must be positive");
  Int rhs = group_order * (2 * Int(static_cast<unsigned long>(h)) - 2);
  for (const Int& m : orders) {
    if (m < 2)
      fail(ErrorCode::InvalidParams, "branching orders must be at least 2");
    if (group_order % m != 0)
      fail(ErrorCode::NonIntegralGenus,
           "branching order " + m.get_str() + " does not divide the group order " +
               group_order.get_str());
    rhs += group_order - group_order / m;
  }
  if (rhs % 2 != 0)
    fail(ErrorCode::NonIntegralGenus,
         "Riemann-Hurwitz gives the odd value " + rhs.get_str() + " for 2g-2");
  return rhs / 2 + 1;
}

Int genus_C(const MonodromyDatum& d) {
  EllipticGroup g(d.group);
  return genus_from_orders(Int(static_cast<unsigned long>(g.order())), d.h,
                           d.local_orders);
}

void validate(const MonodromyDatum& d) {
  if (d.ab_images.size() != 2 * d.h)
    fail(ErrorCode::InvalidParams,
         "a genus-" + std::to_string(d.h) + " base needs exactly " +
             std::to_string(2 * d.h) + " handle images, got " +
             std::to_string(d.ab_images.size()));
  if (d.gamma_images.size() != d.local_orders.size())
    fail(ErrorCode::InvalidParams,
         "each branch image needs exactly one recorded order (" +
             std::to_string(d.gamma_images.size()) + " images, " +
             std::to_string(d.local_orders.size()) + " orders)");
  for (const Int& n : d.local_orders)
    if (n < 2)
      fail(ErrorCode::InvalidParams,
           "branching orders must be at least 2, got " + n.get_str());
  EllipticGroup g(d.group);
  check_ids(g, d.ab_images, "handle");
  check_ids(g, d.gamma_images, "branch");

  std::size_t prod = relator_product(g, d);
  if (prod != g.identity())
    fail(ErrorCode::RelatorFails,
         "the product relator evaluates to " + g.element_name(prod) +
             ", not to the identity");

  for (std::size_t j = 0; j < d.k(); ++j) {
    if (!g.is_translation(d.gamma_images[j]))
      fail(ErrorCode::GammaNotTranslation,
           ordinal_gamma(j) + " = " + g.element_name(d.gamma_images[j]) +
               " must act as a translation on E");
    Int actual(g.element_order(d.gamma_images[j]));
    if (actual != d.local_orders[j])
      fail(ErrorCode::GammaWrongOrder,
           ordinal_gamma(j) + " = " + g.element_name(d.gamma_images[j]) +
               " must have order precisely " + d.local_orders[j].get_str() +
               ", but has order " + actual.get_str());
  }

  std::vector<std::size_t> generated = subgroup_closure(g, all_images(d));
  if (generated.size() != g.order())
    fail(ErrorCode::NotSurjective,
         "the images generate a subgroup of order " +
             std::to_string(generated.size()) + " < |G| = " +
             std::to_string(g.order()));

  Int genus = genus_from_orders(Int(static_cast<unsigned long>(g.order())), d.h,
                                d.local_orders);
  if (genus < 2)
    fail(ErrorCode::GenusTooSmall,
         "Riemann-Hurwitz gives genus " + genus.get_str() +
             " for C; a properly elliptic surface needs genus >= 2");
}

void validate(const EllipticBranchDatum& e) {
  EllipticGroup g(e.group);
  check_ids(g, e.gamma_images, "branch");
  std::vector<Int> orders;
  std::size_t prod = g.identity();
  for (std::size_t j = 0; j < e.gamma_images.size(); ++j) {
    if (e.gamma_images[j] == g.identity())
      fail(ErrorCode::InvalidParams,
           ordinal_gamma(j) + " is trivial; branch images must have order >= 2");
    orders.emplace_back(g.element_order(e.gamma_images[j]));
    prod = g.mul(prod, e.gamma_images[j]);
  }
  if (prod != g.identity())
    fail(ErrorCode::RelatorFails,
         "the product of the branch images is " + g.element_name(prod) +
             ", not the identity");
  std::vector<std::size_t> generated = subgroup_closure(g, e.gamma_images);
  if (generated.size() != g.order())
    fail(ErrorCode::NotSurjective,
         "the branch images generate a subgroup of order " +
             std::to_string(generated.size()) + " < |G| = " +
             std::to_string(g.order()));
  Int genus = genus_from_orders(Int(static_cast<unsigned long>(g.order())), 0, orders);
  if (genus != 1)
    fail(ErrorCode::InvalidParams,
         "the covering curve of an elliptic branch datum must have genus 1, got " +
             genus.get_str());
}

MonodromyDatum apply_move(const MonodromyDatum& d, const Move& move) {
  validate(d);
  EllipticGroup g(d.group);
  MonodromyDatum out = d;

  if (const MoveA* m = std::get_if<MoveA>(&move)) {
    if (m->ab_index >= d.ab_images.size())
      fail(ErrorCode::InvalidParams, "move a: handle-generator index out of range");
    if (m->gamma_index >= d.k())
      fail(ErrorCode::InvalidParams, "move a: branch index out of range");
    if (m->exponent != 1 && m->exponent != -1)
      fail(ErrorCode::InvalidParams, "move a: exponent must be +1 or -1");
    std::size_t factor = d.gamma_images[m->gamma_index];
    if (m->exponent == -1) factor = g.inv(factor);
    out.ab_images[m->ab_index] = g.mul(d.ab_images[m->ab_index], factor);
  } else if (const MoveB* m = std::get_if<MoveB>(&move)) {
    if (m->ab_index >= d.ab_images.size())
      fail(ErrorCode::InvalidParams, "move b: handle-generator index out of range");
    if (m->exponent != 1 && m->exponent != -1)
      fail(ErrorCode::InvalidParams, "move b: exponent must be +1 or -1");
    std::size_t factor = d.ab_images[m->ab_index ^ 1u];
    if (m->exponent == -1) factor = g.inv(factor);
    out.ab_images[m->ab_index] = g.mul(d.ab_images[m->ab_index], factor);
  } else if (const MoveC* m = std::get_if<MoveC>(&move)) {
    if (!m->handle_perm.empty()) {
      if (!is_permutation_of(m->handle_perm, d.h))
        fail(ErrorCode::InvalidParams,
             "move c: handle permutation must be a permutation of 0.." +
                 std::to_string(d.h ? d.h - 1 : 0));
      for (std::size_t i = 0; i < d.h; ++i) {
        out.ab_images[2 * i] = d.ab_images[2 * m->handle_perm[i]];
        out.ab_images[2 * i + 1] = d.ab_images[2 * m->handle_perm[i] + 1];
      }
    }
    if (!m->gamma_perm.empty()) {
      if (!is_permutation_of(m->gamma_perm, d.k()))
        fail(ErrorCode::InvalidParams,
             "move c: branch permutation must be a permutation of 0.." +
                 std::to_string(d.k() ? d.k() - 1 : 0));
      for (std::size_t j = 0; j < d.k(); ++j) {
        out.gamma_images[j] = d.gamma_images[m->gamma_perm[j]];
        out.local_orders[j] = d.local_orders[m->gamma_perm[j]];
      }
    }
  } else if (const MoveD* m = std::get_if<MoveD>(&move)) {
    if (d.h < 2 || m->handle_index + 1 >= d.h)
      fail(ErrorCode::InvalidParams,
           "move d: needs two consecutive handles inside genus " +
               std::to_string(d.h));
    const std::size_t i = 2 * m->handle_index;
    const std::size_t a1 = d.ab_images[i], b1 = d.ab_images[i + 1];
    const std::size_t a2 = d.ab_images[i + 2], b2 = d.ab_images[i + 3];
    out.ab_images[i + 1] = g.mul(g.mul(b1, b2), a2);  // b_i -> b_i b_{i+1} a_{i+1}
    out.ab_images[i + 2] = g.mul(a2, g.inv(a1));      // a_{i+1} -> a_{i+1} a_i^{-1}
    out.ab_images[i + 3] = g.mul(b2, g.inv(a1));      // b_{i+1} -> b_{i+1} a_i^{-1}
  }

  try {
    validate(out);
  } catch (const Error& err) {
    fail(ErrorCode::InvalidParams,
         std::string("the move does not preserve validity for this datum: ") +
             err.what());
  }
  return out;
}

namespace {

// Shared context for classification over one datum.
struct ClassifyCtx {
  const EllipticGroup& g;
  const MonodromyDatum& d;
  std::size_t one;

  std::size_t ab(std::size_t i) const { return d.ab_images[i]; }
  bool all_gammas_equal() const {
    for (std::size_t x : d.gamma_images)
      if (x != d.gamma_images[0]) return false;
    return true;
  }
  bool generates_translations(std::size_t x) const {
    return g.is_translation(x) &&
           subgroup_closure(g, {x}).size() == g.translation_count();
  }
};

CaseLabel classify_abelian(const ClassifyCtx& c) {
  const EllipticGroup& g = c.g;
  const MonodromyDatum& d = c.d;
  const std::size_t one = c.one;
  const std::size_t k = d.k();
  const std::size_t t_count = g.translation_count();
  if (d.h > 2) return {};
  if (t_count < 2) return {};  // the tabulated forms presuppose T != 0

  // Isomorphism type of T needed by the individual patterns.
  std::vector<std::size_t> trans = translations(g);
  bool t_klein = t_count == 4;
  bool t_cyclic = false;
  for (std::size_t x : trans) {
    long o = g.element_order(x);
    if (t_klein && o > 2) t_klein = false;
    if (static_cast<std::size_t>(o) == t_count) t_cyclic = true;
  }

  const std::size_t b1 = c.ab(1);
  const bool frame_one =
      d.h == 1 || (c.ab(2) == one && c.ab(3) == one);

  if (frame_one) {
    if (b1 == one && k >= 2 &&
        subgroup_closure(g, {d.gamma_images[0], d.gamma_images[1]}).size() ==
            t_count)
      return {CaseTag::AbelianI1, k};
    if (k == 0 && d.h == 2 && c.generates_translations(b1))
      return {CaseTag::AbelianI2, 0};
    if (g.r() == 2 && t_klein && k >= 2 && b1 != one && c.all_gammas_equal() &&
        d.gamma_images[0] != one && d.gamma_images[0] != b1)
      return {CaseTag::AbelianI3, k};
    return {};
  }

  // h = 2 with (alpha_2, beta_2) != (1, 1).
  const std::size_t a2 = c.ab(2), b2 = c.ab(3);
  if (k == 0 && g.r() == 2 && t_klein) {
    if (b1 != one && a2 != one && a2 != b1 && (b2 == one || b2 == b1))
      return {CaseTag::AbelianII, 0};
    if (b1 == one && a2 != one && b2 != one && b2 != a2)
      return {CaseTag::AbelianII1, 0};
  }
  if (k == 0 && t_cyclic) {
    if (b1 == one && c.generates_translations(a2) && b2 == one)
      return {CaseTag::AbelianII2, 0};
    if (c.generates_translations(b1) && a2 != one && g.is_translation(a2) &&
        b2 == one)
      return {CaseTag::AbelianII3, 0};
  }
  if (k >= 2 && k % 2 == 0 && g.r() == 2 && t_klein && c.all_gammas_equal()) {
    const std::size_t e2 = d.gamma_images[0];
    if (e2 != one && a2 != one && a2 != e2 && b2 == one &&
        (b1 == one || b1 == a2))
      return {CaseTag::AbelianIII, k};
  }
  return {};
}

CaseLabel classify_sporadic(const ClassifyCtx& c) {
  const EllipticGroup& g = c.g;
  const MonodromyDatum& d = c.d;
  const std::size_t one = c.one;
  const std::size_t k = d.k();

  // Only the order-16 semidirect product (Z/2)^2 : mu_4 carries tabulated
  // nonabelian normal forms.
  if (g.r() != 4 || g.translation_count() != 4) return {};
  const std::size_t t = g.element({Int(1), Int(0)}, 0);
  const std::size_t s = g.element({Int(0), Int(1)}, 0);
  const std::size_t ts = g.element({Int(1), Int(1)}, 0);
  auto basic = [&](std::size_t x) { return x == t || x == s; };

  const std::size_t b1 = c.ab(1);
  const bool tail_trivial =
      d.h == 1 || (d.h == 2 && c.ab(2) == one && c.ab(3) == one);

  if (d.h <= 2 && tail_trivial && k >= 1) {
    if (b1 == one && k >= 2) {
      // (III-k): gamma_1, gamma_2 a basis of T, remaining sum = e_1 + e_2.
      if (basic(d.gamma_images[0]) && basic(d.gamma_images[1]) &&
          d.gamma_images[0] != d.gamma_images[1]) {
        std::size_t tail = one;
        for (std::size_t j = 2; j < k; ++j) tail = g.mul(tail, d.gamma_images[j]);
        if (tail == ts) return {CaseTag::SporadicIII, k};
      }
      if (c.all_gammas_equal() && basic(d.gamma_images[0]) && k % 2 == 0)
        return {CaseTag::SporadicIV, k};
    }
    if (basic(b1) && k % 2 == 1 && c.all_gammas_equal() &&
        d.gamma_images[0] == ts)
      return {CaseTag::SporadicV, k};
    return {};
  }

  if (d.h == 2) {
    const std::size_t a2 = c.ab(2), b2 = c.ab(3);
    if (b1 == one && a2 == one && basic(b2) && k >= 2 && k % 2 == 0 &&
        c.all_gammas_equal()) {
      if (basic(d.gamma_images[0]) && d.gamma_images[0] != b2)
        return {CaseTag::SporadicVStar, k};
      if (d.gamma_images[0] == ts) return {CaseTag::SporadicVStarStar, k};
    }
    if (basic(b1) && a2 == one && b2 == b1 && k >= 1 && k % 2 == 1 &&
        c.all_gammas_equal() && d.gamma_images[0] == ts)
      return {CaseTag::SporadicVTripleStar, k};
    if (k == 0) {
      if (b1 == one && basic(a2) && basic(b2) && b2 != a2)
        return {CaseTag::SporadicVI, 0};
      if (b1 == ts && basic(a2) && b2 == one) return {CaseTag::SporadicVIStar, 0};
      if (b1 == ts && basic(a2) && basic(b2) && b2 != a2)
        return {CaseTag::SporadicVIStarStar, 0};
      if (b1 == one && basic(a2) && b2 == one) return {CaseTag::SporadicVIII, 0};
    }
    return {};
  }

  if (d.h == 3 && k == 0 && b1 == one && c.ab(3) == one && c.ab(5) == one) {
    const std::size_t a2 = c.ab(2), a3 = c.ab(4);
    if (a2 == ts && basic(a3)) return {CaseTag::SporadicVII, 0};
    if (basic(a2) && basic(a3) && a3 != a2) return {CaseTag::SporadicVIIStar, 0};
  }
  return {};
}

}  // namespace

CaseLabel classify(const MonodromyDatum& d) {
  validate(d);
  EllipticGroup g(d.group);
  if (d.h < 1 || d.h > 3) return {};
  // Common frame of every tabulated form: alpha_1 is a primitive pure
  // rotation and every other handle image is a translation.
  if (!pure_primitive_rotation(g, d.ab_images[0])) return {};
  for (std::size_t i = 1; i < d.ab_images.size(); ++i)
    if (!g.is_translation(d.ab_images[i])) return {};

  ClassifyCtx ctx{g, d, g.identity()};
  if (abelian_criterion(d.group)) return classify_abelian(ctx);
  return classify_sporadic(ctx);
}

namespace {

// A reduction step is admissible only when its result is again a valid
// monodromy in one of the tabulated normal forms.  This is what keeps the
// reductions inside the catalogued families: a candidate that loses
// surjectivity, drops the covering genus below 2, or lands outside every
// tabulated shape is not a simplification, and the pair (or handle) that
// produced it is left alone.
bool reduces_to_normal_form(const MonodromyDatum& d) {
  try {
    return classify(d).is_normal();
  } catch (const Error&) {
    return false;
  }
}

std::optional<SimplifyStep> try_step_iii(const MonodromyDatum& d,
                                         const EllipticGroup& g) {
  const std::size_t k = d.k();
  if (k < 2) return std::nullopt;
  for (std::size_t j = k; j-- > 1;) {
    for (std::size_t i = j; i-- > 0;) {
      if (g.mul(d.gamma_images[i], d.gamma_images[j]) != g.identity()) continue;
      MonodromyDatum cand = d;
      cand.gamma_images.erase(cand.gamma_images.begin() +
                              static_cast<std::ptrdiff_t>(j));
      cand.local_orders.erase(cand.local_orders.begin() +
                              static_cast<std::ptrdiff_t>(j));
      cand.gamma_images.erase(cand.gamma_images.begin() +
                              static_cast<std::ptrdiff_t>(i));
      cand.local_orders.erase(cand.local_orders.begin() +
                              static_cast<std::ptrdiff_t>(i));
      if (!reduces_to_normal_form(cand)) continue;
      return SimplifyStep{"(iii)",
                          "removed the cancelling branch pair (" +
                              ordinal_gamma(i) + ", " + ordinal_gamma(j) +
                              ") = (" + g.element_name(d.gamma_images[i]) +
                              ", " + g.element_name(d.gamma_images[j]) + ")",
                          cand};
    }
  }
  return std::nullopt;
}

std::optional<SimplifyStep> try_step_ii(const MonodromyDatum& d,
                                        const EllipticGroup& g) {
  const std::size_t k = d.k();
  if (k < 2) return std::nullopt;
  for (std::size_t j = k; j-- > 1;) {
    for (std::size_t i = j; i-- > 0;) {
      std::size_t merged = g.mul(d.gamma_images[i], d.gamma_images[j]);
      if (merged == g.identity()) continue;  // that is step (iii)'s territory
      MonodromyDatum cand = d;
      cand.gamma_images[i] = merged;
      cand.local_orders[i] = Int(g.element_order(merged));
      cand.gamma_images.erase(cand.gamma_images.begin() +
                              static_cast<std::ptrdiff_t>(j));
      cand.local_orders.erase(cand.local_orders.begin() +
                              static_cast<std::ptrdiff_t>(j));
      if (!reduces_to_normal_form(cand)) continue;
      return SimplifyStep{"(ii)",
                          "merged the branch pair (" + ordinal_gamma(i) + ", " +
                              ordinal_gamma(j) + ") into one branch point with image " +
                              g.element_name(merged) + " of order " +
                              cand.local_orders[i].get_str(),
                          cand};
    }
  }
  return std::nullopt;
}

std::optional<SimplifyStep> try_step_i(const MonodromyDatum& d,
                                       const EllipticGroup& g) {
  if (d.h < 2) return std::nullopt;
  for (std::size_t i = d.h; i-- > 0;) {
    if (d.ab_images[2 * i] != g.identity() ||
        d.ab_images[2 * i + 1] != g.identity())
      continue;
    MonodromyDatum cand = d;
    cand.h -= 1;
    cand.ab_images.erase(
        cand.ab_images.begin() + static_cast<std::ptrdiff_t>(2 * i),
        cand.ab_images.begin() + static_cast<std::ptrdiff_t>(2 * i + 2));
    if (!reduces_to_normal_form(cand)) continue;
    return SimplifyStep{"(i)",
                        "dropped handle " + std::to_string(i + 1) +
                            " (both images trivial), reducing the base genus to " +
                            std::to_string(cand.h),
                        cand};
  }
  return std::nullopt;
}

}  // namespace

SimplifyResult simplify(const MonodromyDatum& d) {
  validate(d);
  EllipticGroup g(d.group);
  SimplifyResult res{d, {}, {}};
  for (;;) {
    std::optional<SimplifyStep> step = try_step_iii(res.minimal, g);
    if (!step) step = try_step_ii(res.minimal, g);
    if (!step) step = try_step_i(res.minimal, g);
    if (!step) break;
    res.minimal = step->result;
    res.steps.push_back(std::move(*step));
  }
  res.label = classify(res.minimal);
  if (!res.label.is_normal())
    fail(ErrorCode::NotNormalizable,
         "no reduction step applies and the datum matches no tabulated normal "
         "form: " +
             describe(res.minimal));
  return res;
}

std::string describe(const MonodromyDatum& d) {
  EllipticGroup g(d.group);
  std::ostringstream os;
  os << "h=" << d.h << ", (";
  for (std::size_t i = 0; i < d.ab_images.size(); ++i) {
    if (i) os << ", ";
    os << g.element_name(d.ab_images[i]);
  }
  if (!d.gamma_images.empty()) {
    os << "; ";
    for (std::size_t j = 0; j < d.gamma_images.size(); ++j) {
      if (j) os << ", ";
      os << g.element_name(d.gamma_images[j]);
    }
  }
  os << ")";
  if (!d.local_orders.empty()) {
    os << ", orders (";
    for (std::size_t j = 0; j < d.local_orders.size(); ++j) {
      if (j) os << ", ";
      os << d.local_orders[j].get_str();
    }
    os << ")";
  }
  return os.str();
}

std::string describe(const EllipticBranchDatum& e) {
  EllipticGroup g(e.group);
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < e.gamma_images.size(); ++j) {
    if (j) os << ", ";
    os << g.element_name(e.gamma_images[j]);
  }
  os << ")";
  return os.str();
}

std::vector<std::string> group_preset_names() {
  return {"Z3xMu3", "Z2xMu4", "Z22xMu2", "Z2xMu2", "Sporadic16"};
}

EllipticGroupSpec group_preset_spec(const std::string& name) {
  if (name == "Z3xMu3") return from_lemma43(3, 3, 1, 1, -1);
  if (name == "Z2xMu4") return from_lemma43(4, 2, 1, 1, 1);
  if (name == "Z22xMu2")
    return make_spec(2, IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(2)}}));
  if (name == "Z2xMu2")
    return make_spec(2, IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(1)}}));
  if (name == "Sporadic16")
    return make_spec(4, IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(2)}}));
  fail(ErrorCode::InvalidParams,
       "unknown group preset '" + name +
           "' (known: Z3xMu3, Z2xMu4, Z22xMu2, Z2xMu2, Sporadic16)");
}

std::string group_preset_display(const std::string& name) {
  if (name == "Z3xMu3") return "Z/3 x mu_3";
  if (name == "Z2xMu4") return "Z/2 x mu_4";
  if (name == "Z22xMu2") return "(Z/2)^2 x mu_2";
  if (name == "Z2xMu2") return "Z/2 x mu_2";
  if (name == "Sporadic16") return "(Z/2)^2 : mu_4";
  fail(ErrorCode::InvalidParams, "unknown group preset '" + name + "'");
}

namespace {

// Bundled-table construction helpers.
struct CatalogBuilder {
  std::string key;
  std::string display;
  EllipticGroupSpec spec;
  EllipticGroup g;
  EllipticBranchDatum mon_e;
  std::vector<CatalogEntry>& out;

  CatalogBuilder(std::string key_, std::vector<CatalogEntry>& out_)
      : key(std::move(key_)),
        display(group_preset_display(key)),
        spec(group_preset_spec(key)),
        g(spec),
        mon_e{spec, {}},
        out(out_) {}

  void add(const std::string& row, CaseLabel label, std::size_t h,
           std::vector<std::size_t> ab, std::vector<std::size_t> gam,
           CatalogExpectation expected) {
    MonodromyDatum d;
    d.group = spec;
    d.h = h;
    d.ab_images = std::move(ab);
    d.gamma_images = std::move(gam);
    for (std::size_t x : d.gamma_images)
      d.local_orders.emplace_back(g.element_order(x));
    out.push_back(CatalogEntry{key, display, row, label, std::move(d), mon_e,
                               std::move(expected)});
  }
};

std::vector<Int> torsion_list(std::initializer_list<long> v) {
  std::vector<Int> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

std::vector<CatalogEntry> catalog_list1() {
  std::vector<CatalogEntry> out;
  const std::optional<std::vector<Int>> none;

  {
    // Z/3 x mu_3: T = Z/3 generated by t, e a primitive rotation.
    CatalogBuilder b("Z3xMu3", out);
    const EllipticGroup& g = b.g;
    const std::size_t one = g.identity();
    const std::size_t e = g.element({Int(0), Int(0)}, 1);
    const std::size_t t = g.element({Int(0), Int(1)}, 0);
    const std::size_t t2 = g.element({Int(0), Int(2)}, 0);
    b.mon_e.gamma_images = {e, g.mul(t, e), g.mul(t2, e)};
    b.add("I-1", {CaseTag::AbelianI1, 2}, 1, {e, one}, {t, t2},
          {1, none, 1, true});
    b.add("I-2", {CaseTag::AbelianI2, 0}, 2, {e, t, one, one}, {},
          {9, torsion_list({}), 3, true});
    b.add("II-2", {CaseTag::AbelianII2, 0}, 2, {e, one, t, one}, {},
          {1, none, 1, true});
    b.add("II-3 v1", {CaseTag::AbelianII3, 0}, 2, {e, t, t, one}, {},
          {9, torsion_list({}), 3, true});
    b.add("II-3 v2", {CaseTag::AbelianII3, 0}, 2, {e, t, t2, one}, {},
          {9, torsion_list({}), 3, true});
  }
  {
    // Z/2 x mu_4: T = Z/2 generated by t, e of order 4.
    CatalogBuilder b("Z2xMu4", out);
    const EllipticGroup& g = b.g;
    const std::size_t one = g.identity();
    const std::size_t e = g.element({Int(0), Int(0)}, 1);
    const std::size_t e2 = g.element({Int(0), Int(0)}, 2);
    const std::size_t t = g.element({Int(0), Int(1)}, 0);
    b.mon_e.gamma_images = {e, g.mul(t, e), g.mul(t, e2)};
    b.add("I-1", {CaseTag::AbelianI1, 2}, 1, {e, one}, {t, t},
          {2, torsion_list({2, 2}), 2, true});
    b.add("I-2", {CaseTag::AbelianI2, 0}, 2, {e, t, one, one}, {},
          {8, torsion_list({}), 2, true});
    b.add("II-2", {CaseTag::AbelianII2, 0}, 2, {e, one, t, one}, {},
          {2, torsion_list({2}), 1, true});
    b.add("II-3", {CaseTag::AbelianII3, 0}, 2, {e, t, t, one}, {},
          {8, torsion_list({}), 2, true});
  }
  {
    // (Z/2)^2 x mu_2: T = {1, t, s, t+s}, e = -1.
    CatalogBuilder b("Z22xMu2", out);
    const EllipticGroup& g = b.g;
    const std::size_t one = g.identity();
    const std::size_t e = g.element({Int(0), Int(0)}, 1);
    const std::size_t t = g.element({Int(1), Int(0)}, 0);
    const std::size_t s = g.element({Int(0), Int(1)}, 0);
    const std::size_t ts = g.element({Int(1), Int(1)}, 0);
    b.mon_e.gamma_images = {e, g.mul(t, e), g.mul(s, e), g.mul(ts, e)};
    b.add("I-1", {CaseTag::AbelianI1, 3}, 1, {e, one}, {t, s, ts},
          {1, none, 1, true});
    b.add("I-3", {CaseTag::AbelianI3, 2}, 1, {e, t}, {s, s}, {1, none, 1, true});
    b.add("II v1", {CaseTag::AbelianII, 0}, 2, {e, t, s, one}, {},
          {1, none, 1, true});
    b.add("II v2", {CaseTag::AbelianII, 0}, 2, {e, t, s, t}, {},
          {1, none, 1, true});
    b.add("II-1", {CaseTag::AbelianII1, 0}, 2, {e, one, t, s}, {},
          {1, none, 1, true});
    b.add("III v1", {CaseTag::AbelianIII, 2}, 2, {e, t, t, one}, {s, s},
          {1, none, 1, true});
    b.add("III v2", {CaseTag::AbelianIII, 2}, 2, {e, one, t, one}, {s, s},
          {1, none, 1, true});
  }
  {
    // Z/2 x mu_2: T = Z/2 generated by t, e = -1.
    CatalogBuilder b("Z2xMu2", out);
    const EllipticGroup& g = b.g;
    const std::size_t one = g.identity();
    const std::size_t e = g.element({Int(0), Int(0)}, 1);
    const std::size_t t = g.element({Int(1), Int(0)}, 0);
    b.mon_e.gamma_images = {e, e, g.mul(t, e), g.mul(t, e)};
    b.add("I-1", {CaseTag::AbelianI1, 2}, 1, {e, one}, {t, t},
          {1, torsion_list({2, 4}), 1, true});
    b.add("I-2", {CaseTag::AbelianI2, 0}, 2, {e, t, one, one}, {},
          {4, torsion_list({2}), 2, false});
    b.add("II-2", {CaseTag::AbelianII2, 0}, 2, {e, one, t, one}, {},
          {1, none, 1, true});
    b.add("II-3", {CaseTag::AbelianII3, 0}, 2, {e, t, t, one}, {},
          {4, torsion_list({2}), 2, false});
  }
  return out;
}

std::vector<CatalogEntry> catalog_list2() {
  std::vector<CatalogEntry> out;
  const std::optional<std::vector<Int>> none;

  CatalogBuilder b("Sporadic16", out);
  const EllipticGroup& g = b.g;
  const std::size_t one = g.identity();
  const std::size_t eps = g.element({Int(0), Int(0)}, 1);
  const std::size_t eps2 = g.element({Int(0), Int(0)}, 2);
  const std::size_t t = g.element({Int(1), Int(0)}, 0);
  const std::size_t s = g.element({Int(0), Int(1)}, 0);
  const std::size_t ts = g.element({Int(1), Int(1)}, 0);
  b.mon_e.gamma_images = {g.mul(t, eps2), g.mul(t, eps), eps};
  b.add("IV-2", {CaseTag::SporadicIV, 2}, 1, {eps, one}, {s, s},
        {1, none, 1, true});
  b.add("V-1", {CaseTag::SporadicV, 1}, 1, {eps, t}, {ts}, {1, none, 1, true});
  b.add("V*-2", {CaseTag::SporadicVStar, 2}, 2, {eps, one, one, t}, {s, s},
        {1, none, 1, true});
  b.add("V**-2", {CaseTag::SporadicVStarStar, 2}, 2, {eps, one, one, t},
        {ts, ts}, {1, none, 1, true});
  b.add("V***-1", {CaseTag::SporadicVTripleStar, 1}, 2, {eps, t, one, t}, {ts},
        {1, none, 1, true});
  b.add("VI", {CaseTag::SporadicVI, 0}, 2, {eps, one, t, s}, {},
        {1, none, 1, true});
  b.add("VI*", {CaseTag::SporadicVIStar, 0}, 2, {eps, ts, t, one}, {},
        {2, torsion_list({}), 1, true});
  b.add("VI**", {CaseTag::SporadicVIStarStar, 0}, 2, {eps, ts, t, s}, {},
        {2, torsion_list({}), 1, true});
  b.add("VIII", {CaseTag::SporadicVIII, 0}, 2, {eps, one, t, one}, {},
        {1, none, 1, true});
  b.add("VII", {CaseTag::SporadicVII, 0}, 3, {eps, one, ts, one, s, one}, {},
        {1, none, 1, true});
  b.add("VII*", {CaseTag::SporadicVIIStar, 0}, 3, {eps, one, t, one, s, one},
        {}, {1, none, 1, true});
  return out;
}

}  // namespace ellsurf
