#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ellsurf/exact_linalg.hpp"
#include "ellsurf/finite_group.hpp"
#include "ellsurf/int_matrix.hpp"

namespace ellsurf {

// Multiplication by a primitive r-th root of unity x on the order
// Z[x]/P_r(x), written on the basis {1, x}. Only r in {2,3,4,6} occur as
// automorphism orders of an elliptic curve fixing the origin.
struct CyclotomicAction {
  int r = 0;
  IntMatrix M;  // 2x2, M^r = I, primitive

  bool operator==(const CyclotomicAction&) const = default;
};

CyclotomicAction cyclotomic_action(int r);

// A finite-index sublattice Lambda of Lambda_T = Z^2 (basis {1, x}) that is
// invariant under the cyclotomic action; L holds Lambda's basis as columns,
// canonicalized to column Hermite form [[a,0],[b,c]], a,c > 0, 0 <= b < c.
struct EllipticGroupSpec {
  CyclotomicAction action;
  IntMatrix L;

  bool operator==(const EllipticGroupSpec&) const = default;
};

// Canonicalizes and validates the lattice.
EllipticGroupSpec make_spec(int r, const IntMatrix& lattice);

// The index m = m1/m2 determined by a primitive eta = a' + b'x: the norm
// a'^2 + b'^2 - a'b' (r=3), a'^2 + b'^2 (r=4), a'^2 + b'^2 + a'b' (r=6).
// r=2 leaves m1, m2 unconstrained, hence is rejected.
Int index_m(int r, const Int& ap, const Int& bp);

// Build the spec with T = Lambda_T/Lambda isomorphic to Z/m1 + Z/m2: for
// r >= 3, Lambda = m2 * (eta, x*eta); for r=2, Lambda = diag(m1, m2) with
// m2 | m1. Verified through the Smith form of L.
EllipticGroupSpec from_lemma43(int r, const Int& m1, const Int& m2,
                               const Int& ap, const Int& bp);

// Abelianized isomorphism type of the maximal group Lambda_T ⋊ mu_r:
// coinvariants of Lambda_T under the action, plus Z/r.
AbelianInvariants gcal_ab(int r);

// Whether (M - I) Lambda_T lies inside Lambda; equivalent to the group
// G = T ⋊ mu_r being abelian.
bool abelian_criterion(const EllipticGroupSpec& spec);

// G = T ⋊ mu_r acting on E = C/Lambda by z -> eps^k z + t. Elements are
// pairs (t, k) with t the canonical residue of Z^2 mod the lattice columns;
// id = (t.x * c + t.y) * r + k, so ids enumerate lexicographically in
// (t, k) and translations are exactly the ids divisible by r.
class EllipticGroup : public FiniteGroup {
public:
  explicit EllipticGroup(EllipticGroupSpec spec);

  std::size_t order() const override { return t_count_ * r(); }
  std::size_t identity() const override { return 0; }
  std::size_t mul(std::size_t p, std::size_t q) const override;
  std::size_t inv(std::size_t p) const override;
  std::string element_name(std::size_t p) const override;

  const EllipticGroupSpec& spec() const { return spec_; }
  std::size_t r() const { return static_cast<std::size_t>(spec_.action.r); }
  std::size_t translation_count() const { return t_count_; }

  std::size_t element(const std::vector<Int>& t, long k) const;
  std::vector<Int> translation_part(std::size_t p) const;
  long rotation_exponent(std::size_t p) const {
    return static_cast<long>(p % r());
  }
  bool is_translation(std::size_t p) const { return p % r() == 0; }

  // Canonical residue of v modulo the lattice.
  std::vector<Int> reduce_mod_lattice(const std::vector<Int>& v) const;
  bool in_lattice(const std::vector<Int>& v) const;
  const IntMatrix& rotation_power(std::size_t k) const {
    return mpow_[k % r()];
  }

private:
  EllipticGroupSpec spec_;
  Int a_, b_, c_;  // lattice in column Hermite form [[a,0],[b,c]]
  std::size_t t_count_ = 0;
  std::vector<IntMatrix> mpow_;
};

EllipticGroup make_group(const EllipticGroupSpec& spec);

// Element ids with rotation exponent zero (the normal subgroup T).
std::vector<std::size_t> translations(const EllipticGroup& g);

}  // namespace ellsurf
