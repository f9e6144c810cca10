#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ellsurf/elliptic_group.hpp"
#include "ellsurf/exact_linalg.hpp"
#include "ellsurf/fp_group.hpp"
#include "ellsurf/monodromy.hpp"
#include "ellsurf/schreier.hpp"

namespace ellsurf {

// Isomorphism type of the orbifold first homology of a genus-h base with
// branching orders m_1, ..., m_k:
//   ( Z^{2h} + (+)_i Z/m_i g_i ) / < sum_i g_i >.
// Orders must be positive; an order of 1 contributes a trivial factor.
AbelianInvariants h1_orb(std::size_t h, const std::vector<Int>& local_orders);

// H_1(C,Z)_G: the first homology of the covering curve C of a monodromy
// datum, modulo the G-action.
//
// The curve's fundamental group is obtained from the orbifold presentation
// by rewriting the kernel of the monodromy map (Reidemeister-Schreier at the
// trivial subgroup, so cosets correspond to group elements).  Its
// abelianization is H_1(C,Z), free of rank twice the covering genus.  The
// coinvariant space then divides out the rows g~ u g~^-1 u^-1, where u runs
// over the Schreier generators and g~ over lifts of the images of the datum
// (a generating set of G).
//
// The relation matrix keeps the curve's own abelianized relators first
// (relator_row_count of them) and the conjugation-difference rows after, so
// the quotient can also be taken in two stages.
class CoinvariantSpace {
 public:
  explicit CoinvariantSpace(const MonodromyDatum& d,
                            SchreierOptions options = {});

  CoinvariantSpace(const CoinvariantSpace&) = delete;
  CoinvariantSpace& operator=(const CoinvariantSpace&) = delete;

  const EllipticGroup& group() const { return group_; }
  // Names of the Schreier generators of pi_1(C).
  const std::vector<std::string>& basis() const { return basis_; }
  // All relation rows over the basis: curve relators, then conjugation rows.
  const IntMatrix& relations() const { return relations_; }
  std::size_t relator_row_count() const { return relator_rows_; }

  // H_1(C,Z); always free of rank 2 * genus_C.
  const AbelianInvariants& curve_h1() const { return curve_h1_; }
  // Isomorphism type of the coinvariant quotient H_1(C,Z)_G.
  const AbelianInvariants& invariants() const { return invariants_; }

  // A word in the orbifold generators mapping to the given group element.
  Word lift_word(std::size_t element_id) const;

  // Canonical coordinates in the quotient of a word in the orbifold
  // generators; the word must map to the identity of G (throws
  // NotInSubgroup otherwise).
  std::vector<Int> quotient_coordinates(const Word& w) const;
  bool is_zero(const Word& w) const;

 private:
  EllipticGroup group_;
  std::unique_ptr<SchreierData> schreier_;
  std::vector<std::string> basis_;
  IntMatrix relations_;
  std::size_t relator_rows_ = 0;
  AbelianInvariants curve_h1_;
  AbelianInvariants invariants_;
  QuotientChart chart_;
};

// The subgroup K of Z(G) of central elements acting trivially on
// H_1(C,Z)_G: z is accepted when for every group element g the commutator
// of their lifts vanishes in the coinvariant space.  Returns sorted element
// ids, always containing the identity; the result is the subgroup generated
// by the accepted elements.
std::vector<std::size_t> trivial_action_subgroup(
    const MonodromyDatum& d, const SchreierOptions& options = {});

// H_1 of the covering curve of an elliptic-side branch datum, by the same
// kernel-abelianization route used for the base side.  A valid datum always
// yields Z^2 (the covering curve is the elliptic curve itself); callers use
// this as a semantic cross-check on top of validate().
AbelianInvariants elliptic_cover_h1(const EllipticBranchDatum& e,
                                    const SchreierOptions& options = {});

// Presentation of the fundamental group of S = (C x E)/G: the preimage of
// the diagonal subgroup of G x G inside the direct product of the two
// orbifold groups, rewritten on Schreier generators (index |G|).
// Throws GroupMismatch when the two data name different groups.
Presentation pi1_S_presentation(const MonodromyDatum& d,
                                const EllipticBranchDatum& e,
                                const SchreierOptions& options = {});

// Isomorphism type of H_1(S,Z) (free rank and torsion).
AbelianInvariants h1_S(const MonodromyDatum& d, const EllipticBranchDatum& e,
                       const SchreierOptions& options = {});

enum class Certainty { Exact, UpperBound };

// Decision report for the group of cohomologically trivial automorphisms.
// candidates is the surviving subgroup C: all of K when the base has genus
// 1, K intersected with the translations when the genus is at least 2
// (rotation lifts act nontrivially on the base side).  certainty records
// whether a recorded rule pins Aut_Z(S) down to C exactly, or only bounds
// it from above.
struct AutZReport {
  std::vector<std::size_t> trivial_subgroup;  // K <= Z(G), sorted ids
  std::vector<Int> trivial_subgroup_type;     // invariant factors of K
  std::vector<std::size_t> candidates;        // C <= K, sorted ids
  std::vector<Int> candidate_type;            // invariant factors of C
  Certainty certainty = Certainty::UpperBound;
  std::vector<std::string> rule_trail;        // one line per applied rule
  std::optional<AbelianInvariants> h1_s;      // filled whenever K is nontrivial

  std::size_t order() const { return candidates.size(); }
};

// `options` steers the base-side coinvariant enumeration only; the
// fiber-product rewriting behind h1_s runs on a different presentation and
// always uses the natural generator order.
AutZReport aut_z_report(const MonodromyDatum& d, const EllipticBranchDatum& e,
                        const SchreierOptions& options = {});

// A surface fibered over a genus-h base whose structure group acts on E
// purely by translations: branch point i carries a fractional translation
// x_i in (1/m_i) Lambda with m_i minimal such that m_i x_i lies in Lambda,
// and the x_i sum to zero exactly.
struct PseudoEllipticDatum {
  std::size_t h = 0;
  IntMatrix lattice;                        // 2x2, columns span Lambda
  std::vector<std::array<mpq_class, 2>> x;  // ambient rational coordinates
  std::vector<Int> orders;                  // m_i
};

// H_1(S,Z) of the pseudo-elliptic surface:
//   ( Z^{2h} + Lambda + (+)_i Z g_i ) / < sum_j g_j, m_i g_i - m_i x_i >.
// Throws InconsistentFractions when m_i x_i is not a lattice vector, m_i is
// not minimal, or the x_i do not sum to zero.
AbelianInvariants pseudo_elliptic_h1(const PseudoEllipticDatum& p);

// Detector for the one exceptional pseudo-elliptic shape with extra
// cohomologically trivial automorphisms: a cyclic group of order 2m (m odd)
// over a genus-0 base with exactly four branch points whose monodromies are
// the half-period twice and a pair g, -g of order m.
bool pseudo_elliptic_exception(const Int& group_order, std::size_t h,
                               const std::vector<Int>& images);

std::string to_string(Certainty c);

}  // namespace ellsurf
