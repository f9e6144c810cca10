#pragma once

#include "ellsurf/elliptic_group.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ellsurf {

// Monodromy datum for a Galois cover C -> C/G = B of genus h: the images in G
// of a geometric basis alpha_1, beta_1, ..., alpha_h, beta_h, gamma_1, ..., gamma_k
// of the orbifold fundamental group of B, together with the branching order
// recorded for every gamma_j.
struct MonodromyDatum {
    EllipticGroupSpec group;
    std::size_t h = 0;
    std::vector<std::size_t> ab_images;     // 2h entries: alpha_1, beta_1, ...
    std::vector<std::size_t> gamma_images;  // k entries
    std::vector<Int> local_orders;          // k entries, m_j >= 2

    std::size_t k() const { return gamma_images.size(); }

    bool operator==(const MonodromyDatum&) const = default;
};

// Branch datum for the elliptic side E -> E/G (a genus-0 quotient): images of
// the branch loops only.  Branching orders are the element orders and must
// satisfy sum(1 - 1/n_j) = 2, so the covering curve E has genus 1.
struct EllipticBranchDatum {
    EllipticGroupSpec group;
    std::vector<std::size_t> gamma_images;

    bool operator==(const EllipticBranchDatum&) const = default;
};

// Case tags for the tabulated normal forms: eight families for abelian G and
// twelve for the order-16 semidirect product (Z/2)^2 : mu_4.  `NotNormal`
// reports that a datum matches none of them.
enum class CaseTag {
    AbelianI1,
    AbelianI2,
    AbelianI3,
    AbelianII,
    AbelianII1,
    AbelianII2,
    AbelianII3,
    AbelianIII,
    SporadicIII,
    SporadicIV,
    SporadicV,
    SporadicVStar,
    SporadicVStarStar,
    SporadicVTripleStar,
    SporadicVI,
    SporadicVIStar,
    SporadicVIStarStar,
    SporadicVII,
    SporadicVIIStar,
    SporadicVIII,
    NotNormal,
};

struct CaseLabel {
    CaseTag tag = CaseTag::NotNormal;
    std::size_t k = 0;

    bool is_normal() const { return tag != CaseTag::NotNormal; }
    std::string to_string() const;

    bool operator==(const CaseLabel&) const = default;
};

// Full validation: shape, product relator, gamma images are translations of
// the recorded orders, surjectivity, and Riemann-Hurwitz genus >= 2.
// Throws RelatorFails, NotSurjective, GammaNotTranslation, GammaWrongOrder,
// GenusTooSmall, NonIntegralGenus or InvalidParams.
void validate(const MonodromyDatum& d);

// Elliptic-side validation: product relator, surjectivity, and covering genus
// exactly 1.  Throws RelatorFails, NotSurjective or InvalidParams.
void validate(const EllipticBranchDatum& e);

// Genus of the covering curve from Riemann-Hurwitz:
//   2g - 2 = |G| (2h - 2) + sum_j (|G| - |G|/m_j).
// Throws NonIntegralGenus when some m_j does not divide |G| or the right-hand
// side is odd.  The result may be < 2; validate() turns that into an error.
Int genus_from_orders(const Int& group_order, std::size_t h, const std::vector<Int>& orders);
Int genus_C(const MonodromyDatum& d);

// Normal-form moves.  Each is a substitution on the image tuple; the result is
// re-validated in full and InvalidParams is thrown when the substituted tuple
// is no longer a monodromy (possible for some moves when G is nonabelian).
struct MoveA {
    std::size_t ab_index = 0;     // which alpha/beta image gets multiplied
    std::size_t gamma_index = 0;  // by gamma_{gamma_index}^{exponent}
    int exponent = 1;             // +1 or -1
};
struct MoveB {
    std::size_t ab_index = 0;  // even: alpha_i *= beta_i^e; odd: beta_i *= alpha_i^e
    int exponent = 1;          // +1 or -1
};
struct MoveC {
    std::vector<std::size_t> handle_perm;  // empty = identity; else perm of 0..h-1
    std::vector<std::size_t> gamma_perm;   // empty = identity; else perm of 0..k-1
};
struct MoveD {
    std::size_t handle_index = 0;  // acts on handles (i, i+1):
                                   // b_i *= b_{i+1} a_{i+1}; b_{i+1} *= a_i^{-1}; a_{i+1} *= a_i^{-1}
};
using Move = std::variant<MoveA, MoveB, MoveC, MoveD>;

MonodromyDatum apply_move(const MonodromyDatum& d, const Move& move);

// Matches a valid datum against the tabulated normal forms (genus h <= 2 for
// abelian G, plus the two h = 3 sporadic families).  Never throws on a valid
// datum; anything outside the tables reports NotNormal.
CaseLabel classify(const MonodromyDatum& d);

// One reduction step: the rule applied ("(i)" drops a trivial handle, "(ii)"
// merges two branch points, "(iii)" removes a cancelling pair) and the datum
// it produced.
struct SimplifyStep {
    std::string rule;
    std::string description;
    MonodromyDatum result;
};

struct SimplifyResult {
    MonodromyDatum minimal;
    std::vector<SimplifyStep> steps;
    CaseLabel label;
};

// Applies reduction steps until none is admissible (every candidate step is
// accepted only if the reduced datum validates), then classifies the result.
// Throws NotNormalizable when the terminal datum matches no tabulated case.
SimplifyResult simplify(const MonodromyDatum& d);

// Human-readable image tuple, e.g. "h=1, (e, 1; t(0,1), t(0,2)), orders (3, 3)".
std::string describe(const MonodromyDatum& d);
std::string describe(const EllipticBranchDatum& e);

// Named group presets shared by the bundled case tables and the case-file
// loader.
std::vector<std::string> group_preset_names();
EllipticGroupSpec group_preset_spec(const std::string& name);
std::string group_preset_display(const std::string& name);

// Expected results recorded alongside each bundled case: the order of the
// subgroup of the centre acting trivially on H_1(S,Z), the torsion invariant
// factors of H_1(S,Z) where the reference computation reports them, and the
// order/exactness of the resulting group of cohomologically trivial
// automorphisms.
struct CatalogExpectation {
    std::size_t trivial_action_count = 1;
    std::optional<std::vector<Int>> torsion;
    std::size_t aut_z_order = 1;
    bool aut_z_exact = true;
};

struct CatalogEntry {
    std::string group_key;      // preset name, e.g. "Z3xMu3"
    std::string group_display;  // e.g. "Z/3 x mu_3"
    std::string row_label;      // e.g. "I-1", "II-3 v1"
    CaseLabel label;
    MonodromyDatum datum;
    EllipticBranchDatum mon_e;
    CatalogExpectation expected;
};

// The two bundled case tables: 20 cases over the four abelian groups, and 11
// cases over the order-16 sporadic group.
std::vector<CatalogEntry> catalog_list1();
std::vector<CatalogEntry> catalog_list2();

}  // namespace ellsurf
