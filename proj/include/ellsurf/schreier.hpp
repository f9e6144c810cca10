#pragma once

#include <cstddef>
#include <vector>

#include "ellsurf/finite_group.hpp"
#include "ellsurf/fp_group.hpp"

namespace ellsurf {

// A verified homomorphism from a finitely presented group onto a finite
// group: every relator maps to the identity and the images generate the
// whole target. Construct through check_homomorphism. The target group must
// outlive the map.
struct FiniteQuotientMap {
  Presentation source;
  const FiniteGroup* target = nullptr;
  std::vector<std::size_t> images;

  std::size_t eval(const Word& w) const {
    return target->eval_word(images, w);
  }
};

FiniteQuotientMap check_homomorphism(const Presentation& p,
                                     const FiniteGroup& target,
                                     std::vector<std::size_t> images);

// Knobs for the coset enumeration. generator_order permutes the order in
// which generator edges are explored during the BFS; results that matter
// (subgroup isomorphism type, rewriting verdicts) must not depend on it.
struct SchreierOptions {
  std::vector<std::size_t> generator_order;  // empty = natural order
};

// Reidemeister-Schreier data for the preimage f^-1(D) of a subgroup D of
// the target: a prefix-closed transversal of the right cosets D\G, the
// Schreier generators (freely trivial ones removed), a presentation of the
// preimage on those generators, and the rewriting map between the ambient
// word alphabet and the subgroup alphabet.
class SchreierData {
public:
  SchreierData(FiniteQuotientMap map, std::vector<std::size_t> subgroup_ids,
               SchreierOptions options = {});

  const FiniteQuotientMap& map() const { return map_; }
  const std::vector<std::size_t>& subgroup_elements() const {
    return subgroup_;
  }

  std::size_t coset_count() const { return transversal_.size(); }
  const std::vector<Word>& transversal() const { return transversal_; }
  // Coset index of the coset D * element.
  std::size_t coset_of(std::size_t element_id) const;

  // Schreier generator i+1 equals this ambient word (reduced, nonempty).
  const std::vector<Word>& schreier_generator_words() const {
    return sgen_words_;
  }
  const Presentation& subgroup_presentation() const {
    return sub_presentation_;
  }

  // Rewrite an ambient word whose image lies in D as a word over the
  // Schreier generators; throws NotInSubgroup otherwise.
  Word rewrite_word(const Word& w) const;
  // Substitute each Schreier generator by its ambient word (left inverse of
  // rewrite_word up to free equality).
  Word expand(const Word& subgroup_word) const;

private:
  FiniteQuotientMap map_;
  std::vector<std::size_t> subgroup_;            // sorted element ids
  std::vector<Word> transversal_;                // per coset, positive word
  std::vector<std::size_t> coset_index_of_;      // per element id
  std::vector<std::vector<std::size_t>> action_;         // [coset][gen]
  std::vector<std::vector<std::size_t>> inverse_action_; // [coset][gen]
  std::vector<std::vector<std::size_t>> sgen_at_;  // index+1; 0 = removed
  std::vector<Word> sgen_words_;
  Presentation sub_presentation_;
};

SchreierData rewrite_subgroup(const FiniteQuotientMap& f,
                              const std::vector<std::size_t>& subgroup_ids,
                              const SchreierOptions& options = {});

std::vector<Word> schreier_transversal(
    const FiniteQuotientMap& f, const std::vector<std::size_t>& subgroup_ids,
    const SchreierOptions& options = {});

}  // namespace ellsurf
