#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ellsurf/exact_linalg.hpp"
#include "ellsurf/int_matrix.hpp"

namespace ellsurf {

// Word in the generators of a finitely presented group: nonzero signed
// indices, +i for generator i, -i for its inverse (1-based magnitudes).
using Word = std::vector<int>;

Word reduced_word(const Word& w);   // free reduction
Word inverse_word(const Word& w);
Word concat_words(const Word& a, const Word& b);
// a b a^-1 b^-1
Word commutator_word(const Word& a, const Word& b);
Word conjugate_word(const Word& g, const Word& w);  // g w g^-1
Word power_word(int generator, const Int& exponent);

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  std::size_t generator_count() const { return generator_names.size(); }
  // Bounds-check all relator letters; throws InvalidParams.
  void check_well_formed() const;
  std::string relator_string(const Word& w) const;
};

// <a1,b1,...,ah,bh,g1,...,gk | [a1,b1]...[ah,bh] g1...gk, gj^{mj}>
// with [a,b] = a b a^-1 b^-1; all local orders must be >= 2.
Presentation orbifold_presentation(std::size_t h,
                                   const std::vector<Int>& local_orders);

// Disjoint union of generators, both relator sets, plus commutators making
// the two factors commute.
Presentation direct_product(const Presentation& p1, const Presentation& p2);

// Exponent vector of w over n generators (abelianized image).
std::vector<Int> exponent_vector(std::size_t n, const Word& w);

// Abelianization of a presentation: isomorphism type plus a canonical
// coordinate chart (generator i maps to coordinates(e_i)).
struct Abelianization {
  AbelianInvariants invariants;
  QuotientChart chart;

  std::vector<Int> word_coordinates(const Word& w) const {
    return chart.coordinates(exponent_vector(chart.generators(), w));
  }
};

Abelianization abelianization(const Presentation& p);

}  // namespace ellsurf
