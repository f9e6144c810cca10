#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ellsurf/int_matrix.hpp"

namespace ellsurf {

// Smith normal form decomposition U*M*V = D with U, V unimodular and D
// diagonal, entries nonnegative with d_1 | d_2 | ... .
struct SnfDecomposition {
  IntMatrix D;
  IntMatrix U;  // rows x rows
  IntMatrix V;  // cols x cols
};

SnfDecomposition smith_normal_form(const IntMatrix& M);

// Column-style Hermite normal form: H = M*Q for unimodular Q, same column
// lattice as M, zero columns last, pivots positive, entries beside a pivot
// reduced into [0, pivot). Unique canonical representative of the lattice.
IntMatrix hermite_normal_form(const IntMatrix& M);

// Row-style companion (= transpose convention); same row lattice as M.
IntMatrix row_hermite_form(const IntMatrix& M);

// Isomorphism type of the abelian group Z^n / row-span(relations):
// free rank plus invariant factors >= 2, ascending under divisibility.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const AbelianInvariants& other) const = default;
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool torsion_free() const { return torsion.empty(); }
  Int torsion_order() const;
  std::string to_string() const;  // e.g. "Z^2 + Z/2 + Z/4", "0"
};

AbelianInvariants abelian_invariants(std::size_t n_generators,
                                     const IntMatrix& relations);

// Canonical coordinates in Z^n / row-span(relations): two vectors get equal
// output iff they differ by an element of the row span.
class QuotientChart {
public:
  QuotientChart() = default;
  QuotientChart(std::size_t n_generators, const IntMatrix& relations);

  std::size_t generators() const { return n_; }
  const AbelianInvariants& invariants() const { return invariants_; }

  std::vector<Int> coordinates(const std::vector<Int>& v) const;
  bool is_zero(const std::vector<Int>& v) const;

private:
  std::size_t n_ = 0;
  IntMatrix V_;             // right transform of the SNF
  std::vector<Int> diag_;   // n entries; 0 marks a free direction
  AbelianInvariants invariants_;
};

std::vector<Int> quotient_coordinates(const IntMatrix& relations,
                                      const std::vector<Int>& v);

}  // namespace ellsurf
