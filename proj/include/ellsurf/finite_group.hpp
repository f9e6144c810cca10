#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ellsurf/exact_linalg.hpp"
#include "ellsurf/fp_group.hpp"

namespace ellsurf {

// Abstract finite group with elements identified by ids 0..order()-1 in a
// deterministic enumeration. All concrete groups in this project are small
// (order <= a few hundred), so O(order) and O(order^2) scans are fine.
class FiniteGroup {
public:
  virtual ~FiniteGroup() = default;

  virtual std::size_t order() const = 0;
  virtual std::size_t identity() const = 0;
  virtual std::size_t mul(std::size_t a, std::size_t b) const = 0;
  virtual std::size_t inv(std::size_t a) const = 0;
  virtual std::string element_name(std::size_t a) const;

  std::size_t pow(std::size_t a, long e) const;
  long element_order(std::size_t a) const;
  bool commute(std::size_t a, std::size_t b) const;

  // Image of a word under generator images (letter +i -> images[i-1]).
  std::size_t eval_word(const std::vector<std::size_t>& images,
                        const Word& w) const;
};

// The one-element group.
class TrivialGroup : public FiniteGroup {
public:
  std::size_t order() const override { return 1; }
  std::size_t identity() const override { return 0; }
  std::size_t mul(std::size_t, std::size_t) const override { return 0; }
  std::size_t inv(std::size_t) const override { return 0; }
  std::string element_name(std::size_t) const override { return "1"; }
};

// Product of cyclic groups Z/n1 x ... x Z/nk; element id in mixed radix with
// the last factor fastest. Handy for tests and for abelian targets.
class ProductOfCyclicGroups : public FiniteGroup {
public:
  explicit ProductOfCyclicGroups(std::vector<long> moduli);

  std::size_t order() const override { return order_; }
  std::size_t identity() const override { return 0; }
  std::size_t mul(std::size_t a, std::size_t b) const override;
  std::size_t inv(std::size_t a) const override;
  std::string element_name(std::size_t a) const override;

  std::size_t element(const std::vector<long>& coords) const;
  std::vector<long> coords(std::size_t a) const;

private:
  std::vector<long> moduli_;
  std::size_t order_;
};

// A x B with id = a * |B| + b.
class DirectProductGroup : public FiniteGroup {
public:
  DirectProductGroup(const FiniteGroup& a, const FiniteGroup& b)
      : a_(a), b_(b) {}

  std::size_t order() const override { return a_.order() * b_.order(); }
  std::size_t identity() const override {
    return pair(a_.identity(), b_.identity());
  }
  std::size_t mul(std::size_t x, std::size_t y) const override {
    return pair(a_.mul(first(x), first(y)), b_.mul(second(x), second(y)));
  }
  std::size_t inv(std::size_t x) const override {
    return pair(a_.inv(first(x)), b_.inv(second(x)));
  }
  std::string element_name(std::size_t x) const override {
    return "(" + a_.element_name(first(x)) + "," + b_.element_name(second(x)) +
           ")";
  }

  std::size_t pair(std::size_t a, std::size_t b) const {
    return a * b_.order() + b;
  }
  std::size_t first(std::size_t x) const { return x / b_.order(); }
  std::size_t second(std::size_t x) const { return x % b_.order(); }

  // {(g,g) : g in A} when A and B coincide as abstract tables.
  std::vector<std::size_t> diagonal_subgroup() const;

private:
  const FiniteGroup& a_;
  const FiniteGroup& b_;
};

// Sorted element ids of the subgroup generated by gens.
std::vector<std::size_t> subgroup_closure(const FiniteGroup& g,
                                          const std::vector<std::size_t>& gens);

std::vector<std::size_t> center_elements(const FiniteGroup& g);

bool contains(const std::vector<std::size_t>& sorted_ids, std::size_t x);

// Isomorphism type of an abelian subgroup given by its element ids, found by
// matching order statistics against all abelian groups of that order.
AbelianInvariants abelian_subgroup_invariants(
    const FiniteGroup& g, const std::vector<std::size_t>& elements);

}  // namespace ellsurf
