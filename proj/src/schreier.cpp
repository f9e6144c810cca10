#include "ellsurf/schreier.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ellsurf {

FiniteQuotientMap check_homomorphism(const Presentation& p,
                                     const FiniteGroup& target,
                                     std::vector<std::size_t> images) {
  p.check_well_formed();
  if (images.size() != p.generator_count())
    fail(ErrorCode::InvalidParams, "one image per generator required");
  for (std::size_t im : images)
    if (im >= target.order())
      fail(ErrorCode::InvalidParams, "image id out of range");
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (target.eval_word(images, p.relators[i]) != target.identity())
      fail(ErrorCode::RelatorViolation,
           "relator " + std::to_string(i + 1) + " (" +
               p.relator_string(p.relators[i]) +
               ") does not map to the identity");
  }
  std::vector<std::size_t> generated = subgroup_closure(target, images);
  if (generated.size() != target.order())
    fail(ErrorCode::NotSurjective,
         "images generate a subgroup of index " +
             std::to_string(target.order() / generated.size()));
  return FiniteQuotientMap{p, &target, std::move(images)};
}

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

void check_subgroup(const FiniteGroup& g,
                    const std::vector<std::size_t>& sorted_ids) {
  if (sorted_ids.empty() || !contains(sorted_ids, g.identity()))
    fail(ErrorCode::InvalidParams, "subgroup must contain the identity");
  for (std::size_t a : sorted_ids) {
    if (a >= g.order())
      fail(ErrorCode::InvalidParams, "subgroup element id out of range");
    if (!contains(sorted_ids, g.inv(a)))
      fail(ErrorCode::InvalidParams, "subgroup not closed under inverses");
    for (std::size_t b : sorted_ids)
      if (!contains(sorted_ids, g.mul(a, b)))
        fail(ErrorCode::InvalidParams, "subgroup not closed under products");
  }
}

}  // namespace

SchreierData::SchreierData(FiniteQuotientMap map,
                           std::vector<std::size_t> subgroup_ids,
                           SchreierOptions options)
    : map_(std::move(map)), subgroup_(std::move(subgroup_ids)) {
  const FiniteGroup& g = *map_.target;
  std::sort(subgroup_.begin(), subgroup_.end());
  subgroup_.erase(std::unique(subgroup_.begin(), subgroup_.end()),
                  subgroup_.end());
  check_subgroup(g, subgroup_);

  const std::size_t n = map_.source.generator_count();
  std::vector<std::size_t> order = options.generator_order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  {
    std::vector<std::size_t> check = order;
    std::sort(check.begin(), check.end());
    std::vector<std::size_t> expect(n);
    std::iota(expect.begin(), expect.end(), 0);
    if (check != expect)
      fail(ErrorCode::InvalidParams,
           "generator_order must be a permutation of the generators");
  }

  // Canonical key of the right coset D*e: the least element id in it.
  std::vector<std::size_t> key(g.order());
  for (std::size_t e = 0; e < g.order(); ++e) {
    std::size_t best = kUnset;
    for (std::size_t d : subgroup_) best = std::min(best, g.mul(d, e));
    key[e] = best;
  }

  // BFS over cosets along generator edges, in the requested order.
  std::vector<std::size_t> index_of_key(g.order(), kUnset);
  std::vector<std::size_t> rep_element;  // image of the transversal word
  std::vector<std::vector<char>> is_tree_edge;
  index_of_key[key[g.identity()]] = 0;
  transversal_.push_back(Word{});
  rep_element.push_back(g.identity());
  for (std::size_t c = 0; c < transversal_.size(); ++c) {
    action_.emplace_back(n, kUnset);
    is_tree_edge.emplace_back(n, 0);
    for (std::size_t j : order) {
      std::size_t u = g.mul(rep_element[c], map_.images[j]);
      std::size_t& slot = index_of_key[key[u]];
      if (slot == kUnset) {
        slot = transversal_.size();
        Word w = transversal_[c];
        w.push_back(static_cast<int>(j) + 1);
        transversal_.push_back(std::move(w));
        rep_element.push_back(u);
        is_tree_edge[c][j] = 1;
      }
      action_[c][j] = slot;
    }
  }

  coset_index_of_.resize(g.order());
  for (std::size_t e = 0; e < g.order(); ++e)
    coset_index_of_[e] = index_of_key[key[e]];

  inverse_action_.assign(coset_count(), std::vector<std::size_t>(n, kUnset));
  for (std::size_t c = 0; c < coset_count(); ++c)
    for (std::size_t j = 0; j < n; ++j)
      inverse_action_[action_[c][j]][j] = c;

  // Schreier generators w_c x_j (w_c x_j)-bar^-1 in natural (c, j) order;
  // the freely trivial ones (the spanning-tree edges) are dropped.
  sgen_at_.assign(coset_count(), std::vector<std::size_t>(n, 0));
  for (std::size_t c = 0; c < coset_count(); ++c) {
    for (std::size_t j = 0; j < n; ++j) {
      Word w = transversal_[c];
      w.push_back(static_cast<int>(j) + 1);
      Word s = reduced_word(
          concat_words(w, inverse_word(transversal_[action_[c][j]])));
      if (s.empty()) continue;
      sgen_words_.push_back(std::move(s));
      sgen_at_[c][j] = sgen_words_.size();
    }
  }

  // Subgroup presentation: rewrite every conjugate w_c r w_c^-1 of every
  // ambient relator, drop empty results, keep first occurrences only.
  sub_presentation_.generator_names.reserve(sgen_words_.size());
  for (std::size_t i = 0; i < sgen_words_.size(); ++i)
    sub_presentation_.generator_names.push_back("s" + std::to_string(i + 1));
  for (const Word& r : map_.source.relators) {
    for (std::size_t c = 0; c < coset_count(); ++c) {
      Word rel = rewrite_word(conjugate_word(transversal_[c], r));
      if (rel.empty()) continue;
      if (std::find(sub_presentation_.relators.begin(),
                    sub_presentation_.relators.end(),
                    rel) == sub_presentation_.relators.end())
        sub_presentation_.relators.push_back(std::move(rel));
    }
  }
  sub_presentation_.check_well_formed();
}

std::size_t SchreierData::coset_of(std::size_t element_id) const {
  if (element_id >= coset_index_of_.size())
    fail(ErrorCode::InvalidParams, "element id out of range");
  return coset_index_of_[element_id];
}

Word SchreierData::rewrite_word(const Word& w) const {
  const FiniteGroup& g = *map_.target;
  if (!contains(subgroup_, map_.eval(w)))
    fail(ErrorCode::NotInSubgroup,
         "word maps to " + g.element_name(map_.eval(w)) +
             ", outside the subgroup");
  Word out;
  std::size_t c = 0;  // identity coset
  for (int letter : w) {
    if (letter == 0) fail(ErrorCode::InvalidParams, "zero letter in word");
    std::size_t j = static_cast<std::size_t>(std::abs(letter)) - 1;
    if (j >= map_.images.size())
      fail(ErrorCode::InvalidParams, "letter outside the generator range");
    if (letter > 0) {
      if (std::size_t s = sgen_at_[c][j])
        out.push_back(static_cast<int>(s));
      c = action_[c][j];
    } else {
      std::size_t back = inverse_action_[c][j];
      if (std::size_t s = sgen_at_[back][j])
        out.push_back(-static_cast<int>(s));
      c = back;
    }
  }
  return reduced_word(out);
}

Word SchreierData::expand(const Word& subgroup_word) const {
  Word out;
  for (int letter : subgroup_word) {
    std::size_t j = static_cast<std::size_t>(std::abs(letter)) - 1;
    if (letter == 0 || j >= sgen_words_.size())
      fail(ErrorCode::InvalidParams, "letter outside the Schreier range");
    const Word& s = sgen_words_[j];
    Word piece = letter > 0 ? s : inverse_word(s);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return reduced_word(out);
}

SchreierData rewrite_subgroup(const FiniteQuotientMap& f,
                              const std::vector<std::size_t>& subgroup_ids,
                              const SchreierOptions& options) {
  return SchreierData(f, subgroup_ids, options);
}

std::vector<Word> schreier_transversal(
    const FiniteQuotientMap& f, const std::vector<std::size_t>& subgroup_ids,
    const SchreierOptions& options) {
  return SchreierData(f, subgroup_ids, options).transversal();
}

}  // namespace ellsurf
