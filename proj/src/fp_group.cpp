#include "ellsurf/fp_group.hpp"

#include <sstream>

namespace ellsurf {

Word reduced_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (letter == 0) fail(ErrorCode::InvalidParams, "zero letter in word");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word concat_words(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word commutator_word(const Word& a, const Word& b) {
  return concat_words(concat_words(a, b),
                      concat_words(inverse_word(a), inverse_word(b)));
}

Word conjugate_word(const Word& g, const Word& w) {
  return concat_words(concat_words(g, w), inverse_word(g));
}

Word power_word(int generator, const Int& exponent) {
  if (generator == 0) fail(ErrorCode::InvalidParams, "zero generator index");
  if (!exponent.fits_slong_p())
    fail(ErrorCode::InvalidParams, "power exponent out of range");
  long e = exponent.get_si();
  int letter = e >= 0 ? generator : -generator;
  Word out;
  for (long i = 0, k = std::abs(e); i < k; ++i) out.push_back(letter);
  return out;
}

void Presentation::check_well_formed() const {
  const int n = static_cast<int>(generator_count());
  for (const Word& r : relators)
    for (int letter : r)
      if (letter == 0 || letter > n || letter < -n)
        fail(ErrorCode::InvalidParams, "relator letter out of range");
}

std::string Presentation::relator_string(const Word& w) const {
  std::ostringstream os;
  if (w.empty()) return "1";
  for (std::size_t i = 0; i < w.size(); ++i) {
    int letter = w[i];
    if (i) os << "*";
    os << generator_names[std::abs(letter) - 1];
    if (letter < 0) os << "^-1";
  }
  return os.str();
}

Presentation orbifold_presentation(std::size_t h,
                                   const std::vector<Int>& local_orders) {
  Presentation p;
  for (std::size_t i = 1; i <= h; ++i) {
    p.generator_names.push_back("a" + std::to_string(i));
    p.generator_names.push_back("b" + std::to_string(i));
  }
  for (std::size_t j = 1; j <= local_orders.size(); ++j)
    p.generator_names.push_back("g" + std::to_string(j));

  Word surface;
  for (std::size_t i = 0; i < h; ++i) {
    int a = static_cast<int>(2 * i + 1);
    int b = static_cast<int>(2 * i + 2);
    surface = concat_words(surface, commutator_word({a}, {b}));
  }
  for (std::size_t j = 0; j < local_orders.size(); ++j)
    surface.push_back(static_cast<int>(2 * h + 1 + j));
  p.relators.push_back(surface);

  for (std::size_t j = 0; j < local_orders.size(); ++j) {
    if (local_orders[j] < 2)
      fail(ErrorCode::InvalidParams, "local order must be at least 2");
    p.relators.push_back(
        power_word(static_cast<int>(2 * h + 1 + j), local_orders[j]));
  }
  return p;
}

Presentation direct_product(const Presentation& p1, const Presentation& p2) {
  Presentation p;
  for (const std::string& name : p1.generator_names)
    p.generator_names.push_back("l_" + name);
  for (const std::string& name : p2.generator_names)
    p.generator_names.push_back("r_" + name);

  const int shift = static_cast<int>(p1.generator_count());
  p.relators = p1.relators;
  for (const Word& r : p2.relators) {
    Word shifted;
    for (int letter : r)
      shifted.push_back(letter > 0 ? letter + shift : letter - shift);
    p.relators.push_back(shifted);
  }
  for (int i = 1; i <= shift; ++i)
    for (int j = shift + 1;
         j <= static_cast<int>(p.generator_count()); ++j)
      p.relators.push_back(commutator_word({i}, {j}));
  return p;
}

std::vector<Int> exponent_vector(std::size_t n, const Word& w) {
  std::vector<Int> v(n, Int(0));
  for (int letter : w) {
    std::size_t idx = static_cast<std::size_t>(std::abs(letter)) - 1;
    if (idx >= n) fail(ErrorCode::InvalidParams, "letter out of range");
    v[idx] += letter > 0 ? 1 : -1;
  }
  return v;
}

Abelianization abelianization(const Presentation& p) {
  p.check_well_formed();
  const std::size_t n = p.generator_count();
  IntMatrix rel(0, n);
  for (const Word& r : p.relators) rel.append_row(exponent_vector(n, r));
  Abelianization ab;
  ab.chart = QuotientChart(n, rel);
  ab.invariants = ab.chart.invariants();
  return ab;
}

}  // namespace ellsurf
