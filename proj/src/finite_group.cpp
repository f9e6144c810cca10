#include "ellsurf/finite_group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ellsurf {

std::string FiniteGroup::element_name(std::size_t a) const {
  return "g" + std::to_string(a);
}

std::size_t FiniteGroup::pow(std::size_t a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  std::size_t acc = identity();
  for (long i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

long FiniteGroup::element_order(std::size_t a) const {
  std::size_t x = a;
  long n = 1;
  while (x != identity()) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

bool FiniteGroup::commute(std::size_t a, std::size_t b) const {
  return mul(a, b) == mul(b, a);
}

std::size_t FiniteGroup::eval_word(const std::vector<std::size_t>& images,
                                   const Word& w) const {
  std::size_t acc = identity();
  for (int letter : w) {
    std::size_t idx = static_cast<std::size_t>(std::abs(letter)) - 1;
    if (idx >= images.size())
      fail(ErrorCode::InvalidParams, "word letter without an image");
    acc = mul(acc, letter > 0 ? images[idx] : inv(images[idx]));
  }
  return acc;
}

ProductOfCyclicGroups::ProductOfCyclicGroups(std::vector<long> moduli)
    : moduli_(std::move(moduli)), order_(1) {
  for (long m : moduli_) {
    if (m < 1) fail(ErrorCode::InvalidParams, "cyclic factor must be >= 1");
    order_ *= static_cast<std::size_t>(m);
  }
}

std::size_t ProductOfCyclicGroups::mul(std::size_t a, std::size_t b) const {
  std::vector<long> ca = coords(a), cb = coords(b);
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    ca[i] = (ca[i] + cb[i]) % moduli_[i];
  return element(ca);
}

std::size_t ProductOfCyclicGroups::inv(std::size_t a) const {
  std::vector<long> c = coords(a);
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    c[i] = (moduli_[i] - c[i]) % moduli_[i];
  return element(c);
}

std::size_t ProductOfCyclicGroups::element(
    const std::vector<long>& coords) const {
  if (coords.size() != moduli_.size())
    fail(ErrorCode::InvalidParams, "coordinate arity mismatch");
  std::size_t id = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    long c = ((coords[i] % moduli_[i]) + moduli_[i]) % moduli_[i];
    id = id * static_cast<std::size_t>(moduli_[i]) +
         static_cast<std::size_t>(c);
  }
  return id;
}

std::vector<long> ProductOfCyclicGroups::coords(std::size_t a) const {
  std::vector<long> c(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    c[i] = static_cast<long>(a % static_cast<std::size_t>(moduli_[i]));
    a /= static_cast<std::size_t>(moduli_[i]);
  }
  return c;
}

std::string ProductOfCyclicGroups::element_name(std::size_t a) const {
  std::vector<long> c = coords(a);
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

std::vector<std::size_t> DirectProductGroup::diagonal_subgroup() const {
  if (a_.order() != b_.order())
    fail(ErrorCode::InvalidParams,
         "diagonal requires identical factor groups");
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < a_.order(); ++g) out.push_back(pair(g, g));
  return out;
}

std::vector<std::size_t> subgroup_closure(
    const FiniteGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::size_t> queue{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t x : gens) {
      for (std::size_t next :
           {g.mul(queue[head], x), g.mul(queue[head], g.inv(x))}) {
        if (!seen[next]) {
          seen[next] = 1;
          queue.push_back(next);
        }
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::size_t> center_elements(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g.order() && central; ++b)
      if (!g.commute(a, b)) central = false;
    if (central) out.push_back(a);
  }
  return out;
}

bool contains(const std::vector<std::size_t>& sorted_ids, std::size_t x) {
  return std::binary_search(sorted_ids.begin(), sorted_ids.end(), x);
}

namespace {

void partitions_of(long e, long max_part, std::vector<long>& current,
                   std::vector<std::vector<long>>& out) {
  if (e == 0) {
    out.push_back(current);
    return;
  }
  for (long p = std::min(e, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_of(e - p, p, current, out);
    current.pop_back();
  }
}

Int int_pow(long base, long e) {
  Int r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<Int> divisors_of(const Int& n) {
  std::vector<Int> divs;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

AbelianInvariants abelian_subgroup_invariants(
    const FiniteGroup& g, const std::vector<std::size_t>& elements) {
  const std::size_t n = elements.size();
  if (n == 0) fail(ErrorCode::InvalidParams, "empty element list");
  for (std::size_t a : elements)
    for (std::size_t b : elements)
      if (!g.commute(a, b))
        fail(ErrorCode::InvalidParams, "subgroup is not abelian");

  if (n == 1) return AbelianInvariants{};

  // Order statistics of the actual subgroup: for each divisor d of n, the
  // number of elements x with x^d = 1.
  Int order(static_cast<unsigned long>(n));
  std::vector<Int> divs = divisors_of(order);
  std::map<Int, std::size_t> actual;
  for (const Int& d : divs) {
    std::size_t count = 0;
    for (std::size_t x : elements)
      if (g.pow(x, d.get_si()) == g.identity()) ++count;
    actual[d] = count;
  }

  // Candidate abelian groups of order n: one exponent partition per prime.
  std::vector<std::pair<long, long>> prime_powers;  // (p, e)
  {
    Int m = order;
    for (long p = 2; Int(p) * p <= m; ++p) {
      if (m % p == 0) {
        long e = 0;
        while (m % p == 0) {
          m /= p;
          ++e;
        }
        prime_powers.emplace_back(p, e);
      }
    }
    if (m > 1) prime_powers.emplace_back(m.get_si(), 1);
  }

  std::vector<std::vector<std::vector<long>>> per_prime_partitions;
  for (auto [p, e] : prime_powers) {
    std::vector<std::vector<long>> parts;
    std::vector<long> cur;
    partitions_of(e, e, cur, parts);
    per_prime_partitions.push_back(parts);
  }

  std::vector<std::size_t> choice(prime_powers.size(), 0);
  while (true) {
    // Invariant factors of this candidate: align the descending exponent
    // partitions across primes and multiply slotwise.
    std::size_t slots = 0;
    for (std::size_t i = 0; i < prime_powers.size(); ++i)
      slots = std::max(slots, per_prime_partitions[i][choice[i]].size());
    std::vector<Int> factors(slots, Int(1));  // descending
    for (std::size_t i = 0; i < prime_powers.size(); ++i) {
      const auto& part = per_prime_partitions[i][choice[i]];
      for (std::size_t j = 0; j < part.size(); ++j)
        factors[j] *= int_pow(prime_powers[i].first, part[j]);
    }
    // Candidate statistics: #{x : x^d = 1} = prod_k gcd(factor_k, d).
    bool match = true;
    for (const Int& d : divs) {
      Int count = 1;
      for (const Int& f : factors) count *= gcd(f, d);
      if (count != Int(static_cast<unsigned long>(actual[d]))) {
        match = false;
        break;
      }
    }
    if (match) {
      AbelianInvariants inv;
      for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        if (*it >= 2) inv.torsion.push_back(*it);
      return inv;
    }
    // Advance the mixed-radix choice vector.
    std::size_t i = 0;
    while (i < choice.size() &&
           ++choice[i] == per_prime_partitions[i].size()) {
      choice[i] = 0;
      ++i;
    }
    if (i == choice.size())
      fail(ErrorCode::InvalidParams,
           "element orders match no abelian group; input is not a subgroup");
  }
}

}  // namespace ellsurf
