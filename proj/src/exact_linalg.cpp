#include "ellsurf/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace ellsurf {

namespace {

// Position of the nonzero entry of least |value| in D[t..row_end) x
// [t..col_end), scanning row-major (deterministic tie-break).
bool find_pivot(const IntMatrix& D, std::size_t t, std::size_t row_end,
                std::size_t col_end, std::size_t* pi, std::size_t* pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < row_end; ++i)
    for (std::size_t j = t; j < col_end; ++j) {
      const Int& x = D.at(i, j);
      if (x == 0) continue;
      Int a = abs(x);
      if (!found || a < best) {
        found = true;
        best = a;
        *pi = i;
        *pj = j;
      }
    }
  return found;
}

// Clear row t and column t of the block [t..row_end) x [t..col_end) by
// unimodular row/column operations mirrored into U and V, leaving a positive
// entry at (t,t). Returns false if the block was entirely zero.
bool eliminate_at(IntMatrix& D, IntMatrix& U, IntMatrix& V, std::size_t t,
                  std::size_t row_end, std::size_t col_end) {
  std::size_t pi, pj;
  if (!find_pivot(D, t, row_end, col_end, &pi, &pj)) return false;
  while (true) {
    D.swap_rows(t, pi);
    U.swap_rows(t, pi);
    D.swap_cols(t, pj);
    V.swap_cols(t, pj);
    if (D.at(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
    for (std::size_t i = t + 1; i < row_end; ++i)
      if (D.at(i, t) != 0) {
        Int q = floor_div(D.at(i, t), D.at(t, t));
        D.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
      }
    for (std::size_t j = t + 1; j < col_end; ++j)
      if (D.at(t, j) != 0) {
        Int q = floor_div(D.at(t, j), D.at(t, t));
        D.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
      }
    bool clean = true;
    for (std::size_t i = t + 1; i < row_end && clean; ++i)
      if (D.at(i, t) != 0) clean = false;
    for (std::size_t j = t + 1; j < col_end && clean; ++j)
      if (D.at(t, j) != 0) clean = false;
    if (clean) return true;
    // Leftover remainders are smaller than the last pivot, so this converges.
    find_pivot(D, t, row_end, col_end, &pi, &pj);
  }
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& M) {
  const std::size_t m = M.rows(), n = M.cols();
  SnfDecomposition s{M, IntMatrix::identity(m), IntMatrix::identity(n)};
  const std::size_t k = std::min(m, n);
  std::size_t rank = 0;
  for (std::size_t t = 0; t < k; ++t) {
    if (!eliminate_at(s.D, s.U, s.V, t, m, n)) break;
    ++rank;
  }
  // Enforce the divisibility chain d_t | d_{t+1} by merging adjacent pairs
  // and re-eliminating the local 2x2 block (all other entries in the two
  // affected rows/columns are zero).
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t + 1 < rank; ++t) {
      const Int a = s.D.at(t, t);
      const Int b = s.D.at(t + 1, t + 1);
      if (a != 0 && b != 0 && b % a != 0) {
        s.D.add_col_multiple(t, t + 1, 1);
        s.V.add_col_multiple(t, t + 1, 1);
        eliminate_at(s.D, s.U, s.V, t, t + 2, t + 2);
        if (s.D.at(t + 1, t + 1) < 0) {
          s.D.negate_row(t + 1);
          s.U.negate_row(t + 1);
        }
        changed = true;
      }
    }
  }
  return s;
}

IntMatrix row_hermite_form(const IntMatrix& M) {
  IntMatrix H = M;
  const std::size_t m = H.rows(), n = H.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclidean reduction of column c over rows >= r.
    while (true) {
      bool found = false;
      std::size_t imin = r;
      Int best;
      for (std::size_t i = r; i < m; ++i) {
        if (H.at(i, c) == 0) continue;
        Int a = abs(H.at(i, c));
        if (!found || a < best) {
          found = true;
          best = a;
          imin = i;
        }
      }
      if (!found) break;
      H.swap_rows(r, imin);
      if (H.at(r, c) < 0) H.negate_row(r);
      bool leftover = false;
      for (std::size_t i = r + 1; i < m; ++i)
        if (H.at(i, c) != 0) {
          Int q = floor_div(H.at(i, c), H.at(r, c));
          H.add_row_multiple(i, r, -q);
          if (H.at(i, c) != 0) leftover = true;
        }
      if (!leftover) break;
    }
    if (H.at(r, c) != 0) {
      // Entries above a pivot are reduced into [0, pivot).
      for (std::size_t i = 0; i < r; ++i) {
        Int q = floor_div(H.at(i, c), H.at(r, c));
        if (q != 0) H.add_row_multiple(i, r, -q);
      }
      ++r;
    }
  }
  return H;
}

IntMatrix hermite_normal_form(const IntMatrix& M) {
  return row_hermite_form(M.transposed()).transposed();
}

Int AbelianInvariants::torsion_order() const {
  Int t = 1;
  for (const Int& d : torsion) t *= d;
  return t;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

QuotientChart::QuotientChart(std::size_t n_generators,
                             const IntMatrix& relations)
    : n_(n_generators) {
  if (relations.rows() > 0 && relations.cols() != n_)
    fail(ErrorCode::InvalidParams,
         "relation matrix has wrong number of columns");
  // Pre-reduce the row space so the Smith computation runs on at most an
  // n x n matrix regardless of how many relators were collected.
  IntMatrix reduced(0, n_);
  if (relations.rows() > 0) {
    IntMatrix H = row_hermite_form(relations);
    for (std::size_t i = 0; i < H.rows(); ++i) {
      bool zero = true;
      for (std::size_t j = 0; j < n_ && zero; ++j)
        if (H.at(i, j) != 0) zero = false;
      if (!zero) reduced.append_row(H.row(i));
    }
  }
  diag_.assign(n_, Int(0));
  if (reduced.rows() == 0) {
    V_ = IntMatrix::identity(n_);
  } else {
    SnfDecomposition s = smith_normal_form(reduced);
    V_ = s.V;
    for (std::size_t j = 0; j < std::min(reduced.rows(), n_); ++j)
      diag_[j] = s.D.at(j, j);
  }
  invariants_.free_rank = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    if (diag_[j] == 0)
      ++invariants_.free_rank;
    else if (diag_[j] >= 2)
      invariants_.torsion.push_back(diag_[j]);
  }
}

std::vector<Int> QuotientChart::coordinates(const std::vector<Int>& v) const {
  if (v.size() != n_)
    fail(ErrorCode::InvalidParams, "vector length does not match generators");
  std::vector<Int> w = vec_mat(v, V_);
  for (std::size_t j = 0; j < n_; ++j)
    if (diag_[j] > 0) w[j] = floor_mod(w[j], diag_[j]);
  return w;
}

bool QuotientChart::is_zero(const std::vector<Int>& v) const {
  for (const Int& x : coordinates(v))
    if (x != 0) return false;
  return true;
}

AbelianInvariants abelian_invariants(std::size_t n_generators,
                                     const IntMatrix& relations) {
  return QuotientChart(n_generators, relations).invariants();
}

std::vector<Int> quotient_coordinates(const IntMatrix& relations,
                                      const std::vector<Int>& v) {
  return QuotientChart(v.size(), relations).coordinates(v);
}

}  // namespace ellsurf
