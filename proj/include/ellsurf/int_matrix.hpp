#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "ellsurf/errors.hpp"

namespace ellsurf {

// Arbitrary-precision integer scalar used throughout.
using Int = mpz_class;

// Floor division/remainder: floor_mod(a, b) lies in [0, b) for b > 0.
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Int> row(std::size_t r) const;
  std::vector<Int> col(std::size_t c) const;

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;
  bool is_zero() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);
  // row[dst] += f * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& f);
  // col[dst] += f * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& f);

  void append_row(const std::vector<Int>& row);

  // Exact determinant (square matrices), fraction-free elimination.
  Int det() const;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v);
std::vector<Int> vec_mat(const std::vector<Int>& v, const IntMatrix& m);

}  // namespace ellsurf
