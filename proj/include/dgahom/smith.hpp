#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dgahom/rational.hpp"

namespace dgahom {

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;
  bool is_diagonal() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

Integer determinant(const IntMatrix& m);  // square matrices only

struct SmithForm {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal with d_i | d_{i+1}, d_i >= 0
  IntMatrix V;  // cols x cols, unimodular
  std::size_t rank = 0;
};

// U * M * V = D.
SmithForm smith_form(const IntMatrix& m);

// Is v an integer combination of the rows of generators?
bool lattice_contains(const IntMatrix& generators, std::span<const Integer> v);
// Do the row lattices coincide?
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

}  // namespace dgahom
