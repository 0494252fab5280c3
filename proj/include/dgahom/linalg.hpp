#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "dgahom/rational.hpp"

namespace dgahom {

using Vector = std::vector<Rational>;

// Sparse exact matrix over Q, stored by rows. No zero entries are stored.
class RationalMatrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);
  const Row& row(std::size_t r) const { return data_[r]; }
  Vector column(std::size_t c) const;

  Vector multiply(std::span<const Rational> x) const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  bool operator==(const RationalMatrix& other) const;
  bool is_identity() const;
  bool is_zero() const;

 private:
  friend struct RrefEngine;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;  // pivot i sits in row i
};

// Reduced row echelon form; the pivot in each column is the first row (in
// the current order) with a nonzero entry.
RrefResult rref(const RationalMatrix& a);

struct LinearSolution {
  std::optional<Vector> particular;  // free variables set to zero
  std::vector<Vector> kernel;        // one vector per free column, in column order
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;

  bool solvable() const { return particular.has_value(); }
};

// Solves A x = b exactly. Throws DimensionMismatch.
LinearSolution rref_solve(const RationalMatrix& a, std::span<const Rational> b);

std::vector<Vector> kernel_basis(const RationalMatrix& a);
std::size_t rank(const RationalMatrix& a);

Vector zero_vector(std::size_t n);
bool is_zero_vector(std::span<const Rational> v);

}  // namespace dgahom
