#include "dgahom/linalg.hpp"

#include <algorithm>
#include <utility>

#include "dgahom/error.hpp"

namespace dgahom {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace(i, Rational(1));
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw Error(ErrorKind::DimensionMismatch, "column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r)
      if (!dgahom::is_zero(columns[c][r])) m.data_[r].emplace(c, columns[c][r]);
  }
  return m;
}

Rational RationalMatrix::get(std::size_t r, std::size_t c) const {
  auto it = data_.at(r).find(c);
  return it == data_[r].end() ? Rational(0) : it->second;
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::DimensionMismatch, "index out of range");
  if (dgahom::is_zero(v))
    data_[r].erase(c);
  else
    data_[r][c] = v;
}

void RationalMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::DimensionMismatch, "index out of range");
  if (dgahom::is_zero(v)) return;
  auto [it, inserted] = data_[r].try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (dgahom::is_zero(it->second)) data_[r].erase(it);
  }
}

Vector RationalMatrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = get(r, c);
  return out;
}

Vector RationalMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from column count");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out[r] += v * x[c];
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [k, v] : data_[r])
      for (const auto& [c, w] : other.data_[k]) out.add(r, c, v * w);
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool RationalMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    if (data_[r].size() != 1 || data_[r].begin()->first != r || data_[r].begin()->second != 1)
      return false;
  return true;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Row& row) { return row.empty(); });
}

struct RrefEngine {
  static RrefResult run(RationalMatrix m) {
    RrefResult result;
    std::size_t next = 0;
    auto& rows = m.data_;
    for (std::size_t c = 0; c < m.cols_ && next < m.rows_; ++c) {
      std::size_t p = next;
      while (p < m.rows_ && !rows[p].count(c)) ++p;
      if (p == m.rows_) continue;
      std::swap(rows[p], rows[next]);
      auto& prow = rows[next];
      const Rational inv = 1 / prow.at(c);
      for (auto& [k, v] : prow) v *= inv;
      for (std::size_t r = 0; r < m.rows_; ++r) {
        if (r == next) continue;
        auto it = rows[r].find(c);
        if (it == rows[r].end()) continue;
        const Rational factor = it->second;
        for (const auto& [k, v] : prow) {
          auto [jt, inserted] = rows[r].try_emplace(k, -factor * v);
          if (!inserted) {
            jt->second -= factor * v;
            if (dgahom::is_zero(jt->second)) rows[r].erase(jt);
          }
        }
      }
      result.pivot_columns.push_back(c);
      ++next;
    }
    result.reduced = std::move(m);
    return result;
  }
};

RrefResult rref(const RationalMatrix& a) { return RrefEngine::run(a); }

namespace {

std::vector<Vector> kernel_from_rref(const RrefResult& r, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : r.pivot_columns)
    if (c < cols) is_pivot[c] = true;
  std::vector<Vector> kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivot_columns.size(); ++i) {
      std::size_t pc = r.pivot_columns[i];
      if (pc >= cols) continue;
      v[pc] = -r.reduced.get(i, f);
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace

LinearSolution rref_solve(const RationalMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length differs from row count");
  const std::size_t n = a.cols();
  RationalMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& [c, v] : a.row(r)) aug.set(r, c, v);
    aug.set(r, n, b[r]);
  }
  RrefResult red = rref(aug);
  LinearSolution out;
  for (std::size_t c : red.pivot_columns)
    if (c < n) out.pivots.push_back(c);
  out.rank = out.pivots.size();
  out.kernel = kernel_from_rref(red, n);
  const bool inconsistent = !red.pivot_columns.empty() && red.pivot_columns.back() == n;
  if (!inconsistent) {
    Vector x(n);
    for (std::size_t i = 0; i < out.pivots.size(); ++i) x[out.pivots[i]] = red.reduced.get(i, n);
    out.particular = std::move(x);
  }
  return out;
}

std::vector<Vector> kernel_basis(const RationalMatrix& a) {
  return kernel_from_rref(rref(a), a.cols());
}

std::size_t rank(const RationalMatrix& a) { return rref(a).pivot_columns.size(); }

Vector zero_vector(std::size_t n) { return Vector(n); }

bool is_zero_vector(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_zero(q); });
}

}  // namespace dgahom
