#include "dgahom/smith.hpp"

#include <utility>

#include "dgahom/error.hpp"

namespace dgahom {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged integer matrix");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn(at(r, k)) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out.at(r, c) += at(r, k) * other.at(k, c);
    }
  return out;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && sgn(at(r, c)) != 0) return false;
  return true;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a.at(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a.at(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = v;
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

class SmithWorker {
 public:
  explicit SmithWorker(const IntMatrix& m)
      : d_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t rows = d_.rows(), cols = d_.cols();
    std::size_t t = 0;
    for (; t < rows && t < cols; ++t) {
      if (!move_smallest_to(t)) break;
      for (;;) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (sgn(d_.at(i, t)) == 0) continue;
          Integer q = floor_div(d_.at(i, t), d_.at(t, t));
          add_row(i, t, -q);
          if (sgn(d_.at(i, t)) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (sgn(d_.at(t, j)) == 0) continue;
          Integer q = floor_div(d_.at(t, j), d_.at(t, t));
          add_col(j, t, -q);
          if (sgn(d_.at(t, j)) != 0) dirty = true;
        }
        if (dirty) {
          move_smallest_in_cross(t);
          continue;
        }
        // Divisibility: fold any non-multiple into row t and redo.
        bool folded = false;
        for (std::size_t i = t + 1; i < rows && !folded; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (!mpz_divisible_p(d_.at(i, j).get_mpz_t(), d_.at(t, t).get_mpz_t())) {
              add_row(t, i, 1);
              folded = true;
              break;
            }
        if (!folded) break;
      }
      if (sgn(d_.at(t, t)) < 0) negate_row(t);
    }
    SmithForm out;
    out.rank = t;
    out.U = std::move(u_);
    out.D = std::move(d_);
    out.V = std::move(v_);
    return out;
  }

 private:
  static Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }

  bool move_smallest_to(std::size_t t) {
    std::size_t br = 0, bc = 0;
    bool found = false;
    for (std::size_t i = t; i < d_.rows(); ++i)
      for (std::size_t j = t; j < d_.cols(); ++j) {
        if (sgn(d_.at(i, j)) == 0) continue;
        if (!found || cmpabs(d_.at(i, j), d_.at(br, bc)) < 0) {
          br = i;
          bc = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  void move_smallest_in_cross(std::size_t t) {
    std::size_t best_r = t, best_c = t;
    for (std::size_t i = t; i < d_.rows(); ++i)
      if (sgn(d_.at(i, t)) != 0 && (sgn(d_.at(best_r, best_c)) == 0 || cmpabs(d_.at(i, t), d_.at(best_r, best_c)) < 0)) {
        best_r = i;
        best_c = t;
      }
    for (std::size_t j = t; j < d_.cols(); ++j)
      if (sgn(d_.at(t, j)) != 0 && cmpabs(d_.at(t, j), d_.at(best_r, best_c)) < 0) {
        best_r = t;
        best_c = j;
      }
    swap_rows(t, best_r);
    swap_cols(t, best_c);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < d_.cols(); ++c) std::swap(d_.at(a, c), d_.at(b, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_.at(a, c), u_.at(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < d_.rows(); ++r) std::swap(d_.at(r, a), d_.at(r, b));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_.at(r, a), v_.at(r, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_.at(dst, c) += k * d_.at(src, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_.at(dst, c) += k * u_.at(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t r = 0; r < d_.rows(); ++r) d_.at(r, dst) += k * d_.at(r, src);
    for (std::size_t r = 0; r < v_.rows(); ++r) v_.at(r, dst) += k * v_.at(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_.at(r, c) = -d_.at(r, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_.at(r, c) = -u_.at(r, c);
  }

  IntMatrix d_, u_, v_;
};

}  // namespace

SmithForm smith_form(const IntMatrix& m) { return SmithWorker(m).run(); }

bool lattice_contains(const IntMatrix& generators, std::span<const Integer> v) {
  if (v.size() != generators.cols()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from lattice rank");
  SmithForm s = smith_form(generators);
  // x G = v  <=>  (x U^{-1}) D = v V.
  for (std::size_t j = 0; j < generators.cols(); ++j) {
    Integer w = 0;
    for (std::size_t k = 0; k < v.size(); ++k) w += v[k] * s.V.at(k, j);
    if (j < s.rank) {
      if (!mpz_divisible_p(w.get_mpz_t(), s.D.at(j, j).get_mpz_t())) return false;
    } else if (sgn(w) != 0) {
      return false;
    }
  }
  return true;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  auto rows_in = [](const IntMatrix& rows, const IntMatrix& lattice) {
    for (std::size_t r = 0; r < rows.rows(); ++r) {
      std::vector<Integer> v(rows.cols());
      for (std::size_t c = 0; c < rows.cols(); ++c) v[c] = rows.at(r, c);
      if (!lattice_contains(lattice, v)) return false;
    }
    return true;
  };
  return rows_in(a, b) && rows_in(b, a);
}

}  // namespace dgahom
