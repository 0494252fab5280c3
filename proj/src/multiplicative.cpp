#include "dgahom/multiplicative.hpp"

#include <algorithm>

#include "dgahom/error.hpp"
#include "dgahom/smith.hpp"

namespace dgahom {

namespace {

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::UnsupportedShape, "exponent out of machine range");
  return z.get_si();
}

bool exact_root(const Integer& z, unsigned long d, Integer& root) {
  return mpz_root(root.get_mpz_t(), z.get_mpz_t(), d) != 0;
}

}  // namespace

std::vector<Rational> rational_roots(const Rational& q, unsigned long d, bool& non_rational) {
  non_rational = false;
  if (d == 0) throw Error(ErrorKind::PreconditionViolated, "root of degree zero");
  if (is_zero(q)) return {Rational(0)};
  const bool negative = sgn(q) < 0;
  if (negative && d % 2 == 0) return {};
  Integer num = abs(q.get_num()), den = q.get_den();
  Integer rn, rd;
  if (!exact_root(num, d, rn) || !exact_root(den, d, rd)) {
    non_rational = true;
    return {};
  }
  Rational r(rn, rd);
  r.canonicalize();
  if (negative) return {Rational(-r)};
  if (d % 2 == 0) return {Rational(-r), r};
  return {r};
}

MultiplicativeSolution solve_multiplicative_system(const MultiplicativeSystem& system) {
  const std::size_t k = system.unknowns.size();
  const std::size_t m = system.equations.size();
  IntMatrix e(m, k);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& eq = system.equations[i];
    if (eq.exponents.size() != k) throw Error(ErrorKind::DimensionMismatch, "exponent vector length differs from unknown count");
    if (is_zero(eq.constant)) throw Error(ErrorKind::PreconditionViolated, "multiplicative equation with zero constant");
    for (std::size_t j = 0; j < k; ++j) e.at(i, j) = eq.exponents[j];
  }
  SmithForm s = smith_form(e);

  MultiplicativeSolution out;
  // Transformed constants c'_l = prod_i c_i^{U_li}.
  std::vector<Rational> transformed(m, Rational(1));
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t i = 0; i < m; ++i)
      if (sgn(s.U.at(l, i)) != 0) transformed[l] *= rational_pow(system.equations[i].constant, to_long(s.U.at(l, i)));

  for (std::size_t l = s.rank; l < m; ++l) {
    if (transformed[l] != 1) {
      out.status = MultiplicativeSolution::Status::Unsolvable;
      out.reason = "equations are multiplicatively inconsistent (combined constant " + transformed[l].get_str() + " must be 1)";
      return out;
    }
  }

  std::vector<std::vector<Rational>> y_choices(s.rank);
  bool non_rational = false;
  for (std::size_t l = 0; l < s.rank; ++l) {
    bool nr = false;
    const unsigned long d = s.D.at(l, l).get_ui();
    y_choices[l] = rational_roots(transformed[l], d, nr);
    if (y_choices[l].empty()) {
      if (nr) {
        non_rational = true;
        out.reason = "no rational " + std::to_string(d) + "-th root of " + transformed[l].get_str();
      } else {
        out.status = MultiplicativeSolution::Status::Unsolvable;
        out.reason = "even root of the negative number " + transformed[l].get_str();
        return out;
      }
    }
  }
  if (non_rational) {
    out.status = MultiplicativeSolution::Status::NonRationalRoot;
    return out;
  }

  for (std::size_t l = s.rank; l < k; ++l) {
    std::vector<long> dir(k);
    for (std::size_t j = 0; j < k; ++j) dir[j] = to_long(s.V.at(j, l));
    out.free_directions.push_back(std::move(dir));
  }

  // Enumerate root choices; x_j = prod_{l < rank} y_l^{V_jl} (free y set to 1).
  std::vector<std::size_t> choice(s.rank, 0);
  for (;;) {
    std::vector<Rational> x(k, Rational(1));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < s.rank; ++l)
        if (sgn(s.V.at(j, l)) != 0) x[j] *= rational_pow(y_choices[l][choice[l]], to_long(s.V.at(j, l)));
    out.points.push_back(std::move(x));
    std::size_t l = 0;
    while (l < s.rank && ++choice[l] == y_choices[l].size()) choice[l++] = 0;
    if (l == s.rank) break;
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

EliminationResult eliminate_defined_unknowns(const MultiplicativeSystem& system,
                                             const std::vector<std::size_t>& candidates) {
  const std::size_t k = system.unknowns.size();
  std::vector<MultiplicativeEquation> eqs = system.equations;
  std::vector<bool> gone(k, false);
  EliminationResult out;
  for (std::size_t u : candidates) {
    if (u >= k || gone[u]) continue;
    auto def = std::find_if(eqs.begin(), eqs.end(), [&](const MultiplicativeEquation& eq) {
      return eq.exponents[u] == 1 || eq.exponents[u] == -1;
    });
    if (def == eqs.end()) continue;
    // x_u^s * rest = c  =>  x_u = c^s * rest^{-s}, with s = +-1.
    const long s = def->exponents[u];
    MultiplicativeEquation definition;
    definition.exponents.assign(k, 0);
    for (std::size_t j = 0; j < k; ++j)
      if (j != u) definition.exponents[j] = -s * def->exponents[j];
    definition.constant = s > 0 ? def->constant : Rational(1 / def->constant);
    eqs.erase(def);
    for (auto& eq : eqs) {
      const long a = eq.exponents[u];
      if (a == 0) continue;
      eq.exponents[u] = 0;
      for (std::size_t j = 0; j < k; ++j) eq.exponents[j] += a * definition.exponents[j];
      eq.constant /= rational_pow(definition.constant, a);
    }
    // Earlier definitions referring to u are rewritten too, so every stored
    // definition is expressed in kept unknowns only.
    for (auto& prev : out.definitions) {
      const long a = prev.exponents[u];
      if (a == 0) continue;
      prev.exponents[u] = 0;
      for (std::size_t j = 0; j < k; ++j) prev.exponents[j] += a * definition.exponents[j];
      prev.constant *= rational_pow(definition.constant, a);
    }
    gone[u] = true;
    out.eliminated.push_back(u);
    out.definitions.push_back(std::move(definition));
  }
  for (std::size_t j = 0; j < k; ++j)
    if (!gone[j]) {
      out.kept.push_back(j);
      out.reduced.unknowns.push_back(system.unknowns[j]);
    }
  for (const auto& eq : eqs) {
    MultiplicativeEquation r;
    r.constant = eq.constant;
    bool trivial = true;
    for (std::size_t j : out.kept) {
      r.exponents.push_back(eq.exponents[j]);
      if (eq.exponents[j] != 0) trivial = false;
    }
    if (trivial && r.constant == 1) continue;
    out.reduced.equations.push_back(std::move(r));
  }
  return out;
}

}  // namespace dgahom
