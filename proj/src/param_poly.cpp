#include "dgahom/param_poly.hpp"

#include <algorithm>
#include <set>

#include "dgahom/error.hpp"

namespace dgahom {

namespace {

ParamPoly::Mono multiply_monos(const ParamPoly::Mono& a, const ParamPoly::Mono& b) {
  ParamPoly::Mono out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      std::int32_t e = a[i].second + b[j].second;
      if (e != 0) out.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ParamPoly::ParamPoly(const Rational& c) { add_term({}, c); }

ParamPoly ParamPoly::variable(std::uint32_t index, std::int32_t exp) {
  ParamPoly p;
  if (exp == 0)
    p.add_term({}, Rational(1));
  else
    p.add_term({{index, exp}}, Rational(1));
  return p;
}

ParamPoly ParamPoly::monomial(const Mono& m, const Rational& c) {
  ParamPoly p;
  p.add_term(m, c);
  return p;
}

void ParamPoly::add_term(const Mono& m, const Rational& c) {
  if (dgahom::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (dgahom::is_zero(it->second)) terms_.erase(it);
  }
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ParamPoly::constant_term() const {
  auto it = terms_.find(Mono{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::total_degree() const {
  int best = 0;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    best = std::max(best, d);
  }
  return best;
}

bool ParamPoly::has_negative_exponent() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m)
      if (e < 0) return true;
  return false;
}

std::vector<std::uint32_t> ParamPoly::variables() const {
  std::set<std::uint32_t> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) vars.insert(v);
  return {vars.begin(), vars.end()};
}

Rational ParamPoly::linear_coefficient(std::uint32_t var) const {
  auto it = terms_.find(Mono{{var, 1}});
  return it == terms_.end() ? Rational(0) : it->second;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply_monos(ma, mb), ca * cb);
  return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) {
  *this = *this * other;
  return *this;
}

ParamPoly ParamPoly::pow(unsigned exp) const {
  ParamPoly result(Rational(1));
  ParamPoly base = *this;
  while (exp > 0) {
    if (exp & 1u) result *= base;
    exp >>= 1;
    if (exp > 0) base = base * base;
  }
  return result;
}

Rational ParamPoly::evaluate(std::span<const Rational> values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : m) {
      if (v >= values.size())
        throw Error(ErrorKind::DimensionMismatch, "missing value for unknown " + std::to_string(v));
      term *= rational_pow(values[v], e);
    }
    total += term;
  }
  return total;
}

ParamPoly ParamPoly::substitute(std::span<const ParamPoly> values) const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) {
    ParamPoly term(c);
    for (const auto& [v, e] : m) {
      if (v >= values.size())
        throw Error(ErrorKind::DimensionMismatch, "missing value for unknown " + std::to_string(v));
      const ParamPoly& val = values[v];
      if (e >= 0) {
        term *= val.pow(static_cast<unsigned>(e));
      } else {
        if (val.terms_.size() != 1)
          throw Error(ErrorKind::PreconditionViolated,
                      "negative power of a value that is not a single term");
        const auto& [vm, vc] = *val.terms_.begin();
        Mono inv;
        for (const auto& [w, we] : vm) inv.emplace_back(w, -we);
        ParamPoly inverse = ParamPoly::monomial(inv, Rational(1) / vc);
        term *= inverse.pow(static_cast<unsigned>(-e));
      }
    }
    out += term;
  }
  return out;
}

std::string ParamPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    bool negative = sgn(c) < 0;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    bool unit = mag == 1 && !m.empty();
    if (!unit) s += mag.get_str();
    bool need_star = !unit;
    for (const auto& [v, e] : m) {
      if (need_star) s += '*';
      need_star = true;
      s += v < names.size() ? names[v] : "u" + std::to_string(v);
      if (e != 1) s += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
  }
  return s;
}

}  // namespace dgahom
