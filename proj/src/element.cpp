#include "dgahom/element.hpp"

namespace dgahom {

Element demote(const ParamElement& x) {
  Element out(x.ring());
  for (const auto& [m, c] : x.terms()) {
    if (!c.is_constant())
      throw Error(ErrorKind::PreconditionViolated, "element still depends on unknowns");
    out.add_term(m, c.constant_term());
  }
  return out;
}

Element evaluate(const ParamElement& x, std::span<const Rational> values) {
  Element out(x.ring());
  for (const auto& [m, c] : x.terms()) out.add_term(m, c.evaluate(values));
  return out;
}

namespace {

std::string coefficient_text(const Rational& c, bool& negative) {
  negative = sgn(c) < 0;
  return Rational(abs(c)).get_str();
}

std::string coefficient_text(const ParamPoly& c, bool& negative, const std::vector<std::string>& names) {
  negative = false;
  if (c.is_constant()) return coefficient_text(c.constant_term(), negative);
  if (c.terms().size() == 1) {
    const auto& [m, q] = *c.terms().begin();
    negative = sgn(q) < 0;
    return ParamPoly::monomial(m, abs(q)).to_string(names);
  }
  return "(" + c.to_string(names) + ")";
}

template <class C>
std::string render(const BasicElement<C>& x, const std::vector<std::string>& names) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    bool negative = false;
    std::string coef;
    if constexpr (std::is_same_v<C, Rational>)
      coef = coefficient_text(c, negative);
    else
      coef = coefficient_text(c, negative, names);
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    if (m.is_unit()) {
      s += coef;
    } else {
      if (coef != "1") s += coef + "*";
      s += to_string(*x.ring(), m);
    }
  }
  return s;
}

}  // namespace

template <>
std::string to_string(const BasicElement<Rational>& x, const std::vector<std::string>& names) {
  return render(x, names);
}

template <>
std::string to_string(const BasicElement<ParamPoly>& x, const std::vector<std::string>& names) {
  return render(x, names);
}

}  // namespace dgahom
