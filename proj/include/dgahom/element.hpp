#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgahom/error.hpp"
#include "dgahom/monomial.hpp"
#include "dgahom/param_poly.hpp"
#include "dgahom/rational.hpp"
#include "dgahom/ring.hpp"

namespace dgahom {

// A finite linear combination of canonical monomials with coefficients in C
// (Rational or ParamPoly). Zero coefficients are never stored, so structural
// equality is equality of elements.
template <class C>
class BasicElement {
 public:
  using Terms = std::map<Monomial, C>;

  BasicElement() = default;
  explicit BasicElement(RingPtr ring) : ring_(std::move(ring)) {}

  static BasicElement zero(RingPtr ring) { return BasicElement(std::move(ring)); }
  static BasicElement one(RingPtr ring) { return monomial(std::move(ring), Monomial(), C(1)); }
  static BasicElement generator(RingPtr ring, std::size_t gen) {
    return monomial(std::move(ring), Monomial::generator(gen), C(1));
  }
  static BasicElement monomial(RingPtr ring, const Monomial& m, const C& c) {
    BasicElement e(std::move(ring));
    e.add_term(m, c);
    return e;
  }

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const Monomial& m, const C& c) {
    if (dgahom::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (dgahom::is_zero(it->second)) terms_.erase(it);
    }
  }

  // nullopt for a non-homogeneous element; zero reports degree 0.
  std::optional<long> homogeneous_degree() const {
    std::optional<long> deg;
    for (const auto& [m, c] : terms_) {
      long d = m.degree(*ring_);
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
    return deg.value_or(0);
  }

  BasicElement component(long degree) const {
    BasicElement out(ring_);
    for (const auto& [m, c] : terms_)
      if (m.degree(*ring_) == degree) out.terms_.emplace(m, c);
    return out;
  }

  BasicElement& operator+=(const BasicElement& other) {
    check_compatible(other);
    if (!ring_) ring_ = other.ring_;
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  BasicElement& operator-=(const BasicElement& other) {
    check_compatible(other);
    if (!ring_) ring_ = other.ring_;
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }
  BasicElement operator-() const {
    BasicElement out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }
  friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
  friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }

  BasicElement scaled(const C& s) const {
    BasicElement out(ring_);
    if (dgahom::is_zero(s)) return out;
    for (const auto& [m, c] : terms_) out.add_term(m, c * s);
    return out;
  }

  bool operator==(const BasicElement& other) const {
    if (terms_.empty() && other.terms_.empty()) return true;
    return same_ring(ring_, other.ring_) && terms_ == other.terms_;
  }

  void check_compatible(const BasicElement& other) const {
    if (ring_ && other.ring_ && !same_ring(ring_, other.ring_))
      throw Error(ErrorKind::PresentationMismatch, "elements live in different algebras");
  }

 private:
  RingPtr ring_;
  Terms terms_;
};

using Element = BasicElement<Rational>;
using ParamElement = BasicElement<ParamPoly>;

template <class C>
BasicElement<C> mul(const BasicElement<C>& a, const BasicElement<C>& b) {
  a.check_compatible(b);
  const RingPtr& ring = a.ring() ? a.ring() : b.ring();
  BasicElement<C> out(ring);
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      SignedMonomial p = multiply(*ring, ma, mb);
      if (p.sign == 0) continue;
      C c = ca * cb;
      out.add_term(p.monomial, p.sign > 0 ? c : C(-c));
    }
  }
  return out;
}

template <class C>
BasicElement<C> operator*(const BasicElement<C>& a, const BasicElement<C>& b) {
  return mul(a, b);
}

template <class C>
BasicElement<C> power(const BasicElement<C>& x, unsigned exp) {
  BasicElement<C> result = BasicElement<C>::one(x.ring());
  BasicElement<C> base = x;
  while (exp > 0) {
    if (exp & 1u) result = mul(result, base);
    exp >>= 1;
    if (exp > 0) base = mul(base, base);
  }
  return result;
}

template <class C>
BasicElement<C> monomial_element(const RingPtr& ring, const Monomial& m) {
  return BasicElement<C>::monomial(ring, m, C(1));
}

inline ParamElement promote(const Element& x) {
  ParamElement out(x.ring());
  for (const auto& [m, c] : x.terms()) out.add_term(m, ParamPoly(c));
  return out;
}

// Throws PreconditionViolated when some coefficient is not constant.
Element demote(const ParamElement& x);

// Coefficients evaluated at concrete values of the scalar unknowns.
Element evaluate(const ParamElement& x, std::span<const Rational> values);

// Sign rule for a derivation: theta(ab) = theta(a) b + (-1)^{k|a|} a theta(b).
// images[g] is theta on generator g; k is the derivation's degree.
template <class C>
BasicElement<C> apply_derivation(const std::vector<BasicElement<C>>& images, int degree,
                                 const BasicElement<C>& x) {
  const RingPtr& ring = x.ring();
  BasicElement<C> out(ring);
  const bool odd_derivation = degree % 2 != 0;
  for (const auto& [m, c] : x.terms()) {
    const auto& fs = m.factors();
    long prefix_degree = 0;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      const Factor f = fs[j];
      const BasicElement<C>& theta_g = images[f.gen];
      if (!theta_g.is_zero()) {
        std::vector<Factor> left(fs.begin(), fs.begin() + static_cast<long>(j));
        if (f.exp > 1) left.push_back(Factor{f.gen, f.exp - 1});
        std::vector<Factor> right(fs.begin() + static_cast<long>(j) + 1, fs.end());
        // theta(g^e) = e g^{e-1} theta(g) for even g; the left block already
        // carries g^{e-1} in canonical position.
        C scale = C(static_cast<long>(f.exp)) * c;
        if (odd_derivation && prefix_degree % 2 != 0) scale = -scale;
        BasicElement<C> left_e =
            BasicElement<C>::monomial(ring, Monomial::from_sorted(std::move(left)), scale);
        BasicElement<C> right_e =
            BasicElement<C>::monomial(ring, Monomial::from_sorted(std::move(right)), C(1));
        out += mul(mul(left_e, theta_g), right_e);
      }
      prefix_degree += static_cast<long>(f.exp) * ring->degree(f.gen);
    }
  }
  return out;
}

// Algebra map determined by generator images (images indexed by the source
// ring's generators, all living in target).
template <class C>
BasicElement<C> substitute(const std::vector<BasicElement<C>>& images, const RingPtr& target,
                           const BasicElement<C>& x) {
  BasicElement<C> out(target);
  std::map<std::pair<std::uint32_t, std::uint32_t>, BasicElement<C>> powers;
  auto power_of = [&](const Factor& f) -> const BasicElement<C>& {
    auto key = std::make_pair(f.gen, f.exp);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, power(images[f.gen], f.exp)).first;
    return it->second;
  };
  for (const auto& [m, c] : x.terms()) {
    bool vanishes = false;
    for (const Factor& f : m.factors())
      if (images[f.gen].is_zero()) { vanishes = true; break; }
    if (vanishes) continue;
    BasicElement<C> term = BasicElement<C>::monomial(target, Monomial(), c);
    for (const Factor& f : m.factors()) {
      term = mul(term, power_of(f));
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

template <class C>
std::string to_string(const BasicElement<C>& x, const std::vector<std::string>& unknown_names = {});

}  // namespace dgahom
