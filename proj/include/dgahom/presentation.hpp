#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dgahom/element.hpp"
#include "dgahom/ring.hpp"

namespace dgahom {

// A free graded-commutative algebra with a differential given on generators.
// Construction does not validate; run validate_presentation before relying on
// d^2 = 0 or minimality.
class Presentation {
 public:
  Presentation(std::string name, RingPtr ring, std::vector<Element> differential);

  const std::string& name() const { return name_; }
  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return ring_->size(); }
  const Element& d_generator(std::size_t gen) const { return differential_[gen]; }
  const std::vector<Element>& differential() const { return differential_; }

  Element d(const Element& x) const;
  ParamElement d(const ParamElement& x) const;

  Element generator(std::size_t gen) const { return Element::generator(ring_, gen); }
  Element generator(std::string_view name) const { return generator(ring_->index_of(name)); }

  int top_degree() const;
  bool has_weights() const;

 private:
  std::string name_;
  RingPtr ring_;
  std::vector<Element> differential_;
  std::vector<ParamElement> param_differential_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

struct ValidationIssue {
  enum class Kind { LowDegree, DegreeMismatch, DSquaredNonzero, NotDecomposable };
  Kind kind;
  std::string generator;
  std::string detail;
};

const char* issue_kind_name(ValidationIssue::Kind kind);

// Empty iff the presentation is a minimal algebra with every generator in
// degree >= 2, d^2 = 0 and decomposable differential.
std::vector<ValidationIssue> validate_presentation(const Presentation& a);

// All canonical monomials of total degree n, sorted by Monomial ordering.
std::vector<Monomial> monomial_basis(const Ring& ring, long n);
inline std::vector<Monomial> monomial_basis(const Presentation& a, long n) {
  return monomial_basis(*a.ring(), n);
}

}  // namespace dgahom
