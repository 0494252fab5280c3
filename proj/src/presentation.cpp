#include "dgahom/presentation.hpp"

#include <algorithm>
#include <functional>

namespace dgahom {

Presentation::Presentation(std::string name, RingPtr ring, std::vector<Element> differential)
    : name_(std::move(name)), ring_(std::move(ring)), differential_(std::move(differential)) {
  if (differential_.size() != ring_->size())
    throw Error(ErrorKind::DimensionMismatch, "differential must be given on every generator");
  for (auto& e : differential_) {
    if (e.is_zero()) {
      e = Element::zero(ring_);
    } else if (!same_ring(e.ring(), ring_)) {
      throw Error(ErrorKind::PresentationMismatch, "differential image outside the algebra");
    }
  }
  param_differential_.reserve(differential_.size());
  for (const auto& e : differential_) param_differential_.push_back(promote(e));
}

Element Presentation::d(const Element& x) const {
  if (x.is_zero()) return Element::zero(ring_);
  x.check_compatible(Element::zero(ring_));
  return apply_derivation(differential_, 1, x);
}

ParamElement Presentation::d(const ParamElement& x) const {
  if (x.is_zero()) return ParamElement::zero(ring_);
  x.check_compatible(ParamElement::zero(ring_));
  return apply_derivation(param_differential_, 1, x);
}

int Presentation::top_degree() const {
  int top = 0;
  for (const auto& g : ring_->generators()) top = std::max(top, g.degree);
  return top;
}

bool Presentation::has_weights() const {
  return std::all_of(ring_->generators().begin(), ring_->generators().end(),
                     [](const Generator& g) { return g.weight.has_value(); });
}

const char* issue_kind_name(ValidationIssue::Kind kind) {
  switch (kind) {
    case ValidationIssue::Kind::LowDegree: return "low-degree";
    case ValidationIssue::Kind::DegreeMismatch: return "degree-mismatch";
    case ValidationIssue::Kind::DSquaredNonzero: return "d-squared-nonzero";
    case ValidationIssue::Kind::NotDecomposable: return "not-decomposable";
  }
  return "issue";
}

std::vector<ValidationIssue> validate_presentation(const Presentation& a) {
  std::vector<ValidationIssue> issues;
  const Ring& ring = *a.ring();
  for (std::size_t g = 0; g < ring.size(); ++g) {
    const std::string& name = ring.name(g);
    if (ring.degree(g) < 2)
      issues.push_back({ValidationIssue::Kind::LowDegree, name,
                        "degree " + std::to_string(ring.degree(g)) + " < 2"});
    const Element& dg = a.d_generator(g);
    if (dg.is_zero()) continue;
    for (const auto& [m, c] : dg.terms()) {
      long deg = m.degree(ring);
      if (deg != ring.degree(g) + 1) {
        issues.push_back({ValidationIssue::Kind::DegreeMismatch, name,
                          "term " + to_string(ring, m) + " has degree " + std::to_string(deg) +
                              ", expected " + std::to_string(ring.degree(g) + 1)});
      }
      if (m.length() < 2) {
        issues.push_back({ValidationIssue::Kind::NotDecomposable, name,
                          "term " + to_string(ring, m) + " is indecomposable"});
      }
    }
    Element dd = a.d(dg);
    if (!dd.is_zero())
      issues.push_back({ValidationIssue::Kind::DSquaredNonzero, name, "d(d " + name + ") = " + to_string(dd)});
  }
  return issues;
}

std::vector<Monomial> monomial_basis(const Ring& ring, long n) {
  std::vector<Monomial> out;
  if (n < 0) return out;
  std::vector<Factor> current;
  std::function<void(std::size_t, long)> rec = [&](std::size_t gen, long remaining) {
    if (remaining == 0) {
      out.push_back(Monomial::from_sorted(current));
      return;
    }
    if (gen == ring.size()) return;
    const long deg = ring.degree(gen);
    const long max_exp = ring.odd(gen) ? 1 : remaining / deg;
    for (long e = std::min(max_exp, remaining / deg); e >= 0; --e) {
      if (e > 0) current.push_back(Factor{static_cast<std::uint32_t>(gen), static_cast<std::uint32_t>(e)});
      rec(gen + 1, remaining - e * deg);
      if (e > 0) current.pop_back();
    }
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dgahom
