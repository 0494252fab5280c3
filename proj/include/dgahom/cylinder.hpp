#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "dgahom/morphism.hpp"
#include "dgahom/presentation.hpp"

namespace dgahom {

// The path object Lambda(V + Vbar + Vhat) of a presentation, with
// |vbar| = |v| - 1, d vbar = vhat, d vhat = 0. Generator names are v,
// "v.bar" and "v.hat". Bar generators may sit in degree 1.
class CylinderAlgebra {
 public:
  enum class Role { Plain, Bar, Hat };

  explicit CylinderAlgebra(PresentationPtr base);

  const PresentationPtr& base() const { return base_; }
  const PresentationPtr& presentation() const { return cylinder_; }
  const RingPtr& ring() const { return cylinder_->ring(); }

  std::size_t plain(std::size_t v) const { return plain_[v]; }
  std::size_t bar(std::size_t v) const { return bar_[v]; }
  std::size_t hat(std::size_t v) const { return hat_[v]; }
  Role role(std::size_t gen) const { return role_[gen]; }
  std::size_t base_generator(std::size_t gen) const { return base_of_[gen]; }

  Element d(const Element& x) const { return cylinder_->d(x); }
  // Lambda V -> cylinder on plain generators.
  Element include(const Element& x) const;
  Element plain_generator(std::size_t v) const { return Element::generator(ring(), plain(v)); }
  Element bar_generator(std::size_t v) const { return Element::generator(ring(), bar(v)); }
  Element hat_generator(std::size_t v) const { return Element::generator(ring(), hat(v)); }

  // Degree -1 derivation: v -> vbar, vbar -> 0, vhat -> 0.
  Element i(const Element& x) const;
  // gamma = d i + i d, a degree 0 derivation.
  Element gamma(const Element& x) const;
  // sum_n gamma^n / n!, evaluated as the algebra map it is.
  Element alpha(const Element& x) const;
  const Element& alpha_generator(std::size_t v) const;
  // alpha(v) - v - vhat.
  Element xi(std::size_t v) const;

 private:
  PresentationPtr base_;
  PresentationPtr cylinder_;
  std::vector<std::size_t> plain_, bar_, hat_, base_of_;
  std::vector<Role> role_;
  std::vector<Element> i_images_;
  std::vector<Element> gamma_images_;
  mutable std::mutex alpha_mutex_;
  mutable std::vector<std::optional<Element>> alpha_plain_;
};

using CylinderPtr = std::shared_ptr<const CylinderAlgebra>;

CylinderPtr build_cylinder(const PresentationPtr& base);
// Reuses a live cylinder over the same presentation object when one exists.
CylinderPtr shared_cylinder(const PresentationPtr& base);

// A homotopy out of the sub-cylinder on the generators marked in `domain`:
// plain v -> start(v), vbar -> bar(v), vhat -> d bar(v).
class Homotopy {
 public:
  // Throws DegreeMismatch, PresentationMismatch, PreconditionViolated
  // (nonzero bar outside the domain).
  Homotopy(CylinderPtr cylinder, Morphism start, std::vector<bool> domain, std::vector<Element> bars);

  static Homotopy constant(CylinderPtr cylinder, Morphism start, std::vector<bool> domain);

  const CylinderPtr& cylinder() const { return cylinder_; }
  const Morphism& start() const { return start_; }
  const std::vector<bool>& domain() const { return domain_; }
  bool in_domain(std::size_t v) const { return domain_[v]; }
  bool full_domain() const;
  const Element& bar(std::size_t v) const { return bars_[v]; }
  const std::vector<Element>& bars() const { return bars_; }

  // Throws PreconditionViolated when x uses generators outside the domain.
  Element apply(const Element& x) const;
  Element end_image(std::size_t v) const;
  // Requires the full domain.
  Morphism end_map() const;
  // The homotopy as an algebra map out of the cylinder; requires the full domain.
  Morphism as_morphism() const;

  Homotopy restricted(std::vector<bool> domain) const;
  Homotopy with_bar(std::size_t v, Element bar) const;

 private:
  CylinderPtr cylinder_;
  Morphism start_;
  std::vector<bool> domain_;
  std::vector<Element> bars_;
  std::vector<Element> images_;  // on cylinder generators; zero off the domain
};

// Throws NotACofibration when the marked generators do not span a
// d-closed subalgebra.
void check_cofibration(const Presentation& a, const std::vector<bool>& subalgebra);

// Homotopy extension along Lambda V0 -> Lambda V: keeps h's bars on the
// subalgebra and puts zero bars elsewhere. Throws NotACofibration,
// PreconditionViolated (h does not start at f on the subalgebra).
Homotopy extend_homotopy_cofibration(const std::vector<bool>& subalgebra, const Morphism& f, const Homotopy& h);

}  // namespace dgahom
