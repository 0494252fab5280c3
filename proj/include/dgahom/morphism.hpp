#pragma once

#include <string>
#include <vector>

#include "dgahom/presentation.hpp"

namespace dgahom {

// A degree-0 algebra map between presentations, determined by generator
// images. Whether it commutes with d is computed, never assumed.
class Morphism {
 public:
  // Throws DegreeMismatch for an image of the wrong degree and
  // PresentationMismatch for an image outside the target.
  Morphism(PresentationPtr source, PresentationPtr target, std::vector<Element> images);

  static Morphism identity(const PresentationPtr& a);
  static Morphism zero(const PresentationPtr& source, const PresentationPtr& target);

  const PresentationPtr& source() const { return source_; }
  const PresentationPtr& target() const { return target_; }
  const Element& image(std::size_t gen) const { return images_[gen]; }
  const std::vector<Element>& images() const { return images_; }

  Element apply(const Element& x) const;
  bool is_chain_map() const { return chain_map_; }
  bool is_zero() const;
  bool operator==(const Morphism& other) const;

 private:
  PresentationPtr source_;
  PresentationPtr target_;
  std::vector<Element> images_;
  bool chain_map_ = false;
};

// f after g (x -> f(g(x))). Throws PresentationMismatch.
Morphism compose(const Morphism& f, const Morphism& g);

struct ChainMapDefect {
  std::size_t generator;
  Element residual;  // f(d v) - d(f v)
};

std::vector<ChainMapDefect> check_chain_map(const Morphism& f);

}  // namespace dgahom
