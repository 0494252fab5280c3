#include "dgahom/morphism.hpp"

namespace dgahom {

Morphism::Morphism(PresentationPtr source, PresentationPtr target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  const Ring& src = *source_->ring();
  if (images_.size() != src.size())
    throw Error(ErrorKind::DimensionMismatch, "morphism needs one image per source generator");
  for (std::size_t g = 0; g < src.size(); ++g) {
    Element& img = images_[g];
    if (img.is_zero()) {
      img = Element::zero(target_->ring());
      continue;
    }
    if (!same_ring(img.ring(), target_->ring()))
      throw Error(ErrorKind::PresentationMismatch, "image of " + src.name(g) + " is not in the target");
    auto deg = img.homogeneous_degree();
    if (!deg || *deg != src.degree(g))
      throw Error(ErrorKind::DegreeMismatch, "image of " + src.name(g) + " must be homogeneous of degree " +
                                                 std::to_string(src.degree(g)));
  }
  chain_map_ = check_chain_map(*this).empty();
}

Morphism Morphism::identity(const PresentationPtr& a) {
  std::vector<Element> images;
  for (std::size_t g = 0; g < a->size(); ++g) images.push_back(a->generator(g));
  return Morphism(a, a, std::move(images));
}

Morphism Morphism::zero(const PresentationPtr& source, const PresentationPtr& target) {
  return Morphism(source, target, std::vector<Element>(source->size(), Element::zero(target->ring())));
}

Element Morphism::apply(const Element& x) const {
  if (x.is_zero()) return Element::zero(target_->ring());
  if (!same_ring(x.ring(), source_->ring()))
    throw Error(ErrorKind::PresentationMismatch, "element is not in the morphism's source");
  return substitute(images_, target_->ring(), x);
}

bool Morphism::is_zero() const {
  for (const auto& img : images_)
    if (!img.is_zero()) return false;
  return true;
}

bool Morphism::operator==(const Morphism& other) const {
  return same_ring(source_->ring(), other.source_->ring()) &&
         same_ring(target_->ring(), other.target_->ring()) && images_ == other.images_;
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (!same_ring(g.target()->ring(), f.source()->ring()))
    throw Error(ErrorKind::PresentationMismatch, "composition of non-composable morphisms");
  std::vector<Element> images;
  for (std::size_t v = 0; v < g.source()->size(); ++v) images.push_back(f.apply(g.image(v)));
  return Morphism(g.source(), f.target(), std::move(images));
}

std::vector<ChainMapDefect> check_chain_map(const Morphism& f) {
  std::vector<ChainMapDefect> defects;
  const Presentation& src = *f.source();
  const Presentation& tgt = *f.target();
  for (std::size_t v = 0; v < src.size(); ++v) {
    Element residual = f.apply(src.d_generator(v)) - tgt.d(f.image(v));
    if (!residual.is_zero()) defects.push_back({v, std::move(residual)});
  }
  return defects;
}

}  // namespace dgahom
