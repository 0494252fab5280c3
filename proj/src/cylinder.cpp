#include "dgahom/cylinder.hpp"

#include <algorithm>
#include <map>

#include "dgahom/error.hpp"

namespace dgahom {

namespace {

Element translate(const Element& x, const RingPtr& ring, const std::vector<std::size_t>& index_map) {
  // Generator relabelling that preserves the relative order of generators,
  // so canonical monomials stay canonical.
  Element out = Element::zero(ring);
  for (const auto& [m, c] : x.terms()) {
    std::vector<Factor> fs;
    fs.reserve(m.size());
    for (const Factor& f : m.factors()) fs.push_back(Factor{static_cast<std::uint32_t>(index_map[f.gen]), f.exp});
    out.add_term(Monomial::from_sorted(std::move(fs)), c);
  }
  return out;
}

}  // namespace

CylinderAlgebra::CylinderAlgebra(PresentationPtr base) : base_(std::move(base)) {
  const Ring& br = *base_->ring();
  std::vector<Generator> gens;
  for (const auto& g : br.generators()) {
    gens.push_back(g);
    Generator b = g;
    b.name = g.name + ".bar";
    b.degree = g.degree - 1;
    gens.push_back(b);
    Generator h = g;
    h.name = g.name + ".hat";
    gens.push_back(h);
  }
  RingPtr ring = make_ring(std::move(gens));
  const std::size_t n = br.size();
  plain_.resize(n);
  bar_.resize(n);
  hat_.resize(n);
  base_of_.resize(ring->size());
  role_.resize(ring->size());
  for (std::size_t v = 0; v < n; ++v) {
    plain_[v] = ring->index_of(br.name(v));
    bar_[v] = ring->index_of(br.name(v) + ".bar");
    hat_[v] = ring->index_of(br.name(v) + ".hat");
    base_of_[plain_[v]] = base_of_[bar_[v]] = base_of_[hat_[v]] = v;
    role_[plain_[v]] = Role::Plain;
    role_[bar_[v]] = Role::Bar;
    role_[hat_[v]] = Role::Hat;
  }
  std::vector<Element> diff(ring->size(), Element::zero(ring));
  for (std::size_t v = 0; v < n; ++v) {
    diff[plain_[v]] = translate(base_->d_generator(v), ring, plain_);
    diff[bar_[v]] = Element::generator(ring, hat_[v]);
  }
  cylinder_ = std::make_shared<const Presentation>(base_->name() + "^I", ring, std::move(diff));

  i_images_.assign(ring->size(), Element::zero(ring));
  for (std::size_t v = 0; v < n; ++v) i_images_[plain_[v]] = Element::generator(ring, bar_[v]);
  gamma_images_.assign(ring->size(), Element::zero(ring));
  for (std::size_t v = 0; v < n; ++v)
    gamma_images_[plain_[v]] = Element::generator(ring, hat_[v]) + i(cylinder_->d_generator(plain_[v]));
  alpha_plain_.resize(n);
}

Element CylinderAlgebra::include(const Element& x) const {
  if (x.is_zero()) return Element::zero(ring());
  x.check_compatible(Element::zero(base_->ring()));
  return translate(x, ring(), plain_);
}

Element CylinderAlgebra::i(const Element& x) const {
  if (x.is_zero()) return Element::zero(ring());
  return apply_derivation(i_images_, -1, x);
}

Element CylinderAlgebra::gamma(const Element& x) const {
  if (x.is_zero()) return Element::zero(ring());
  return apply_derivation(gamma_images_, 0, x);
}

const Element& CylinderAlgebra::alpha_generator(std::size_t v) const {
  std::lock_guard lock(alpha_mutex_);
  auto& slot = alpha_plain_.at(v);
  if (!slot) {
    Element term = plain_generator(v);
    Element sum = term;
    for (long k = 1; !term.is_zero(); ++k) {
      term = gamma(term).scaled(Rational(1, k));
      sum += term;
    }
    slot = std::move(sum);
  }
  return *slot;
}

Element CylinderAlgebra::alpha(const Element& x) const {
  if (x.is_zero()) return Element::zero(ring());
  std::vector<Element> images(ring()->size(), Element::zero(ring()));
  std::vector<bool> seen(ring()->size(), false);
  for (const auto& [m, c] : x.terms())
    for (const Factor& f : m.factors()) {
      if (seen[f.gen]) continue;
      seen[f.gen] = true;
      images[f.gen] = role_[f.gen] == Role::Plain ? alpha_generator(base_of_[f.gen])
                                                   : Element::generator(ring(), f.gen);
    }
  return substitute(images, ring(), x);
}

Element CylinderAlgebra::xi(std::size_t v) const {
  return alpha_generator(v) - plain_generator(v) - hat_generator(v);
}

CylinderPtr build_cylinder(const PresentationPtr& base) { return std::make_shared<const CylinderAlgebra>(base); }

Homotopy::Homotopy(CylinderPtr cylinder, Morphism start, std::vector<bool> domain, std::vector<Element> bars)
    : cylinder_(std::move(cylinder)), start_(std::move(start)), domain_(std::move(domain)), bars_(std::move(bars)) {
  const Presentation& src = *cylinder_->base();
  const Presentation& tgt = *start_.target();
  if (!same_ring(start_.source()->ring(), src.ring()))
    throw Error(ErrorKind::PresentationMismatch, "homotopy start map does not leave the cylinder's base");
  const std::size_t n = src.size();
  if (domain_.size() != n || bars_.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "homotopy data must cover every generator");
  const RingPtr& target_ring = tgt.ring();
  images_.assign(cylinder_->ring()->size(), Element::zero(target_ring));
  for (std::size_t v = 0; v < n; ++v) {
    Element& b = bars_[v];
    if (b.is_zero()) {
      b = Element::zero(target_ring);
    } else {
      if (!same_ring(b.ring(), target_ring))
        throw Error(ErrorKind::PresentationMismatch, "bar image outside the target");
      if (!domain_[v])
        throw Error(ErrorKind::PreconditionViolated, "nonzero bar image outside the homotopy's domain");
      auto deg = b.homogeneous_degree();
      if (!deg || *deg != src.ring()->degree(v) - 1)
        throw Error(ErrorKind::DegreeMismatch, "bar image of " + src.ring()->name(v) + " has the wrong degree");
    }
    if (!domain_[v]) continue;
    images_[cylinder_->plain(v)] = start_.image(v);
    images_[cylinder_->bar(v)] = b;
    images_[cylinder_->hat(v)] = tgt.d(b);
  }
}

Homotopy Homotopy::constant(CylinderPtr cylinder, Morphism start, std::vector<bool> domain) {
  const std::size_t n = cylinder->base()->size();
  std::vector<Element> bars(n, Element::zero(start.target()->ring()));
  return Homotopy(std::move(cylinder), std::move(start), std::move(domain), std::move(bars));
}

bool Homotopy::full_domain() const {
  return std::all_of(domain_.begin(), domain_.end(), [](bool b) { return b; });
}

Element Homotopy::apply(const Element& x) const {
  const RingPtr& target_ring = start_.target()->ring();
  if (x.is_zero()) return Element::zero(target_ring);
  x.check_compatible(Element::zero(cylinder_->ring()));
  for (const auto& [m, c] : x.terms())
    for (const Factor& f : m.factors())
      if (!domain_[cylinder_->base_generator(f.gen)])
        throw Error(ErrorKind::PreconditionViolated,
                    "element uses " + cylinder_->ring()->name(f.gen) + " outside the homotopy's domain");
  return substitute(images_, target_ring, x);
}

Element Homotopy::end_image(std::size_t v) const {
  if (!domain_.at(v)) throw Error(ErrorKind::PreconditionViolated, "generator outside the homotopy's domain");
  return apply(cylinder_->alpha_generator(v));
}

Morphism Homotopy::end_map() const {
  if (!full_domain()) throw Error(ErrorKind::PreconditionViolated, "end map of a partial homotopy");
  std::vector<Element> images;
  for (std::size_t v = 0; v < domain_.size(); ++v) images.push_back(end_image(v));
  return Morphism(start_.source(), start_.target(), std::move(images));
}

Morphism Homotopy::as_morphism() const {
  if (!full_domain()) throw Error(ErrorKind::PreconditionViolated, "a partial homotopy is not a map of the full cylinder");
  return Morphism(cylinder_->presentation(), start_.target(), images_);
}

Homotopy Homotopy::restricted(std::vector<bool> domain) const {
  std::vector<Element> bars = bars_;
  for (std::size_t v = 0; v < domain.size(); ++v) {
    if (domain[v] && !domain_[v])
      throw Error(ErrorKind::PreconditionViolated, "restriction to a larger domain");
    if (!domain[v]) bars[v] = Element::zero(start_.target()->ring());
  }
  return Homotopy(cylinder_, start_, std::move(domain), std::move(bars));
}

Homotopy Homotopy::with_bar(std::size_t v, Element bar) const {
  std::vector<Element> bars = bars_;
  std::vector<bool> domain = domain_;
  bars.at(v) = std::move(bar);
  domain[v] = true;
  return Homotopy(cylinder_, start_, std::move(domain), std::move(bars));
}

void check_cofibration(const Presentation& a, const std::vector<bool>& subalgebra) {
  if (subalgebra.size() != a.size()) throw Error(ErrorKind::DimensionMismatch, "subalgebra mask size");
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (!subalgebra[v]) continue;
    for (const auto& [m, c] : a.d_generator(v).terms())
      for (const Factor& f : m.factors())
        if (!subalgebra[f.gen])
          throw Error(ErrorKind::NotACofibration, "d(" + a.ring()->name(v) + ") involves " +
                                                      a.ring()->name(f.gen) + " outside the subalgebra");
  }
}

Homotopy extend_homotopy_cofibration(const std::vector<bool>& subalgebra, const Morphism& f, const Homotopy& h) {
  const Presentation& src = *f.source();
  check_cofibration(src, subalgebra);
  for (std::size_t v = 0; v < src.size(); ++v) {
    if (!subalgebra[v]) continue;
    if (!h.in_domain(v))
      throw Error(ErrorKind::PreconditionViolated, "homotopy is not defined on the whole subalgebra");
    if (!(h.start().image(v) == f.image(v)))
      throw Error(ErrorKind::PreconditionViolated, "homotopy does not start at the restriction of the map");
  }
  std::vector<Element> bars(src.size(), Element::zero(f.target()->ring()));
  for (std::size_t v = 0; v < src.size(); ++v)
    if (subalgebra[v]) bars[v] = h.bar(v);
  return Homotopy(h.cylinder(), f, std::vector<bool>(src.size(), true), std::move(bars));
}

}  // namespace dgahom

namespace dgahom {

CylinderPtr shared_cylinder(const PresentationPtr& base) {
  static std::mutex mutex;
  static std::map<const Presentation*, std::weak_ptr<const CylinderAlgebra>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[base.get()];
  if (auto live = slot.lock()) return live;
  CylinderPtr fresh = build_cylinder(base);
  slot = fresh;
  return fresh;
}

}  // namespace dgahom
