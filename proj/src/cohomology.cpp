#include "dgahom/cohomology.hpp"

#include <set>
#include <stdexcept>

#include "dgahom/error.hpp"

namespace dgahom {

const CochainComplex::Level& CochainComplex::level(long n) const {
  std::lock_guard lock(mutex_);
  auto it = levels_.find(n);
  if (it != levels_.end()) return *it->second;
  auto lvl = std::make_unique<Level>();
  if (n >= 0) lvl->basis = monomial_basis(*algebra_->ring(), n);
  for (std::size_t i = 0; i < lvl->basis.size(); ++i) lvl->index.emplace(lvl->basis[i], i);
  return *levels_.emplace(n, std::move(lvl)).first->second;
}

const std::vector<Monomial>& CochainComplex::basis(long n) const { return level(n).basis; }

std::optional<std::size_t> CochainComplex::index_of(long n, const Monomial& m) const {
  const Level& lvl = level(n);
  auto it = lvl.index.find(m);
  if (it == lvl.index.end()) return std::nullopt;
  return it->second;
}

const RationalMatrix& CochainComplex::d_matrix(long n) const {
  std::lock_guard lock(mutex_);
  auto it = d_matrices_.find(n);
  if (it != d_matrices_.end()) return *it->second;
  const Level& src = level(n);
  const Level& dst = level(n + 1);
  auto m = std::make_unique<RationalMatrix>(dst.basis.size(), src.basis.size());
  for (std::size_t c = 0; c < src.basis.size(); ++c) {
    Element image = algebra_->d(monomial_element<Rational>(algebra_->ring(), src.basis[c]));
    for (const auto& [mono, coef] : image.terms()) m->set(dst.index.at(mono), c, coef);
  }
  return *d_matrices_.emplace(n, std::move(m)).first->second;
}

Vector CochainComplex::coordinates(const Element& x, long n) const {
  const Level& lvl = level(n);
  Vector v(lvl.basis.size());
  for (const auto& [m, c] : x.terms()) {
    auto it = lvl.index.find(m);
    if (it == lvl.index.end())
      throw Error(ErrorKind::DegreeMismatch, "element has a term outside degree " + std::to_string(n));
    v[it->second] = c;
  }
  return v;
}

Element CochainComplex::element(std::span<const Rational> coords, long n) const {
  const Level& lvl = level(n);
  if (coords.size() != lvl.basis.size()) throw Error(ErrorKind::DimensionMismatch, "coordinate vector length");
  Element out = Element::zero(algebra_->ring());
  for (std::size_t i = 0; i < coords.size(); ++i) out.add_term(lvl.basis[i], coords[i]);
  return out;
}

namespace {

// Columns of `image` span the coboundaries; returns the kernel vectors that
// complete them to a basis of the cocycles, and the coboundary rank.
std::pair<std::vector<Vector>, std::size_t> complement(std::size_t dim, const std::vector<Vector>& image,
                                                       const std::vector<Vector>& kernel) {
  std::vector<Vector> cols = image;
  cols.insert(cols.end(), kernel.begin(), kernel.end());
  RrefResult r = rref(RationalMatrix::from_columns(dim, cols));
  std::vector<Vector> reps;
  std::size_t image_rank = 0;
  for (std::size_t p : r.pivot_columns) {
    if (p < image.size())
      ++image_rank;
    else
      reps.push_back(kernel[p - image.size()]);
  }
  return {reps, image_rank};
}

std::vector<Vector> columns_of(const RationalMatrix& m) {
  std::vector<Vector> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  return out;
}

long require_degree(const Element& z) {
  auto deg = z.homogeneous_degree();
  if (!deg) throw Error(ErrorKind::DegreeMismatch, "element is not homogeneous");
  return *deg;
}

}  // namespace

CohomologyGroup cohomology_at_degree(const CochainComplex& complex, long n) {
  CohomologyGroup g;
  g.degree = n;
  const std::size_t dim = complex.basis(n).size();
  std::vector<Vector> kernel = kernel_basis(complex.d_matrix(n));
  std::vector<Vector> image = columns_of(complex.d_matrix(n - 1));
  auto [reps, image_rank] = complement(dim, image, kernel);
  g.cocycle_dimension = kernel.size();
  g.coboundary_dimension = image_rank;
  g.dimension = reps.size();
  for (const auto& v : reps) g.representatives.push_back(complex.element(v, n));
  return g;
}

std::optional<Element> is_coboundary(const CochainComplex& complex, const Element& z) {
  const PresentationPtr& a = complex.algebra();
  if (z.is_zero()) return Element::zero(a->ring());
  const long n = require_degree(z);
  if (!a->d(z).is_zero()) throw Error(ErrorKind::NotACocycle, "d of the element is nonzero");
  LinearSolution sol = rref_solve(complex.d_matrix(n - 1), complex.coordinates(z, n));
  if (!sol.solvable()) return std::nullopt;
  Element witness = complex.element(*sol.particular, n - 1);
  if (!(a->d(witness) == z)) throw std::logic_error("coboundary witness failed verification");
  return witness;
}

Vector class_coordinates(const CochainComplex& complex, long n, const Element& z) {
  CohomologyGroup g = cohomology_at_degree(complex, n);
  std::vector<Vector> cols = columns_of(complex.d_matrix(n - 1));
  const std::size_t nb = cols.size();
  for (const auto& r : g.representatives) cols.push_back(complex.coordinates(r, n));
  const std::size_t dim = complex.basis(n).size();
  LinearSolution sol = rref_solve(RationalMatrix::from_columns(dim, cols), complex.coordinates(z, n));
  if (!sol.solvable()) throw Error(ErrorKind::NotACocycle, "element is not a cocycle in degree " + std::to_string(n));
  return Vector(sol.particular->begin() + static_cast<long>(nb), sol.particular->end());
}

RationalMatrix induced_map(const Morphism& f, long n, const CochainComplex& source,
                           const CochainComplex& target) {
  if (!f.is_chain_map()) throw Error(ErrorKind::PreconditionViolated, "induced map of a non-chain map");
  CohomologyGroup hs = cohomology_at_degree(source, n);
  CohomologyGroup ht = cohomology_at_degree(target, n);
  RationalMatrix m(ht.dimension, hs.dimension);
  if (ht.dimension == 0) return m;
  std::vector<Vector> cols = columns_of(target.d_matrix(n - 1));
  const std::size_t nb = cols.size();
  for (const auto& r : ht.representatives) cols.push_back(target.coordinates(r, n));
  RationalMatrix basis = RationalMatrix::from_columns(target.basis(n).size(), cols);
  for (std::size_t j = 0; j < hs.dimension; ++j) {
    Element image = f.apply(hs.representatives[j]);
    LinearSolution sol = rref_solve(basis, target.coordinates(image, n));
    if (!sol.solvable()) throw std::logic_error("image of a cocycle is not a cocycle");
    for (std::size_t i = 0; i < ht.dimension; ++i) m.set(i, j, (*sol.particular)[nb + i]);
  }
  return m;
}

RationalMatrix induced_map(const Morphism& f, long n) {
  return induced_map(f, n, CochainComplex(f.source()), CochainComplex(f.target()));
}

std::map<long, std::vector<Element>> weight_split_cohomology(const CochainComplex& complex, long n) {
  const Presentation& a = *complex.algebra();
  const Ring& ring = *a.ring();
  if (!a.has_weights()) throw Error(ErrorKind::WeightsMissing, "every generator needs a weight");
  for (std::size_t g = 0; g < ring.size(); ++g)
    for (const auto& [m, c] : a.d_generator(g).terms())
      if (*monomial_weight(ring, m) != *ring.generator(g).weight)
        throw Error(ErrorKind::PreconditionViolated, "differential of " + ring.name(g) + " is not weight-homogeneous");

  const auto& basis_n = complex.basis(n);
  const auto& basis_prev = complex.basis(n - 1);
  std::set<long> weights;
  for (const auto& m : basis_n) weights.insert(*monomial_weight(ring, m));

  std::map<long, std::vector<Element>> out;
  const RationalMatrix& dn = complex.d_matrix(n);
  const RationalMatrix& dprev = complex.d_matrix(n - 1);
  for (long w : weights) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < basis_n.size(); ++c)
      if (*monomial_weight(ring, basis_n[c]) == w) cols.push_back(c);
    RationalMatrix sub(dn.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t r = 0; r < dn.rows(); ++r) sub.set(r, j, dn.get(r, cols[j]));
    std::vector<Vector> kernel;
    for (const auto& kv : kernel_basis(sub)) {
      Vector full(basis_n.size());
      for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = kv[j];
      kernel.push_back(std::move(full));
    }
    std::vector<Vector> image;
    for (std::size_t c = 0; c < basis_prev.size(); ++c)
      if (*monomial_weight(ring, basis_prev[c]) == w) image.push_back(dprev.column(c));
    auto [reps, rank] = complement(basis_n.size(), image, kernel);
    (void)rank;
    if (reps.empty()) continue;
    auto& slot = out[w - n];
    for (const auto& v : reps) slot.push_back(complex.element(v, n));
  }
  return out;
}

std::optional<NilpotencyWitness> nilpotency_witness(const CochainComplex& complex, const Element& z,
                                                    unsigned k_max) {
  const PresentationPtr& a = complex.algebra();
  if (z.is_zero()) return NilpotencyWitness{1, Element::zero(a->ring())};
  require_degree(z);
  if (!a->d(z).is_zero()) throw Error(ErrorKind::NotACocycle, "d of the element is nonzero");
  Element p = Element::one(a->ring());
  for (unsigned k = 1; k <= k_max; ++k) {
    p = mul(p, z);
    if (p.is_zero()) return NilpotencyWitness{k, Element::zero(a->ring())};
    if (auto w = is_coboundary(complex, p)) return NilpotencyWitness{k, *w};
  }
  return std::nullopt;
}

}  // namespace dgahom

namespace dgahom {

ComplexPtr shared_complex(const PresentationPtr& algebra) {
  static std::mutex mutex;
  static std::map<const Presentation*, std::weak_ptr<const CochainComplex>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[algebra.get()];
  if (auto live = slot.lock()) return live;
  ComplexPtr fresh = std::make_shared<const CochainComplex>(algebra);
  slot = fresh;
  return fresh;
}

}  // namespace dgahom
