#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dgahom/linalg.hpp"
#include "dgahom/morphism.hpp"
#include "dgahom/presentation.hpp"

namespace dgahom {

// Degreewise cochain complex of a presentation with cached monomial bases and
// differential matrices. Safe to share between threads.
class CochainComplex {
 public:
  explicit CochainComplex(PresentationPtr algebra) : algebra_(std::move(algebra)) {}

  const PresentationPtr& algebra() const { return algebra_; }
  const std::vector<Monomial>& basis(long n) const;
  std::optional<std::size_t> index_of(long n, const Monomial& m) const;
  // Columns indexed by basis(n), rows by basis(n + 1).
  const RationalMatrix& d_matrix(long n) const;

  // Coordinates of an element concentrated in degree n. Throws DegreeMismatch.
  Vector coordinates(const Element& x, long n) const;
  Element element(std::span<const Rational> coords, long n) const;

 private:
  struct Level {
    std::vector<Monomial> basis;
    std::map<Monomial, std::size_t> index;
  };
  const Level& level(long n) const;

  PresentationPtr algebra_;
  mutable std::recursive_mutex mutex_;
  mutable std::unordered_map<long, std::unique_ptr<Level>> levels_;
  mutable std::unordered_map<long, std::unique_ptr<RationalMatrix>> d_matrices_;
};

using ComplexPtr = std::shared_ptr<const CochainComplex>;
// Reuses a live complex over the same presentation object when one exists.
ComplexPtr shared_complex(const PresentationPtr& algebra);

struct CohomologyClass {
  PresentationPtr algebra;
  long degree = 0;
  Element representative;
  std::optional<long> weight;
};

struct CohomologyGroup {
  long degree = 0;
  std::size_t dimension = 0;
  std::size_t cocycle_dimension = 0;
  std::size_t coboundary_dimension = 0;
  std::vector<Element> representatives;
};

CohomologyGroup cohomology_at_degree(const CochainComplex& complex, long n);

// Witness xi with d xi = z, or nullopt. Throws NotACocycle, DegreeMismatch
// (non-homogeneous z).
std::optional<Element> is_coboundary(const CochainComplex& complex, const Element& z);

// Coordinates of [z] in the basis returned by cohomology_at_degree(n).
Vector class_coordinates(const CochainComplex& complex, long n, const Element& z);

// Matrix of f^* on H^n, columns indexed by source representatives.
RationalMatrix induced_map(const Morphism& f, long n, const CochainComplex& source,
                           const CochainComplex& target);
RationalMatrix induced_map(const Morphism& f, long n);

// Second degree i = weight - n mapped to representatives of H^n_i. Throws
// WeightsMissing, PreconditionViolated (d does not preserve weight).
std::map<long, std::vector<Element>> weight_split_cohomology(const CochainComplex& complex, long n);

struct NilpotencyWitness {
  unsigned k = 0;
  Element witness;  // d witness = z^k
};

// Smallest k <= k_max with z^k exact. Throws NotACocycle.
std::optional<NilpotencyWitness> nilpotency_witness(const CochainComplex& complex, const Element& z,
                                                    unsigned k_max);

}  // namespace dgahom
