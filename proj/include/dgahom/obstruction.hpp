#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgahom/cohomology.hpp"
#include "dgahom/cylinder.hpp"
#include "dgahom/linalg.hpp"
#include "dgahom/morphism.hpp"

namespace dgahom {

enum class GeneratorRole { V0, V1, Outside };

// V0 + V1 (inside a possibly larger presentation; other generators are
// Outside) with d(V0 + V1) contained in Lambda V0.
class ObstructionDecomposition {
 public:
  // Throws InvalidDecomposition naming the generator and monomial at fault.
  ObstructionDecomposition(PresentationPtr algebra, std::vector<GeneratorRole> roles);

  const PresentationPtr& algebra() const { return algebra_; }
  GeneratorRole role(std::size_t v) const { return roles_[v]; }
  const std::vector<GeneratorRole>& roles() const { return roles_; }
  std::vector<bool> v0_mask() const;
  std::vector<std::size_t> v1() const;

 private:
  PresentationPtr algebra_;
  std::vector<GeneratorRole> roles_;
};

// V0 = generators of degree < n, V1 = degree n.
ObstructionDecomposition degree_decomposition(const PresentationPtr& a, int n);
// Every generator tagged, V1 given by name, the rest V0.
ObstructionDecomposition tagged_decomposition(const PresentationPtr& a, const std::vector<std::string>& v1_names);

class Filtration {
 public:
  // Throws InvalidFiltration unless d maps each stage into the algebra on
  // strictly earlier stages.
  Filtration(PresentationPtr algebra, std::vector<long> stages);
  static Filtration by_degree(const PresentationPtr& a);
  // From the generators' declared stages. Throws InvalidFiltration when one is missing.
  static Filtration from_annotations(const PresentationPtr& a);

  const PresentationPtr& algebra() const { return algebra_; }
  long stage(std::size_t v) const { return stages_[v]; }
  const std::vector<long>& stage_values() const { return values_; }
  ObstructionDecomposition decomposition_at(long s) const;
  std::vector<bool> below(long s) const;

 private:
  PresentationPtr algebra_;
  std::vector<long> stages_;
  std::vector<long> values_;
};

struct ObstructionEntry {
  std::size_t generator = 0;
  CohomologyClass value;
  bool vanishes = false;
  std::optional<Element> witness;  // d witness = representative
};

struct ObstructionValue {
  std::vector<GeneratorRole> roles;
  std::vector<ObstructionEntry> entries;

  bool is_zero() const;
  const ObstructionEntry* entry(std::size_t generator) const;
};

// The class of f(w) + H(alpha(w) - w - what) - g(w) for every V1 generator w.
// Throws HomotopyEndpointMismatch, LemmaViolation, PresentationMismatch.
ObstructionValue compute_obstruction(const Morphism& f, const Morphism& g, const Homotopy& h,
                                     const ObstructionDecomposition& d);

struct XiStructure {
  bool decomposable = false;
  bool in_sub_cylinder = false;       // only V0 and its bar/hat generators
  bool in_bar_ideal = false;          // every monomial has a barred V0 factor
  bool in_plain_hat_ideal = false;    // every monomial has a plain or hatted V0 factor
};

XiStructure inspect_xi(const CylinderAlgebra& cylinder, std::size_t w, const std::vector<bool>& v0);

struct ExtensionResult {
  std::optional<Homotopy> homotopy;
  std::optional<ObstructionValue> obstruction;

  bool extended() const { return homotopy.has_value(); }
};

// Extends h across V1 when the obstruction vanishes, with bar(w) the
// negated coboundary witness.
ExtensionResult extend_to_homotopy(const Morphism& f, const Morphism& g, const Homotopy& h,
                                   const ObstructionDecomposition& d);

// Complete decision when f and g vanish on V0. Throws PreconditionViolated.
ExtensionResult decide_homotopic_zero_restriction(const Morphism& f, const Morphism& g,
                                                  const ObstructionDecomposition& d);

struct NullhomotopyResult {
  bool nullhomotopic = false;
  std::optional<Homotopy> homotopy;  // from f to 0 on the whole source
  // When not nullhomotopic: the first obstructed stage, a homotopic map that
  // vanishes below it, and its nonzero obstruction against 0.
  long stage = 0;
  std::optional<Morphism> modified;
  std::optional<ObstructionValue> obstruction;
};

// Stagewise extension along the filtration. Throws InvalidFiltration when the
// filtration is over a different presentation.
NullhomotopyResult decide_nullhomotopic(const Morphism& f, const Filtration& filtration);
NullhomotopyResult decide_nullhomotopic(const Morphism& f);

enum class Verdict { Yes, No, Undetermined };
const char* verdict_name(Verdict v);

struct InducedMapCertificate {
  long degree = 0;
  RationalMatrix f_matrix;
  RationalMatrix g_matrix;
};

struct HomotopyDecision {
  Verdict verdict = Verdict::Undetermined;
  std::string method;
  std::optional<Homotopy> homotopy;  // from f to g when available
  std::optional<InducedMapCertificate> induced;
  std::optional<ObstructionValue> obstruction;
  long stage_reached = 0;
  std::string residual_shape;
};

struct DecideOptions {
  long degree_bound = -1;  // induced-map comparison; -1 means the source's top degree
  int grid = 2;            // search range for nonlinear bar corrections
  std::size_t max_grid_parameters = 3;
};

HomotopyDecision decide_homotopic(const Morphism& f, const Morphism& g, const Filtration& filtration,
                                  const DecideOptions& options = {});
HomotopyDecision decide_homotopic(const Morphism& f, const Morphism& g, const DecideOptions& options = {});

// First degree <= bound where the induced maps differ.
std::optional<InducedMapCertificate> induced_map_difference(const Morphism& f, const Morphism& g, long bound);

}  // namespace dgahom
