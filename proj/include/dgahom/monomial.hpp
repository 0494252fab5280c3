#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgahom/ring.hpp"

namespace dgahom {

struct Factor {
  std::uint32_t gen = 0;
  std::uint32_t exp = 0;

  auto operator<=>(const Factor&) const = default;
};

// A product of generator powers in canonical order: factors sorted by
// generator index, every exponent positive, odd generators to the first power.
// The empty monomial is the unit.
class Monomial {
 public:
  Monomial() = default;

  static Monomial generator(std::size_t gen, std::uint32_t exp = 1);
  // Caller guarantees canonical order.
  static Monomial from_sorted(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }
  // Total number of generator factors counted with multiplicity.
  std::uint64_t length() const;
  std::uint32_t exponent(std::size_t gen) const;
  long degree(const Ring& ring) const;
  bool parity(const Ring& ring) const { return degree(ring) % 2 != 0; }

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

struct SignedMonomial {
  int sign = 0;  // +1, -1, or 0 when the product vanishes
  Monomial monomial;
};

// Puts an arbitrary ordered product of generator powers into canonical form,
// tracking the Koszul sign of the sorting permutation. Throws UnknownGenerator
// for indices outside the ring.
SignedMonomial normalize_monomial(const Ring& ring,
                                  const std::vector<std::pair<std::size_t, std::uint32_t>>& raw);

// a * b in canonical form with its sign.
SignedMonomial multiply(const Ring& ring, const Monomial& a, const Monomial& b);

// "x1^2*y1", or "1" for the unit.
std::string to_string(const Ring& ring, const Monomial& m);

}  // namespace dgahom

namespace dgahom {

// Total weight, or nullopt when some factor's generator carries no weight.
std::optional<long> monomial_weight(const Ring& ring, const Monomial& m);

}  // namespace dgahom
