#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dgahom {

struct Generator {
  std::string name;
  int degree = 0;
  std::optional<int> weight;
  std::optional<int> stage;

  bool odd() const { return degree % 2 != 0; }
};

// The free graded-commutative algebra on a finite set of generators, without
// a differential. Generators are kept sorted by (degree, name); an index into
// this order is the identity of a generator everywhere else in the library.
class Ring {
 public:
  explicit Ring(std::vector<Generator> generators);

  std::size_t size() const { return generators_.size(); }
  const Generator& generator(std::size_t index) const { return generators_[index]; }
  const std::vector<Generator>& generators() const { return generators_; }
  int degree(std::size_t index) const { return generators_[index].degree; }
  bool odd(std::size_t index) const { return generators_[index].odd(); }
  const std::string& name(std::size_t index) const { return generators_[index].name; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws UnknownGenerator.
  std::size_t index_of(std::string_view name) const;

  // Same generator names and degrees in the same order.
  bool same_as(const Ring& other) const;

 private:
  std::vector<Generator> generators_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<Generator> generators) {
  return std::make_shared<const Ring>(std::move(generators));
}

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace dgahom
