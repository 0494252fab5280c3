#include "dgahom/monomial.hpp"

#include "dgahom/error.hpp"

namespace dgahom {

Monomial Monomial::generator(std::size_t gen, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back(Factor{static_cast<std::uint32_t>(gen), exp});
  return m;
}

Monomial Monomial::from_sorted(std::vector<Factor> factors) {
  Monomial m;
  m.factors_ = std::move(factors);
  return m;
}

std::uint64_t Monomial::length() const {
  std::uint64_t n = 0;
  for (const Factor& f : factors_) n += f.exp;
  return n;
}

std::uint32_t Monomial::exponent(std::size_t gen) const {
  for (const Factor& f : factors_)
    if (f.gen == gen) return f.exp;
  return 0;
}

long Monomial::degree(const Ring& ring) const {
  long d = 0;
  for (const Factor& f : factors_) d += static_cast<long>(f.exp) * ring.degree(f.gen);
  return d;
}

SignedMonomial normalize_monomial(
    const Ring& ring, const std::vector<std::pair<std::size_t, std::uint32_t>>& raw) {
  struct Block {
    std::uint32_t gen;
    std::uint32_t exp;
    bool odd;  // parity of the block's total degree
  };
  std::vector<Block> blocks;
  for (const auto& [gen, exp] : raw) {
    if (gen >= ring.size())
      throw Error(ErrorKind::UnknownGenerator, "generator index " + std::to_string(gen));
    if (exp == 0) continue;
    if (ring.odd(gen) && exp > 1) return {0, Monomial()};
    blocks.push_back(Block{static_cast<std::uint32_t>(gen), exp, ring.odd(gen) && exp % 2 == 1});
  }
  // Insertion sort; each adjacent transposition of two odd blocks flips the sign.
  int sign = 1;
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    for (std::size_t j = i; j > 0 && blocks[j - 1].gen > blocks[j].gen; --j) {
      if (blocks[j - 1].odd && blocks[j].odd) sign = -sign;
      std::swap(blocks[j - 1], blocks[j]);
    }
  }
  std::vector<Factor> factors;
  for (const Block& b : blocks) {
    if (!factors.empty() && factors.back().gen == b.gen) {
      if (ring.odd(b.gen)) return {0, Monomial()};
      factors.back().exp += b.exp;
    } else {
      factors.push_back(Factor{b.gen, b.exp});
    }
  }
  return {sign, Monomial::from_sorted(std::move(factors))};
}

SignedMonomial multiply(const Ring& ring, const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  // odd_suffix[i] = number of odd factors in fa[i..]
  std::vector<unsigned> odd_suffix(fa.size() + 1, 0);
  for (std::size_t i = fa.size(); i-- > 0;)
    odd_suffix[i] = odd_suffix[i + 1] + (ring.odd(fa[i].gen) ? 1u : 0u);

  std::vector<Factor> out;
  out.reserve(fa.size() + fb.size());
  unsigned swaps = 0;
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].gen < fb[j].gen)) {
      out.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].gen < fa[i].gen) {
      // fb[j] moves left past fa[i..]
      if (ring.odd(fb[j].gen)) swaps += odd_suffix[i];
      out.push_back(fb[j++]);
    } else {
      if (ring.odd(fa[i].gen)) return {0, Monomial()};
      out.push_back(Factor{fa[i].gen, fa[i].exp + fb[j].exp});
      ++i;
      ++j;
    }
  }
  return {swaps % 2 == 0 ? 1 : -1, Monomial::from_sorted(std::move(out))};
}

std::string to_string(const Ring& ring, const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string s;
  for (const Factor& f : m.factors()) {
    if (!s.empty()) s += '*';
    s += ring.name(f.gen);
    if (f.exp != 1) s += '^' + std::to_string(f.exp);
  }
  return s;
}

}  // namespace dgahom

namespace dgahom {

std::optional<long> monomial_weight(const Ring& ring, const Monomial& m) {
  long w = 0;
  for (const Factor& f : m.factors()) {
    const auto& gw = ring.generator(f.gen).weight;
    if (!gw) return std::nullopt;
    w += static_cast<long>(f.exp) * *gw;
  }
  return w;
}

}  // namespace dgahom
