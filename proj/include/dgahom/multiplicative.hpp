#pragma once

#include <string>
#include <vector>

#include "dgahom/rational.hpp"

namespace dgahom {

// prod_i x_i^{exponents[i]} = constant, over nonzero rationals.
struct MultiplicativeEquation {
  std::vector<long> exponents;
  Rational constant;
};

struct MultiplicativeSystem {
  std::vector<std::string> unknowns;
  std::vector<MultiplicativeEquation> equations;
};

// Solutions over (Q^*)^k. When the exponent lattice has full column rank the
// solution set is the finite list `points`. Otherwise each point is a base
// point of a family x_j = base_j * prod_l t_l^{free_directions[l][j]} with the
// t_l ranging over Q^*.
struct MultiplicativeSolution {
  enum class Status { Solved, Unsolvable, NonRationalRoot };
  Status status = Status::Solved;
  std::vector<std::vector<Rational>> points;
  std::vector<std::vector<long>> free_directions;
  std::string reason;

  bool finite() const { return status == Status::Solved && free_directions.empty(); }
};

// The substitution x = y^V, with V from the Smith form U E V = D of the
// exponent matrix E, is an automorphism of the torus (Q^*)^k that turns the
// system into y_l^{d_l} = c'_l. Each such equation is solved by exact
// rational roots. Because the change of coordinates is invertible over Z,
// no auxiliary prime factorization of the constants is needed.
MultiplicativeSolution solve_multiplicative_system(const MultiplicativeSystem& system);

// Integer d-th roots of q in Q (both signs when d is even). Empty when none.
std::vector<Rational> rational_roots(const Rational& q, unsigned long d, bool& non_rational);

// Substitution of "defined" unknowns: an equation of the form
// u * (monomial in others) = c lets u be eliminated from the rest. Returns the
// system on the remaining unknowns and, per eliminated unknown, its defining
// equation in the original indexing.
struct EliminationResult {
  MultiplicativeSystem reduced;          // unknown list is the kept subset
  std::vector<std::size_t> kept;         // original indices of reduced unknowns
  std::vector<std::size_t> eliminated;   // original indices, in elimination order
  std::vector<MultiplicativeEquation> definitions;  // u = constant * prod x^e over original indices
};

EliminationResult eliminate_defined_unknowns(const MultiplicativeSystem& system,
                                             const std::vector<std::size_t>& candidates);

}  // namespace dgahom
