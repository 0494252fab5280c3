#include <doctest.h>

#include <algorithm>

#include "dgahom/morphism.hpp"
#include "dgahom/parser.hpp"
#include "dgahom/presentation.hpp"
#include "fixtures.hpp"

using namespace dgahom;
using namespace dgahom::testing;

namespace {

RingPtr ex51_ring() {
  return make_ring({{"x1", 18}, {"x2", 22}, {"y1", 75}, {"y2", 79}, {"y3", 83}, {"z", 197}});
}

Monomial mono(const Ring& r, std::vector<std::pair<std::string, std::uint32_t>> fs) {
  std::vector<Factor> out;
  for (const auto& [n, e] : fs) out.push_back({static_cast<std::uint32_t>(r.index_of(n)), e});
  std::sort(out.begin(), out.end());
  return Monomial::from_sorted(out);
}

}  // namespace

TEST_CASE("ring orders generators by degree then name") {
  RingPtr r = make_ring({{"b", 3}, {"a", 3}, {"c", 2}});
  CHECK(r->name(0) == "c");
  CHECK(r->name(1) == "a");
  CHECK(r->name(2) == "b");
  CHECK(r->index_of("b") == 2);
  CHECK_FALSE(r->find("q").has_value());
  CHECK_THROWS_AS(r->index_of("q"), Error);
  CHECK_THROWS_AS(make_ring({{"a", 0}}), Error);
  CHECK_THROWS_AS(make_ring({{"a", 2}, {"a", 4}}), Error);
}

TEST_CASE("normalize_monomial: Koszul signs") {
  RingPtr r = ex51_ring();
  const std::size_t x1 = r->index_of("x1"), x2 = r->index_of("x2"), y1 = r->index_of("y1"),
                    y2 = r->index_of("y2");

  SignedMonomial s = normalize_monomial(*r, {{y2, 1}, {y1, 1}});
  CHECK(s.sign == -1);
  CHECK(to_string(*r, s.monomial) == "y1*y2");

  CHECK(normalize_monomial(*r, {{y1, 1}, {y1, 1}}).sign == 0);
  CHECK(normalize_monomial(*r, {{y1, 2}}).sign == 0);

  s = normalize_monomial(*r, {{x2, 1}, {y1, 1}, {x1, 2}});
  CHECK(s.sign == 1);
  CHECK(to_string(*r, s.monomial) == "x1^2*x2*y1");

  // y2 y1 y2 -> zero; y2 x1 y1 -> -x1 y1 y2.
  CHECK(normalize_monomial(*r, {{y2, 1}, {y1, 1}, {y2, 1}}).sign == 0);
  s = normalize_monomial(*r, {{y2, 1}, {x1, 1}, {y1, 1}});
  CHECK(s.sign == -1);
  CHECK(to_string(*r, s.monomial) == "x1*y1*y2");

  CHECK(normalize_monomial(*r, {}).monomial.is_unit());
  CHECK_THROWS_AS(normalize_monomial(*r, {{17, 1}}), Error);
}

TEST_CASE("normalize is idempotent on canonical monomials") {
  RingPtr r = ex51_ring();
  Monomial m = mono(*r, {{"x1", 3}, {"x2", 1}, {"y1", 1}, {"z", 1}});
  std::vector<std::pair<std::size_t, std::uint32_t>> raw;
  for (auto f : m.factors()) raw.emplace_back(f.gen, f.exp);
  SignedMonomial s = normalize_monomial(*r, raw);
  CHECK(s.sign == 1);
  CHECK(s.monomial == m);
  CHECK(m.degree(*r) == 3 * 18 + 22 + 75 + 197);
  CHECK(m.length() == 6);
}

TEST_CASE("multiplication in the algebra of the first example") {
  PresentationPtr a = corpus("ex51");
  Element p = el(a, "(y1*x2 - x1*y2)*(y2*x2 - x1*y3)");
  CHECK(p == el(a, "y1*y2*x2^2 - y1*y3*x1*x2 + y2*y3*x1^2"));
  CHECK(p.size() == 3);
  Element y1 = el(a, "y1");
  CHECK(mul(Element::one(a->ring()), y1) == y1);
  CHECK(mul(y1, y1).is_zero());
}

TEST_CASE("graded commutativity of homogeneous elements") {
  PresentationPtr a = corpus("ex51");
  const std::vector<std::string> xs{"x1", "y1", "x1*y2 + x2*y1", "y1*y2", "x2^3"};
  for (const auto& s : xs) {
    for (const auto& t : xs) {
      Element x = el(a, s), y = el(a, t);
      REQUIRE(x.homogeneous_degree().has_value());
      REQUIRE(y.homogeneous_degree().has_value());
      long dx = *x.homogeneous_degree(), dy = *y.homogeneous_degree();
      Element swapped = mul(y, x);
      if ((dx * dy) % 2 != 0) swapped = -swapped;
      CHECK(mul(x, y) == swapped);
    }
  }
}

TEST_CASE("differential as a derivation") {
  PresentationPtr b = corpus("ex52");
  CHECK(b->d(el(b, "y1*y2")) == el(b, "x1^3*x2*y2 - y1*x1^2*x2^2"));
  CHECK(b->d(el(b, "z*x2 - y1*y2*y3*x1^3 - y1*x1^12")) == el(b, "x2^13"));
  CHECK(b->d(Element::one(b->ring())).is_zero());

  // A degree-1 derivation agrees with d; a degree-0 derivation scales by degree.
  std::vector<Element> euler;
  for (std::size_t g = 0; g < b->size(); ++g)
    euler.push_back(b->generator(g).scaled(Rational(b->ring()->degree(g))));
  Element x = el(b, "z*x1 + y1*x1^3*x2^7");
  CHECK(apply_derivation(b->differential(), 1, x) == b->d(x));
  CHECK(apply_derivation(euler, 0, x) == x.scaled(Rational(*x.homogeneous_degree())));
  CHECK(apply_derivation(euler, 0, Element::one(b->ring())).is_zero());
}

TEST_CASE("validate_presentation") {
  for (const char* n : {"ex51", "ex52", "ex53"}) CHECK(validate_presentation(*corpus(n)).empty());
  CHECK(validate_presentation(*algebra("generator x : 2\n")).empty());

  // Linear part of d: v is not in the minimal range.
  auto issues = validate_presentation(*algebra("generator u : 4\ngenerator v : 3\nd v = u\n"));
  REQUIRE_FALSE(issues.empty());
  CHECK(std::any_of(issues.begin(), issues.end(), [](const ValidationIssue& i) {
    return i.kind == ValidationIssue::Kind::NotDecomposable && i.generator == "v";
  }));

  issues = validate_presentation(*algebra("generator x : 1\n"));
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].kind == ValidationIssue::Kind::LowDegree);

  // d of the wrong degree.
  RingPtr r = make_ring({{"x", 2}, {"y", 4}});
  Presentation wrong("w", r, {Element::zero(r), Element::monomial(r, Monomial::generator(0, 2), Rational(1))});
  issues = validate_presentation(wrong);
  REQUIRE_FALSE(issues.empty());
  CHECK(issues[0].kind == ValidationIssue::Kind::DegreeMismatch);

  // d^2 != 0: dz = x y with dy = x^2, x even.
  issues = validate_presentation(*algebra("generator x : 2\ngenerator y : 3\ngenerator z : 4\nd y = x^2\nd z = x*y\n"));
  CHECK(std::any_of(issues.begin(), issues.end(),
                    [](const ValidationIssue& i) { return i.kind == ValidationIssue::Kind::DSquaredNonzero; }));
}

TEST_CASE("monomial bases") {
  PresentationPtr b = corpus("ex52"), c = corpus("ex53");
  auto names = [](const PresentationPtr& a, long n) {
    std::vector<std::string> out;
    for (const auto& m : monomial_basis(*a, n)) out.push_back(to_string(*a->ring(), m));
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<std::string> b119{"x1^2*x2^7*y1", "x1^7*x2^3*y1", "x1^3*x2^6*y2", "x1^8*x2^2*y2",
                                "x1^4*x2^5*y3", "x1^9*x2*y3", "z"};
  std::sort(b119.begin(), b119.end());
  CHECK(names(b, 119) == b119);
  std::vector<std::string> c119{"x1^3*x2^4*y1", "x1^4*x2^3*y2", "x1^5*x2^2*y3", "z"};
  std::sort(c119.begin(), c119.end());
  CHECK(names(c, 119) == c119);

  auto unit = monomial_basis(*b, 0);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].is_unit());
  CHECK(monomial_basis(*c, 11).empty());
  CHECK(monomial_basis(*c, -3).empty());

  auto basis = monomial_basis(*b, 130);
  CHECK(std::is_sorted(basis.begin(), basis.end()));
  for (const auto& m : basis) CHECK(m.degree(*b->ring()) == 130);
}

TEST_CASE("basis of a tiny algebra counted by hand") {
  // x:2, y:3, w:4. Degree 7: x^2 y, w y.  Degree 8: x^4, x^2 w, w^2.
  PresentationPtr a = algebra("generator x : 2\ngenerator y : 3\ngenerator w : 4\n");
  CHECK(monomial_basis(*a, 7).size() == 2);
  CHECK(monomial_basis(*a, 8).size() == 3);
  CHECK(monomial_basis(*a, 6).size() == 2);  // x^3, x w (y^2 = 0)
}

TEST_CASE("morphisms and chain-map checks") {
  PresentationPtr c = corpus("ex53");
  Morphism inv = to_morphism(load_morphism(corpus_path("ex53_inv.map"), c, c));
  CHECK(inv.is_chain_map());
  CHECK(check_chain_map(inv).empty());
  CHECK(inv.apply(c->d_generator(5)) == c->d(inv.image(5)));
  CHECK(compose(inv, inv) == Morphism::identity(c));
  CHECK(Morphism::zero(c, c).is_zero());
  CHECK(Morphism::zero(c, c).is_chain_map());

  PresentationPtr a = corpus("ex51");
  Morphism f = map_of(a, a, "x1 = x1\nx2 = x2\ny1 = 2*y1\ny2 = y2\ny3 = y3\nz = z\n");
  auto defects = check_chain_map(f);
  REQUIRE_FALSE(defects.empty());
  CHECK(a->ring()->name(defects[0].generator) == "y1");
  // Residual f(d y1) - d f(y1) = x1^3 x2 - 2 x1^3 x2.
  CHECK(defects[0].residual == el(a, "-x1^3*x2"));

  CHECK_THROWS_AS(Morphism(a, a, {el(a, "x2"), el(a, "x2"), el(a, "y1"), el(a, "y2"), el(a, "y3"), el(a, "z")}),
                  Error);
  CHECK_THROWS_AS(compose(inv, f), Error);
}
