#include <doctest.h>

#include "dgahom/obstruction.hpp"
#include "fixtures.hpp"

using namespace dgahom;
using namespace dgahom::testing;

namespace {

// Degree-119 cocycle of the second example built from the lambda / nu monomials;
// closed exactly when both coefficient triples sum to zero.
std::string correction(int l1, int l2, int l3, int n1, int n2, int n3) {
  auto t = [](int c, const char* m) { return " + (" + std::to_string(c) + ")*" + m; };
  return "0" + t(l1, "x1^2*x2^7*y1") + t(l2, "x1^3*x2^6*y2") + t(l3, "x1^4*x2^5*y3") +
         t(n1, "x1^7*x2^3*y1") + t(n2, "x1^8*x2^2*y2") + t(n3, "x1^9*x2*y3");
}

Morphism case_one(const PresentationPtr& b, int l2, int l3, int n2, int n3) {
  return map_of(b, b, "z = " + correction(-l2 - l3, l2, l3, -n2 - n3, n2, n3) + "\n");
}

Morphism case_two(const PresentationPtr& b, int l2, int l3, int n2, int n3) {
  return map_of(b, b,
                "x1 = x1\nx2 = x2\ny1 = y1\ny2 = y2\ny3 = y3\nz = z + " +
                    correction(-l2 - l3, l2, l3, -n2 - n3, n2, n3) + "\n");
}

}  // namespace

TEST_CASE("obstruction decompositions") {
  PresentationPtr b = corpus("ex52");
  ObstructionDecomposition d = tagged_decomposition(b, {"z"});
  CHECK(d.v1() == std::vector<std::size_t>{b->ring()->index_of("z")});
  auto mask = d.v0_mask();
  CHECK(std::count(mask.begin(), mask.end(), true) == 5);

  for (const char* n : {"ex51", "ex52", "ex53", "sphere4", "cp2"}) {
    PresentationPtr a = corpus(n);
    CHECK_NOTHROW(degree_decomposition(a, a->top_degree()));
  }

  PresentationPtr a = corpus("ex51");
  CHECK_THROWS_AS(tagged_decomposition(a, {"y1", "x1"}), Error);
  try {
    tagged_decomposition(a, {"y1", "x1"});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidDecomposition);
  }
}

TEST_CASE("filtrations") {
  PresentationPtr a = corpus("ex51");
  Filtration f = Filtration::by_degree(a);
  CHECK(f.stage_values() == std::vector<long>{18, 22, 75, 79, 83, 197});
  // Collapsing y1 and x1 into one stage breaks d(stage) in earlier stages.
  CHECK_THROWS_AS(Filtration(a, {0, 0, 0, 1, 1, 2}), Error);
  CHECK_NOTHROW(Filtration(a, {0, 0, 1, 1, 1, 2}));
  CHECK_THROWS_AS(Filtration::from_annotations(a), Error);
  PresentationPtr s = algebra("generator x : 4 stage 0\ngenerator y : 7 stage 1\nd y = x^2\n");
  CHECK(Filtration::from_annotations(s).stage(1) == 1);
}

TEST_CASE("xi lies in the expected ideals") {
  PresentationPtr b = corpus("ex52");
  CylinderPtr cyl = shared_cylinder(b);
  ObstructionDecomposition d = tagged_decomposition(b, {"z"});
  XiStructure s = inspect_xi(*cyl, b->ring()->index_of("z"), d.v0_mask());
  CHECK(s.decomposable);
  CHECK(s.in_sub_cylinder);
  CHECK(s.in_bar_ideal);
  CHECK(s.in_plain_hat_ideal);
}

TEST_CASE("obstruction with zero restriction is the class of the difference") {
  PresentationPtr w = corpus("free_w"), x = corpus("free_x");
  Morphism f = map_of(w, x, "w = x\n");
  Morphism g = Morphism::zero(w, x);
  ObstructionDecomposition d = tagged_decomposition(w, {"w"});
  Homotopy h = Homotopy::constant(shared_cylinder(w), f, d.v0_mask());
  ObstructionValue o = compute_obstruction(f, g, h, d);
  REQUIRE(o.entries.size() == 1);
  CHECK_FALSE(o.entries[0].vanishes);
  CHECK(o.entries[0].value.representative == el(x, "x"));

  ExtensionResult r = decide_homotopic_zero_restriction(f, g, d);
  CHECK_FALSE(r.extended());
  REQUIRE(r.obstruction.has_value());
  CHECK_FALSE(r.obstruction->is_zero());

  HomotopyDecision dec = decide_homotopic(f, g);
  CHECK(dec.verdict == Verdict::No);
}

TEST_CASE("equal maps with the constant homotopy have zero obstruction") {
  PresentationPtr b = corpus("ex52");
  Morphism id = Morphism::identity(b);
  ObstructionDecomposition d = tagged_decomposition(b, {"z"});
  Homotopy h = Homotopy::constant(shared_cylinder(b), id, d.v0_mask());
  CHECK(compute_obstruction(id, id, h, d).is_zero());
  ExtensionResult e = extend_to_homotopy(id, id, h, d);
  REQUIRE(e.extended());
  CHECK(e.homotopy->end_map() == id);
  CHECK(e.homotopy->bar(b->ring()->index_of("z")).is_zero());
}

TEST_CASE("case-one maps of the second example are nullhomotopic") {
  PresentationPtr b = corpus("ex52");
  const std::size_t z = b->ring()->index_of("z");
  for (auto [l2, l3, n2, n3] : {std::array{1, 0, 0, 0}, std::array{2, -1, 3, 5}, std::array{0, 0, -4, 1}}) {
    Morphism f = case_one(b, l2, l3, n2, n3);
    REQUIRE(f.is_chain_map());
    ObstructionDecomposition d = tagged_decomposition(b, {"z"});
    Morphism zero = Morphism::zero(b, b);
    Homotopy h0 = Homotopy::constant(shared_cylinder(b), f, d.v0_mask());
    ObstructionValue o = compute_obstruction(f, zero, h0, d);
    CHECK(o.is_zero());
    REQUIRE(o.entry(z) != nullptr);
    CHECK(o.entry(z)->value.representative == f.image(z));

    ExtensionResult e = extend_to_homotopy(f, zero, h0, d);
    REQUIRE(e.extended());
    CHECK(e.homotopy->end_map().is_zero());
    CHECK(b->d(e.homotopy->bar(z)) == -f.image(z));

    NullhomotopyResult n = decide_nullhomotopic(f);
    CHECK(n.nullhomotopic);
    REQUIRE(n.homotopy.has_value());
    CHECK(n.homotopy->start() == f);
    CHECK(n.homotopy->end_map().is_zero());
  }
  // Two members of the family are homotopic to each other.
  HomotopyDecision dec = decide_homotopic(case_one(b, 1, 0, 0, 0), case_one(b, 2, -1, 3, 5));
  CHECK(dec.verdict == Verdict::Yes);
}

TEST_CASE("case-two maps of the second example are homotopic to the identity") {
  PresentationPtr b = corpus("ex52");
  Morphism id = Morphism::identity(b);
  for (auto [l2, l3, n2, n3] : {std::array{1, 0, 0, 0}, std::array{-3, 2, 1, 1}}) {
    Morphism f = case_two(b, l2, l3, n2, n3);
    REQUIRE(f.is_chain_map());
    HomotopyDecision dec = decide_homotopic(f, id);
    CHECK(dec.verdict == Verdict::Yes);
    REQUIRE(dec.homotopy.has_value());
    CHECK(dec.homotopy->start() == f);
    CHECK(dec.homotopy->end_map() == id);
  }
}

TEST_CASE("identity of the first example is not nullhomotopic") {
  PresentationPtr a = corpus("ex51");
  Morphism id = Morphism::identity(a);
  NullhomotopyResult n = decide_nullhomotopic(id);
  CHECK_FALSE(n.nullhomotopic);
  CHECK(n.stage == 18);
  REQUIRE(n.obstruction.has_value());
  const ObstructionEntry* e = n.obstruction->entry(a->ring()->index_of("x1"));
  REQUIRE(e != nullptr);
  CHECK_FALSE(e->vanishes);
  CHECK(e->value.representative == el(a, "x1"));

  // Posing it against 0 with V1 = {z} violates the precondition on V0.
  ObstructionDecomposition d = tagged_decomposition(a, {"z"});
  Homotopy h = Homotopy::constant(shared_cylinder(a), id, d.v0_mask());
  CHECK_THROWS_AS(compute_obstruction(id, Morphism::zero(a, a), h, d), Error);
}

TEST_CASE("zero map and trivial decisions") {
  PresentationPtr c = corpus("ex53");
  Morphism zero = Morphism::zero(c, c);
  CHECK(decide_nullhomotopic(zero).nullhomotopic);
  CHECK(decide_nullhomotopic(zero, Filtration(c, {0, 1, 2, 2, 2, 3})).nullhomotopic);
  CHECK(decide_homotopic(zero, zero).verdict == Verdict::Yes);
  Morphism id = Morphism::identity(c);
  CHECK(decide_homotopic(id, id).verdict == Verdict::Yes);
}

TEST_CASE("identity versus involution: induced-map certificate") {
  PresentationPtr c = corpus("ex53");
  Morphism inv = to_morphism(load_morphism(corpus_path("ex53_inv.map"), c, c));
  HomotopyDecision dec = decide_homotopic(Morphism::identity(c), inv);
  CHECK(dec.verdict == Verdict::No);
  REQUIRE(dec.induced.has_value());
  CHECK(dec.induced->degree == 12);
  CHECK(dec.induced->f_matrix.get(0, 0) == 1);
  CHECK(dec.induced->g_matrix.get(0, 0) == -1);
}

TEST_CASE("nontrivial modified map for an obstructed nullhomotopy") {
  // x -> 2x, y -> 4y is obstructed by [2x] in degree 4.
  PresentationPtr s = corpus("sphere4");
  Morphism dbl = to_morphism(load_morphism(corpus_path("sphere4_double.map"), s, s));
  NullhomotopyResult n = decide_nullhomotopic(dbl);
  CHECK_FALSE(n.nullhomotopic);
  CHECK(n.stage == 4);
  REQUIRE(n.modified.has_value());
  CHECK(n.modified->is_chain_map());
}

TEST_CASE("the obstruction depends on the partial homotopy") {
  // dw = x a; a partial homotopy with bar(a) = u, a cocycle, starts and ends at f on V0
  // but contributes f(x) u to the obstruction of w.
  PresentationPtr m = algebra("algebra m\ngenerator x : 2\ngenerator a : 3\ngenerator w : 4\nd w = x*a\n");
  PresentationPtr n = algebra("algebra n\ngenerator p : 2\ngenerator u : 2\n");
  REQUIRE(validate_presentation(*m).empty());
  Morphism f = map_of(m, n, "x = p\n");
  REQUIRE(f.is_chain_map());
  ObstructionDecomposition d = tagged_decomposition(m, {"w"});
  CylinderPtr cyl = shared_cylinder(m);
  const std::size_t a = m->ring()->index_of("a"), w = m->ring()->index_of("w");

  ObstructionValue constant = compute_obstruction(f, f, Homotopy::constant(cyl, f, d.v0_mask()), d);
  CHECK(constant.is_zero());

  std::vector<Element> bars(m->size(), Element::zero(n->ring()));
  bars[a] = el(n, "u");
  Homotopy twisted(cyl, f, d.v0_mask(), bars);
  ObstructionValue o = compute_obstruction(f, f, twisted, d);
  CHECK_FALSE(o.is_zero());
  REQUIRE(o.entry(w) != nullptr);
  const Element& rep = o.entry(w)->value.representative;
  CHECK(((rep == el(n, "p*u")) || (rep == el(n, "-p*u"))));

  CHECK(decide_homotopic(f, f).verdict == Verdict::Yes);
}
