#include "dgahom/universality.hpp"

#include <map>
#include <set>

#include "dgahom/cohomology.hpp"
#include "dgahom/error.hpp"

namespace dgahom {

std::vector<WeightIssue> validate_weights(const Presentation& a) {
  std::vector<WeightIssue> issues;
  const Ring& ring = *a.ring();
  for (std::size_t v = 0; v < ring.size(); ++v) {
    const auto& w = ring.generator(v).weight;
    if (!w) {
      issues.push_back({v, "no weight on " + ring.name(v)});
    } else if (*w < 1) {
      issues.push_back({v, "weight of " + ring.name(v) + " is not positive"});
    }
  }
  if (!issues.empty()) return issues;
  for (std::size_t v = 0; v < ring.size(); ++v)
    for (const auto& [m, c] : a.d_generator(v).terms()) {
      long mw = *monomial_weight(ring, m);
      if (mw != *ring.generator(v).weight)
        issues.push_back({v, "d(" + ring.name(v) + ") has the term " + to_string(ring, m) + " of weight " +
                                 std::to_string(mw) + ", expected " + std::to_string(*ring.generator(v).weight)});
    }
  return issues;
}

namespace {

struct Inequality {
  Vector a;  // a . c >= b
  Rational b;
  bool operator<(const Inequality& o) const { return a < o.a || (a == o.a && b < o.b); }
};

Inequality normalized(Inequality q) {
  Rational scale = 0;
  for (const auto& x : q.a)
    if (abs(x) > scale) scale = abs(x);
  if (scale == 0) scale = abs(q.b) > 0 ? Rational(abs(q.b)) : Rational(1);
  for (auto& x : q.a) x /= scale;
  q.b /= scale;
  return q;
}

// A point with K c >= 1 componentwise, by Fourier-Motzkin elimination.
std::optional<Vector> positive_point(const std::vector<Vector>& kernel, std::size_t n) {
  const std::size_t k = kernel.size();
  std::vector<std::set<Inequality>> levels(k + 1);
  for (std::size_t r = 0; r < n; ++r) {
    Inequality q{Vector(k), Rational(1)};
    for (std::size_t j = 0; j < k; ++j) q.a[j] = kernel[j][r];
    levels[k].insert(normalized(q));
  }
  for (std::size_t j = k; j-- > 0;) {
    std::vector<Inequality> pos, neg;
    for (const auto& q : levels[j + 1]) {
      if (sgn(q.a[j]) > 0)
        pos.push_back(q);
      else if (sgn(q.a[j]) < 0)
        neg.push_back(q);
      else
        levels[j].insert(q);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Inequality r{Vector(k), 0};
        const Rational mp = -q.a[j], mq = p.a[j];
        for (std::size_t l = 0; l < k; ++l) r.a[l] = mp * p.a[l] + mq * q.a[l];
        r.b = mp * p.b + mq * q.b;
        levels[j].insert(normalized(r));
      }
  }
  for (const auto& q : levels[0])
    if (q.b > 0) return std::nullopt;
  Vector c(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::optional<Rational> lower, upper;
    for (const auto& q : levels[j + 1]) {
      if (sgn(q.a[j]) == 0) continue;
      Rational rest = q.b;
      for (std::size_t l = 0; l < j; ++l) rest -= q.a[l] * c[l];
      Rational bound = rest / q.a[j];
      if (sgn(q.a[j]) > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else if (!upper || bound < *upper) {
        upper = bound;
      }
    }
    c[j] = lower ? *lower : upper ? *upper : Rational(0);
  }
  Vector w(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < k; ++j) w[r] += kernel[j][r] * c[j];
  return w;
}

}  // namespace

WeightSearch search_positive_weights(const Presentation& a) {
  const Ring& ring = *a.ring();
  const std::size_t n = ring.size();
  std::vector<Vector> rows;
  for (std::size_t v = 0; v < n; ++v)
    for (const auto& [m, c] : a.d_generator(v).terms()) {
      Vector row(n);
      for (const Factor& f : m.factors()) row[f.gen] += static_cast<long>(f.exp);
      row[v] -= 1;
      rows.push_back(std::move(row));
    }
  RationalMatrix h(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) h.set(r, c, rows[r][c]);
  WeightSearch out;
  out.kernel = kernel_basis(h);
  if (out.kernel.empty()) return out;
  auto point = positive_point(out.kernel, n);
  if (!point) return out;
  Integer l = 1;
  for (const auto& q : *point) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& q : *point) {
    Rational s = q * l;
    ints.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  std::vector<long> weights;
  for (auto& z : ints) {
    z /= g;
    if (!z.fits_slong_p()) return out;
    weights.push_back(z.get_si());
  }
  out.positive = std::move(weights);
  return out;
}

PresentationPtr with_weights(const Presentation& a, const std::vector<long>& weights) {
  const Ring& ring = *a.ring();
  if (weights.size() != ring.size()) throw Error(ErrorKind::DimensionMismatch, "one weight per generator required");
  std::vector<Generator> gens = ring.generators();
  for (std::size_t v = 0; v < gens.size(); ++v) gens[v].weight = static_cast<int>(weights[v]);
  RingPtr fresh = make_ring(gens);
  std::vector<Element> diff;
  for (std::size_t v = 0; v < ring.size(); ++v) {
    Element e = Element::zero(fresh);
    for (const auto& [m, c] : a.d_generator(v).terms()) e.add_term(m, c);
    diff.push_back(std::move(e));
  }
  return std::make_shared<const Presentation>(a.name(), fresh, std::move(diff));
}

Morphism phi_lambda(const PresentationPtr& a, const Rational& lambda) {
  if (is_zero(lambda)) throw Error(ErrorKind::ZeroLambda, "lambda must be nonzero");
  if (!a->has_weights()) throw Error(ErrorKind::WeightsMissing, "every generator needs a weight");
  auto issues = validate_weights(*a);
  if (!issues.empty()) throw Error(ErrorKind::PreconditionViolated, issues.front().detail);
  std::vector<Element> images;
  for (std::size_t v = 0; v < a->size(); ++v)
    images.push_back(a->generator(v).scaled(rational_pow(lambda, *a->ring()->generator(v).weight)));
  return Morphism(a, a, std::move(images));
}

FamilyReport verify_infinite_family(const Morphism& f, UniversalSide side, const Rational& lambda, long k) {
  if (is_zero(lambda) || lambda == 1 || lambda == -1)
    throw Error(ErrorKind::PreconditionViolated, "lambda must avoid 0, 1 and -1");
  if (k < 1) throw Error(ErrorKind::PreconditionViolated, "need at least two composites");
  const PresentationPtr& weighted = side == UniversalSide::Target ? f.target() : f.source();
  if (!weighted->has_weights()) throw Error(ErrorKind::WeightsMissing, "the universal side needs weights");
  auto issues = validate_weights(*weighted);
  if (!issues.empty()) throw Error(ErrorKind::PreconditionViolated, issues.front().detail);

  NullhomotopyResult null = decide_nullhomotopic(f);
  if (null.nullhomotopic) throw Error(ErrorKind::PreconditionViolated, "the map is nullhomotopic");
  const Morphism& normalized = *null.modified;
  FamilyReport report;
  report.side = side;
  report.stage = null.stage;
  const ObstructionEntry* entry = nullptr;
  for (const auto& e : null.obstruction->entries)
    if (!e.vanishes) {
      entry = &e;
      break;
    }
  report.generator = entry->generator;
  report.obstruction = entry->value.representative;
  const std::size_t w = entry->generator;
  const Ring& target_ring = *f.target()->ring();
  ComplexPtr complex = shared_complex(f.target());

  // Weight components of the obstruction that carry a nonzero class.
  std::map<long, Element> components;
  if (side == UniversalSide::Target) {
    std::map<long, Element> all;
    for (const auto& [m, c] : report.obstruction.terms()) {
      long wt = *monomial_weight(target_ring, m);
      auto it = all.try_emplace(wt, Element::zero(f.target()->ring())).first;
      it->second.add_term(m, c);
    }
    for (auto& [wt, comp] : all)
      if (!is_coboundary(*complex, comp)) components.emplace(wt, comp);
  } else {
    components.emplace(*f.source()->ring()->generator(w).weight, report.obstruction);
  }

  std::vector<Morphism> composites;
  for (long i = 0; i <= k; ++i) {
    Morphism phi = phi_lambda(weighted, rational_pow(lambda, i));
    composites.push_back(side == UniversalSide::Target ? compose(phi, normalized) : compose(normalized, phi));
  }
  ObstructionDecomposition d = degree_decomposition(f.source(), static_cast<int>(null.stage));
  report.all_distinct = true;
  report.closed_form = true;
  for (long i = 0; i <= k; ++i)
    for (long j = i + 1; j <= k; ++j) {
      FamilyPair pair;
      pair.i = i;
      pair.j = j;
      ExtensionResult r = decide_homotopic_zero_restriction(composites[i], composites[j], d);
      pair.distinct = !r.extended();
      Element diff = composites[i].image(w) - composites[j].image(w);
      pair.closed_form = true;
      Element predicted = Element::zero(f.target()->ring());
      for (const auto& [wt, comp] : components) {
        Rational factor = rational_pow(lambda, i * wt) - rational_pow(lambda, j * wt);
        pair.factors.emplace_back(wt, factor);
        if (is_zero(factor)) pair.closed_form = false;
      }
      if (side == UniversalSide::Target) {
        for (const auto& [m, c] : report.obstruction.terms()) {
          long wt = *monomial_weight(target_ring, m);
          predicted.add_term(m, c * (rational_pow(lambda, i * wt) - rational_pow(lambda, j * wt)));
        }
      } else {
        predicted = report.obstruction.scaled(pair.factors.front().second);
      }
      if (!(diff == predicted)) pair.closed_form = false;
      report.all_distinct = report.all_distinct && pair.distinct;
      report.closed_form = report.closed_form && pair.closed_form;
      report.pairs.push_back(std::move(pair));
    }
  report.cross_check = decide_homotopic(composites[0], composites[1]).verdict == Verdict::No;
  return report;
}

}  // namespace dgahom
