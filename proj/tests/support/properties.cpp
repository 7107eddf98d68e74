#include "properties.hpp"

#include <algorithm>
#include <sstream>

#include "fixtures.hpp"
#include "hybridres/blowup.hpp"
#include "hybridres/hybrid.hpp"
#include "hybridres/invariants.hpp"
#include "hybridres/standard_basis.hpp"
#include "oracles.hpp"

namespace properties {

using namespace hybridres;

namespace {

const std::vector<std::string> kNames = {"x", "y", "z", "w"};

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Monomial randomMonomial(std::mt19937_64& rng, std::size_t n, unsigned minDeg, unsigned maxDeg) {
  auto deg = static_cast<unsigned>(uniform(rng, minDeg, maxDeg));
  Monomial m(n);
  for (unsigned k = 0; k < deg; ++k) {
    auto v = uniform(rng, 0, n - 1);
    m.set(v, m[v] + 1);
  }
  return m;
}

std::string describe(const Ideal& I) { return formatIdeal(I, MonomialOrder::degrevlex(I.ring()->size())); }

}  // namespace

RingPtr randomRing(std::mt19937_64& rng, std::size_t maxVars) {
  auto n = uniform(rng, 1, maxVars);
  return makeRing(std::vector<std::string>(kNames.begin(), kNames.begin() + static_cast<long>(n)));
}

Polynomial randomPolynomial(std::mt19937_64& rng, const RingPtr& ring, unsigned maxDegree, std::size_t maxTerms,
                            int maxCoeff, unsigned minDegree) {
  std::vector<Term> terms;
  auto k = uniform(rng, 1, maxTerms);
  std::uniform_int_distribution<int> coeff(-maxCoeff, maxCoeff);
  for (std::size_t i = 0; i < k; ++i) {
    int c = 0;
    while (c == 0) c = coeff(rng);
    terms.push_back({c, randomMonomial(rng, ring->size(), minDegree, maxDegree)});
  }
  return Polynomial(ring, std::move(terms));
}

Ideal randomIdeal(std::mt19937_64& rng, const RingPtr& ring, const RandomIdealSpec& spec, unsigned minDegree) {
  std::vector<Polynomial> gens;
  auto k = uniform(rng, 1, spec.maxGenerators);
  while (gens.size() < k) {
    auto p = randomPolynomial(rng, ring, spec.maxDegree, spec.maxTerms, spec.maxCoeff, minDegree);
    if (!p.isZero()) gens.push_back(std::move(p));
  }
  return Ideal(ring, std::move(gens));
}

Outcome standardBasisCriterion(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (std::size_t i = 0; i < count; ++i) {
    auto ring = randomRing(rng, 3);
    auto I = randomIdeal(rng, ring, {});
    const std::size_t n = ring->size();
    MonomialOrder ord = MonomialOrder::localDefault(n);
    switch (i % 3) {
      case 1:
        ord = MonomialOrder::degrevlex(n);
        break;
      case 2:
        ord = MonomialOrder::lex(n);
        break;
      default:
        break;
    }
    ++out.cases;
    for (bool reduced : {false, true}) {
      auto sb = standardBasis(I, ord, reduced);
      if (!oracles::satisfiesBuchbergerCriterion(sb.basis(), I.generators(), ord)) {
        out.fail("criterion fails for " + describe(I) + " under " + ord.describe(*ring));
        break;
      }
    }
  }
  return out;
}

Outcome hsVersusStaircase(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (std::size_t i = 0; i < count; ++i) {
    auto ring = randomRing(rng, 3);
    const std::size_t n = ring->size();
    auto D = static_cast<unsigned>(uniform(rng, 0, 8));
    std::vector<Monomial> gens;
    auto k = uniform(rng, 1, 4);
    for (std::size_t j = 0; j < k; ++j) gens.push_back(randomMonomial(rng, n, 1, 6));
    ++out.cases;
    auto expected = oracles::staircaseCounts(gens, n, D);
    auto closed = hsOfMonomialIdeal(gens, n, D).values;
    std::vector<Polynomial> ps;
    for (const auto& m : gens) ps.push_back(Polynomial::monomial(ring, m));
    auto viaBasis = hsSequence(Ideal(ring, ps), D).values;
    if (closed != expected || viaBasis != expected) {
      out.fail("HS mismatch for " + describe(Ideal(ring, ps)) + " up to degree " + std::to_string(D));
    }
  }
  return out;
}

Outcome valuationLaw(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (std::size_t i = 0; i < count; ++i) {
    auto ring = randomRing(rng, 3);
    auto f = randomPolynomial(rng, ring, 6, 4, 5);
    auto g = randomPolynomial(rng, ring, 6, 4, 5);
    if (i % 50 == 0) g = Polynomial(ring);
    ++out.cases;
    auto product = oracles::naiveProduct(f, g);
    if (f * g != product) {
      out.fail("product disagrees with the naive expansion");
      continue;
    }
    if (orderOfPoly(product) != orderOfPoly(f) + orderOfPoly(g)) {
      out.fail("ord(fg) != ord f + ord g for " + formatCanonical(f, MonomialOrder::degrevlex(ring->size())));
    }
  }
  return out;
}

Outcome transformChain(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Outcome out;
  RandomIdealSpec spec;
  spec.maxDegree = 4;
  spec.maxGenerators = 2;
  for (std::size_t i = 0; i < count; ++i) {
    auto n = uniform(rng, 2, 3);
    auto ring = makeRing(std::vector<std::string>(kNames.begin(), kNames.begin() + static_cast<long>(n)));
    auto I = randomIdeal(rng, ring, spec, 1);
    std::vector<std::size_t> vars(n);
    for (std::size_t v = 0; v < n; ++v) vars[v] = v;
    std::shuffle(vars.begin(), vars.end(), rng);
    vars.resize(uniform(rng, 2, n));
    Center center(*ring, vars);
    auto chart = chartFor(ring, center, center.variables()[uniform(rng, 0, vars.size() - 1)]);
    auto total = totalTransform(I, chart);
    auto weak = weakTransform(I, chart);
    auto strict = strictTransform(I, chart);
    auto ord = MonomialOrder::degrevlex(n);
    ++out.cases;
    bool ok = idealContains(weak.ideal, total.ideal, ord) && idealContains(strict.ideal, weak.ideal, ord);
    Ideal Eb = idealPower(chart.exceptional(), weak.controlledExponent);
    ok = ok && idealEquals(idealProduct(Eb, weak.ideal), total.ideal, ord);
    if (!ok) out.fail("transform chain fails for " + describe(I));
  }
  return out;
}

namespace {

struct StagingSignature {
  std::vector<std::pair<unsigned, unsigned>> steps;
  OrderValue jkOrder;
  OrderValue coeffOrder;
  bool operator==(const StagingSignature&) const = default;
};

StagingSignature signatureOf(const Ideal& I, const MonomialOrder& ord) {
  auto h = stagedBuild(I, ord);
  StagingSignature s;
  for (const auto& m : h.marked) {
    std::pair<unsigned, unsigned> step{m.order, m.width};
    if (std::find(s.steps.begin(), s.steps.end(), step) == s.steps.end()) s.steps.push_back(step);
  }
  s.jkOrder = orderOfIdeal(h.Jk);
  s.coeffOrder = weightedOrder(modifiedCoeffIdeal(h));
  return s;
}

std::string format(const StagingSignature& s) {
  std::ostringstream os;
  for (const auto& [d, e] : s.steps) os << "(" << d << "," << e << ")";
  os << " ord J=" << s.jkOrder << " coeff=" << s.coeffOrder;
  return os.str();
}

}  // namespace

Outcome stagingInvariance(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Outcome out;
  struct Case {
    Ideal ideal;
    MonomialOrder ord;
  };
  std::vector<Case> cases = {{fixtures::ideal61(), fixtures::order61()}, {fixtures::ideal62(), fixtures::order62()}};
  std::vector<StagingSignature> base;
  for (const auto& c : cases) base.push_back(signatureOf(c.ideal, c.ord));
  for (std::size_t i = 0; i < count; ++i) {
    const auto& c = cases[i % cases.size()];
    const auto& ring = c.ideal.ring();
    const std::size_t n = ring->size();
    // one sparse quadratic perturbation x_v -> x_v + a*m, identity linear part
    std::vector<std::optional<Polynomial>> images(n);
    auto v = uniform(rng, 0, n - 1);
    int a = std::uniform_int_distribution<int>(1, 2)(rng) * (uniform(rng, 0, 1) ? 1 : -1);
    Monomial m = randomMonomial(rng, n, 2, 2);
    images[v] = Polynomial::variable(ring, v) + Polynomial::monomial(ring, m, a);
    Ideal moved = substitute(c.ideal, images);
    ++out.cases;
    auto sig = signatureOf(moved, c.ord);
    if (!(sig == base[i % cases.size()])) {
      out.fail("staging changed under " + ring->name(v) + " -> " + formatCanonical(*images[v], c.ord) + ": " +
               format(sig) + " vs " + format(base[i % cases.size()]));
    }
  }
  return out;
}

Outcome strictViaStandardBasis() {
  Outcome out;
  struct Case {
    Ideal ideal;
    MonomialOrder ord;
  };
  for (const auto& c : {Case{fixtures::ideal61(), fixtures::order61()}, Case{fixtures::ideal62(), fixtures::order62()}}) {
    const auto& ring = c.ideal.ring();
    for (const auto& chart : blowupCharts(ring, Center::origin(*ring))) {
      ++out.cases;
      auto viaSB = strictTransformViaSB(c.ideal, chart, c.ord).ideal;
      auto sat = strictTransform(c.ideal, chart).ideal;
      if (!idealEquals(viaSB, sat, MonomialOrder::degrevlex(ring->size()))) {
        out.fail("chart " + ring->name(chart.chartVar) + " of " + describe(c.ideal));
      }
    }
  }
  return out;
}

}  // namespace properties
