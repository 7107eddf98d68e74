#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "hybridres/blowup.hpp"
#include "hybridres/errors.hpp"
#include "hybridres/invariants.hpp"
#include "hybridres/standard_basis.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace hybridres;
using fixtures::ideal;
using fixtures::poly;

namespace {

// (1 - t^a)(1 - t^b) / (1 - t)^n up to degree D, by plain convolution.
std::vector<std::uint64_t> completeIntersectionSeries(unsigned a, unsigned b, std::size_t n, unsigned D) {
  std::vector<long long> num(D + 1, 0);
  num[0] = 1;
  auto mulBinomial = [&](unsigned k) {
    for (int s = static_cast<int>(D); s >= static_cast<int>(k); --s) num[s] -= num[s - k];
  };
  mulBinomial(a);
  mulBinomial(b);
  for (std::size_t i = 0; i < n; ++i) {
    for (unsigned s = 1; s <= D; ++s) num[s] += num[s - 1];
  }
  return {num.begin(), num.end()};
}

Ideal chart2Strict() { return ideal(fixtures::ring61(), {"z^2+x^3*y^4", "w^5+x^5+v^3"}); }

}  // namespace

TEST_CASE("order of an ideal") {
  auto r = fixtures::ring61();
  CHECK(orderOfIdeal(fixtures::ideal61()) == 2);
  CHECK(orderOfIdeal(ideal(r, {"z^5+z^3*x^3*y^3", "w^5+x^5+v^3*y^2"})) == 5);
  CHECK(orderOfIdeal(Ideal::unit(r)) == 0);
  CHECK(orderOfIdeal(Ideal::zero(r)).isInfinite());
  CHECK(orderOfIdeal(fixtures::ideal62()) == 5);
  // x^2 + x^3 vanishes to order 1 at x = -1
  auto x = makeRing({"x"});
  CHECK(orderOfIdeal(ideal(x, {"x^2+x^3"}), Point{Rational(-1)}) == 1);
  CHECK(orderOfIdeal(ideal(x, {"x^2+x^3"}), Point{Rational(1)}) == 0);
}

TEST_CASE("Delta ideals") {
  auto r = fixtures::ring61();
  auto g = fixtures::grevlex(r);
  CHECK(idealEquals(deltaIdeal(fixtures::ideal61()),
                    ideal(r, {"z", "x^2*y^3", "x^3*y^2", "w^4", "x^4", "v^3*y", "v^2*y^2"}), g));
  CHECK(idealEquals(deltaIdeal(chart2Strict()), ideal(r, {"z", "x^2*y^4", "x^3*y^3", "w^4", "x^4", "v^2"}), g));
  auto x = makeRing({"x"});
  CHECK(idealEquals(deltaIdeal(ideal(x, {"x^2"})), ideal(x, {"x"}), fixtures::grevlex(x)));
  CHECK(idealEquals(deltaIterate(fixtures::ideal61(), 1), fixtures::ideal61(), g));
  CHECK(idealEquals(deltaIterate(fixtures::ideal61(), 2), deltaIdeal(fixtures::ideal61()), g));
  CHECK_THROWS_AS(deltaIterate(fixtures::ideal61(), 0), DomainError);

  auto r2 = fixtures::ring62();
  auto d5 = deltaIterate(fixtures::ideal62(), 5);
  CHECK(idealMembership(poly(r2, "x"), d5, fixtures::order62()));
  auto sb = standardBasis(d5, fixtures::order62());
  bool linearX = false;
  for (const auto& b : sb.basis()) {
    if (orderOfPoly(b) == 1 && b.homogeneousPart(1) == poly(r2, "x")) linearX = true;
  }
  CHECK(linearX);
  auto raw = deltaGenerators(fixtures::ideal62(), 5);
  CHECK(std::find(raw.begin(), raw.end(), poly(r2, "120*x")) != raw.end());
}

TEST_CASE("Hilbert-Samuel sequences") {
  auto r = fixtures::ring61();
  CHECK(hsSequence(fixtures::ideal61(), 3).values == std::vector<std::uint64_t>{1, 5, 14, 30});
  CHECK(hsSequence(chart2Strict(), 3).values == std::vector<std::uint64_t>{1, 5, 14, 29});
  CHECK(hsSequence(ideal(r, {"z^2+x^3*y^3*v^4", "w^5+x^5+y^2"}), 3).values ==
        std::vector<std::uint64_t>{1, 5, 13, 25});
  CHECK(hsSequence(fixtures::ideal61(), 3, std::nullopt, true).values == std::vector<std::uint64_t>{1, 6, 20, 50});
  CHECK(hsSequence(fixtures::ideal61(), 3).cumulative() == hsSequence(fixtures::ideal61(), 3, std::nullopt, true));
  CHECK_THROWS_AS(hsSequence(Ideal::unit(r), 3), DomainError);
  // Along the singular line the chart-2 sequence is unchanged.
  CHECK(hsSequence(chart2Strict(), 3, Point{0, 5, 0, 0, 0}).values == std::vector<std::uint64_t>{1, 5, 14, 29});
}

TEST_CASE("Hilbert-Samuel comparison") {
  HSSequence a{{1, 5, 14, 29}}, b{{1, 5, 14, 30}}, c{{1, 5, 13, 25}};
  CHECK(hsCompare(a, b) == std::strong_ordering::less);
  CHECK(hsCompare(c, b) == std::strong_ordering::less);
  CHECK(hsCompare(b, a) == std::strong_ordering::greater);
  CHECK(hsCompare(a, a) == std::strong_ordering::equal);
  CHECK_THROWS_AS(hsCompare(a, HSSequence{{1, 5}}), DomainError);
}

TEST_CASE("Hilbert-Samuel of two-generator monomial ideals") {
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    auto ring = makeRing(names);
    for (unsigned a = 1; a <= 5; ++a) {
      for (unsigned b = 1; b <= 5; ++b) {
        auto I = Ideal(ring, {Polynomial::monomial(ring, Monomial::variable(n, 0, a)),
                              Polynomial::monomial(ring, Monomial::variable(n, 1, b))});
        CHECK(hsSequence(I, 8).values == completeIntersectionSeries(a, b, n, 8));
      }
    }
  }
}

TEST_CASE("Hilbert-Samuel against staircase enumeration") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 80; ++i) {
    std::size_t n = 1 + rng() % 3;
    std::vector<Monomial> gens;
    for (int k = 0, m = 1 + rng() % 4; k < m; ++k) {
      std::vector<Monomial::Exponent> e(n);
      for (auto& x : e) x = rng() % 4;
      if (std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; })) e[0] = 1;
      gens.emplace_back(e);
    }
    CHECK(hsOfMonomialIdeal(gens, n, 8).values == oracles::staircaseCounts(gens, n, 8));
  }
}

TEST_CASE("order loci") {
  auto r = fixtures::ring61();
  auto locus = orderLocusIdeal(chart2Strict(), 2);
  for (int t : {0, 1, -1, 2}) {
    Point p{0, t, 0, 0, 0};
    for (const auto& g : locus.generators()) CHECK(g.evaluate(p) == 0);
    CHECK(orderOfIdeal(chart2Strict(), p) == 2);
  }
  for (const Point& off : {Point{1, 0, 0, 0, 0}, Point{0, 0, 1, 0, 0}, Point{0, 1, 0, 0, 1}}) {
    bool vanishes = std::all_of(locus.generators().begin(), locus.generators().end(),
                                [&](const Polynomial& g) { return g.evaluate(off) == 0; });
    CHECK(!vanishes);
  }
  CHECK(idealEquals(orderLocusIdeal(chart2Strict(), 1), chart2Strict(), fixtures::grevlex(r)));
  CHECK(!orderLocusEmpty(chart2Strict(), 2));

  auto r2 = fixtures::ring62();
  auto chart = chartFor(r2, Center::origin(*r2), 0);
  auto strict = strictTransform(fixtures::ideal62(), chart).ideal;
  CHECK(orderLocusEmpty(strict, 2));
  CHECK(idealMembership(poly(strict.ring(), "1"), ideal(strict.ring(), {"1+x^9", "x^8"}), fixtures::grevlex(r2)));
}

TEST_CASE("invariant properties") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    auto ring = properties::randomRing(rng, 3);
    const std::size_t n = ring->size();
    auto I = properties::randomIdeal(rng, ring, {}, 1);
    auto D = deltaIdeal(I);
    CHECK(idealContains(D, I, fixtures::grevlex(ring)));
    auto ord = orderOfIdeal(I);
    auto dOrd = orderOfIdeal(D);
    if (ord.isFinite() && ord > 0) CHECK(dOrd == OrderValue(std::max(ord.toLong() - 1, 0L)));

    Point origin(n, Rational(0));
    bool allVanish = true;
    for (const auto& g : D.generators()) allVanish = allVanish && g.evaluate(origin) == 0;
    CHECK(allVanish == (ord >= 2));

    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = n - 1 - k;
    std::vector<std::string> names;
    for (auto k : perm) names.push_back(ring->name(k));
    auto permuted = makeRing(names);
    std::vector<std::optional<std::size_t>> map(n);
    for (std::size_t k = 0; k < n; ++k) map[perm[k]] = k;
    std::vector<Polynomial> moved;
    for (const auto& g : I.generators()) moved.push_back(g.transfer(permuted, map));
    if (ord > 0) CHECK(hsSequence(Ideal(permuted, moved), 6) == hsSequence(I, 6));
  }
}
