#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "hybridres/blowup.hpp"
#include "hybridres/errors.hpp"
#include "hybridres/standard_basis.hpp"
#include "properties.hpp"

using namespace hybridres;
using fixtures::ideal;
using fixtures::poly;

namespace {

BlowupChart pointChart(const RingPtr& r, std::size_t var) { return chartFor(r, Center::origin(*r), var); }

bool same(const Ideal& a, const Ideal& b) { return idealEquals(a, b, fixtures::grevlex(a.ring())); }

}  // namespace

TEST_CASE("charts of a blowup") {
  auto r3 = fixtures::ring62();
  auto charts = blowupCharts(r3, Center::origin(*r3));
  REQUIRE(charts.size() == 3);
  const auto& cx = charts[0];
  CHECK(cx.chartVar == 0);
  CHECK(!cx.substitution[0].has_value());
  CHECK(*cx.substitution[1] == poly(r3, "x*y"));
  CHECK(*cx.substitution[2] == poly(r3, "x*z"));
  CHECK(cx.exceptional().generators() == ideal(r3, {"x"}).generators());
  CHECK(blowupCharts(fixtures::ring61(), Center::origin(*fixtures::ring61())).size() == 5);
  CHECK_THROWS_AS(Center(*r3, {1}), DomainError);

  auto partial = blowupCharts(r3, Center(*r3, {0, 2}));
  REQUIRE(partial.size() == 2);
  CHECK(partial[1].chartVar == 2);
  CHECK(!partial[1].substitution[1].has_value());
  CHECK(*partial[1].substitution[0] == poly(r3, "x*z"));
}

TEST_CASE("total transforms") {
  auto r = fixtures::ring61();
  auto t = totalTransform(fixtures::ideal61(), pointChart(r, 0));
  CHECK(t.kind == TransformKind::Total);
  CHECK(t.ideal.generators() == ideal(r, {"x^2*(z^2+x^4*y^3)", "x^5*(w^5+1+v^3*y^2)"}).generators());
  auto xy = makeRing({"x", "y"});
  CHECK(totalTransform(ideal(xy, {"x"}), pointChart(xy, 0)).ideal.generators() == ideal(xy, {"x"}).generators());
  CHECK(totalTransform(Ideal::zero(xy), pointChart(xy, 0)).ideal.isZero());
}

TEST_CASE("weak transforms") {
  auto r = fixtures::ring61();
  auto w1 = weakTransform(fixtures::ideal61(), pointChart(r, 0));
  CHECK(w1.controlledExponent == 2);
  CHECK(same(w1.ideal, ideal(r, {"z^2+x^4*y^3", "x^3*w^5+x^3+x^3*v^3*y^2"})));
  auto w2 = weakTransform(fixtures::ideal61(), pointChart(r, 1));
  CHECK(w2.controlledExponent == 2);
  CHECK(same(w2.ideal, ideal(r, {"z^2+x^3*y^4", "y^3*w^5+y^3*x^5+v^3*y^3"})));
  auto xy = makeRing({"x", "y"});
  auto p = ideal(xy, {"x^2+y^3"});
  auto wp = weakTransform(p, pointChart(xy, 1));
  CHECK(wp.controlledExponent == 2);
  CHECK(same(wp.ideal, strictTransform(p, pointChart(xy, 1)).ideal));
  CHECK(weakTransform(Ideal::zero(xy), pointChart(xy, 0)).controlledExponent == 0);
}

TEST_CASE("strict transforms") {
  auto r = fixtures::ring61();
  auto s1 = strictTransform(fixtures::ideal61(), pointChart(r, 0));
  CHECK(s1.kind == TransformKind::Strict);
  CHECK(same(s1.ideal, ideal(r, {"z^2+x^4*y^3", "w^5+1+v^3*y^2"})));
  auto r2 = fixtures::ring62();
  CHECK(same(strictTransform(fixtures::ideal62(), pointChart(r2, 2)).ideal, ideal(r2, {"x^5+y^11*z^6", "1+x^9"})));
  auto xy = makeRing({"x", "y"});
  CHECK(strictTransform(ideal(xy, {"x"}), pointChart(xy, 0)).ideal.generators() == ideal(xy, {"1"}).generators());
  // Generator-wise division gives <y^2 - x, y^2>; saturating by x then yields the unit ideal.
  auto hidden = strictTransform(ideal(xy, {"y^2-x^3", "x*y^2"}), pointChart(xy, 0));
  CHECK(same(hidden.ideal, ideal(xy, {"1"})));
}

TEST_CASE("strict transforms through a standard basis") {
  auto r = fixtures::ring61();
  auto ord = fixtures::order61();
  CHECK(same(strictTransformViaSB(fixtures::ideal61(), pointChart(r, 1), ord).ideal,
             ideal(r, {"z^2+x^3*y^4", "w^5+x^5+v^3"})));
  CHECK(same(strictTransformViaSB(fixtures::ideal61(), pointChart(r, 4), ord).ideal,
             ideal(r, {"z^2+x^3*y^3*v^4", "w^5+x^5+y^2"})));
  auto r2 = fixtures::ring62();
  CHECK(same(strictTransformViaSB(fixtures::ideal62(), pointChart(r2, 1), fixtures::order62()).ideal,
             ideal(r2, {"x^5+y^6", "z^9+x^9"})));
  for (std::size_t v = 0; v < 5; ++v) {
    CHECK(same(strictTransformViaSB(fixtures::ideal61(), pointChart(r, v), ord).ideal,
               strictTransform(fixtures::ideal61(), pointChart(r, v)).ideal));
  }
  for (std::size_t v = 0; v < 3; ++v) {
    CHECK(same(strictTransformViaSB(fixtures::ideal62(), pointChart(r2, v), fixtures::order62()).ideal,
               strictTransform(fixtures::ideal62(), pointChart(r2, v)).ideal));
  }
}

TEST_CASE("transform laws on random ideals") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    auto ring = properties::randomRing(rng, 3);
    if (ring->size() < 2) continue;
    const std::size_t n = ring->size();
    auto I = properties::randomIdeal(rng, ring, {}, 1);
    auto chart = pointChart(ring, rng() % n);
    auto g = fixtures::grevlex(ring);
    auto total = totalTransform(I, chart);
    auto weak = weakTransform(I, chart);
    auto strict = strictTransform(I, chart);
    CHECK(idealContains(weak.ideal, total.ideal, g));
    CHECK(idealContains(strict.ideal, weak.ideal, g));
    auto Eb = idealPower(chart.exceptional(), weak.controlledExponent);
    CHECK(idealEquals(idealProduct(Eb, weak.ideal), total.ideal, g));
    CHECK(idealEquals(quotientByVariable(strict.ideal, chart.chartVar, g), strict.ideal, g));

    // Permuting the variables permutes the charts.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> names(n);
    for (std::size_t k = 0; k < n; ++k) names[perm[k]] = ring->name(k);
    auto pr = makeRing(names);
    std::vector<std::optional<std::size_t>> map(perm.begin(), perm.end());
    std::vector<Polynomial> moved;
    for (const auto& f : I.generators()) moved.push_back(f.transfer(pr, map));
    auto pchart = pointChart(pr, perm[chart.chartVar]);
    std::vector<Polynomial> expected;
    for (const auto& f : strict.ideal.generators()) expected.push_back(f.transfer(pr, map));
    CHECK(idealEquals(strictTransform(Ideal(pr, moved), pchart).ideal, Ideal(pr, expected), fixtures::grevlex(pr)));
  }
}
