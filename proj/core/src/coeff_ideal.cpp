#include "hybridres/coeff_ideal.hpp"

#include <algorithm>

#include "hybridres/errors.hpp"

namespace hybridres {

std::map<unsigned, Polynomial> coefficientsInVariable(const Polynomial& f, std::size_t var) {
  if (var >= f.ring()->size()) throw UnknownVariable("variable index out of range");
  std::map<unsigned, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    m.set(var, 0);
    buckets[t.mono[var]].push_back({t.coeff, std::move(m)});
  }
  std::map<unsigned, Polynomial> out;
  for (auto& [k, terms] : buckets) out.emplace(k, Polynomial(f.ring(), std::move(terms)));
  return out;
}

std::map<std::vector<Monomial::Exponent>, Polynomial> coefficientsInFlag(const Polynomial& f,
                                                                       const std::vector<std::size_t>& flag) {
  for (auto v : flag) {
    if (v >= f.ring()->size()) throw UnknownVariable("variable index out of range");
  }
  std::map<std::vector<Monomial::Exponent>, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    std::vector<Monomial::Exponent> beta;
    for (auto v : flag) {
      beta.push_back(t.mono[v]);
      m.set(v, 0);
    }
    buckets[beta].push_back({t.coeff, std::move(m)});
  }
  std::map<std::vector<Monomial::Exponent>, Polynomial> out;
  for (auto& [k, terms] : buckets) out.emplace(k, Polynomial(f.ring(), std::move(terms)));
  return out;
}

mpz_class coefficientExponent(unsigned b, unsigned k) {
  if (k >= b) throw DomainError("coefficient level must be below the marking");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), b);
  return f / (b - k);
}

WeightedIdealSum coeffIdealVillamayor(const Ideal& I, std::size_t var, unsigned b) {
  const auto& ring = I.ring();
  if (var >= ring->size()) throw UnknownVariable("variable index out of range");
  if (b == 0) throw DomainError("coefficient ideal needs a positive marking");
  WeightedIdealSum w;
  w.ambient = restrictRing(*ring, {var});
  std::vector<std::optional<std::size_t>> map;
  for (std::size_t i = 0, j = 0; i < ring->size(); ++i) map.push_back(i == var ? std::nullopt : std::optional(j++));
  std::map<unsigned, std::vector<Polynomial>> levels;
  for (const auto& g : I.generators()) {
    for (auto& [k, c] : coefficientsInVariable(g, var)) {
      if (k >= b || c.isZero()) continue;
      levels[k].push_back(c);
    }
  }
  if (!w.ambient) {
    if (!levels.empty()) throw DomainError("coefficient ideal needs at least one variable besides z");
    return w;
  }
  for (auto& [k, polys] : levels) {
    std::vector<Polynomial> gens;
    for (const auto& c : polys) gens.push_back(c.transfer(w.ambient, map));
    w.components.push_back({Ideal(w.ambient, std::move(gens)), coefficientExponent(b, k), static_cast<long>(k)});
  }
  return w;
}

OrderValue weightedOrder(const WeightedIdealSum& w, const std::optional<Point>& p) {
  OrderValue best = OrderValue::infinity();
  for (const auto& c : w.components) best = std::min(best, orderOfIdeal(c.ideal, p) * c.exponent);
  return best;
}

Ideal expandWeighted(const WeightedIdealSum& w, long budget) {
  if (!w.ambient) return Ideal();
  mpz_class cost = 0;
  for (const auto& c : w.components) cost += c.exponent * static_cast<unsigned long>(c.ideal.size());
  if (cost > budget) throw DomainError("weighted ideal too large to expand");
  Ideal out = Ideal::zero(w.ambient);
  for (const auto& c : w.components) out = idealSum(out, idealPower(c.ideal, c.exponent.get_si()));
  return out;
}

MonomialSplit monomialSplit(const Ideal& I, const std::vector<std::size_t>& exceptional) {
  if (I.isZero()) throw DomainError("monomial split of the zero ideal");
  const std::size_t n = I.ring()->size();
  Monomial m(n);
  for (auto v : exceptional) {
    if (v >= n) throw UnknownVariable("variable index out of range");
    Monomial::Exponent e = I.generators().front().valuation(v);
    for (const auto& g : I.generators()) e = std::min(e, g.valuation(v));
    m.set(v, e);
  }
  std::vector<Polynomial> rest;
  for (const auto& g : I.generators()) rest.push_back(g.divideByMonomial(m));
  return {m, Ideal(I.ring(), std::move(rest))};
}

}  // namespace hybridres
