#include "hybridres/invariants.hpp"

#include <algorithm>

#include "hybridres/errors.hpp"
#include "hybridres/standard_basis.hpp"

namespace hybridres {

HSSequence HSSequence::cumulative() const {
  HSSequence out;
  std::uint64_t acc = 0;
  for (auto v : values) {
    acc += v;
    out.values.push_back(acc);
  }
  return out;
}

OrderValue orderOfIdeal(const Ideal& I, const std::optional<Point>& p) {
  Ideal J = p ? translate(I, *p) : I;
  OrderValue best = OrderValue::infinity();
  for (const auto& g : J.generators()) best = std::min(best, orderOfPoly(g));
  return best;
}

std::vector<Polynomial> deltaGenerators(const Ideal& I, unsigned c) {
  if (c == 0) throw DomainError("Delta exponent must be at least 1");
  std::vector<Polynomial> out;
  auto push = [&](const Polynomial& f) {
    if (f.isZero()) return false;
    if (std::find(out.begin(), out.end(), f) != out.end()) return false;
    out.push_back(f);
    return true;
  };
  std::vector<Polynomial> level;
  for (const auto& g : I.generators()) {
    if (push(g)) level.push_back(g);
  }
  const std::size_t n = I.ring()->size();
  for (unsigned k = 1; k < c && !level.empty(); ++k) {
    std::vector<Polynomial> next;
    for (const auto& f : level) {
      for (std::size_t v = 0; v < n; ++v) {
        Polynomial d = derivative(f, v);
        if (push(d)) next.push_back(std::move(d));
      }
    }
    level = std::move(next);
  }
  return out;
}

Ideal deltaIterate(const Ideal& I, unsigned c) {
  if (c == 0) throw DomainError("Delta exponent must be at least 1");
  if (c == 1) return I;
  Ideal raw(I.ring(), deltaGenerators(I, c));
  return standardBasis(raw, MonomialOrder::degrevlex(I.ring()->size())).toIdeal();
}

Ideal deltaIdeal(const Ideal& I) { return deltaIterate(I, 2); }

Ideal orderLocusIdeal(const Ideal& I, unsigned c) { return deltaIterate(I, c); }

bool orderLocusEmpty(const Ideal& I, unsigned c) {
  Ideal raw(I.ring(), deltaGenerators(I, c));
  return standardBasis(raw, MonomialOrder::degrevlex(I.ring()->size())).isUnit();
}

namespace {

std::vector<long long> subtractShifted(std::vector<long long> a, const std::vector<long long>& b, std::uint64_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<long long> numerator(std::vector<Monomial> gens) {
  gens = minimalizeMonomials(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& g : gens) {
    if (g.isOne()) return {};
  }
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime(gens[j]);
  }
  if (coprime) {
    std::vector<long long> acc{1};
    for (const auto& g : gens) acc = subtractShifted(acc, acc, g.degree());
    return acc;
  }
  // N(J + <m>) = N(J) - t^deg(m) N(J : m)
  Monomial m = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(g / g.gcd(m));
  return subtractShifted(numerator(gens), numerator(std::move(colon)), m.degree());
}

}  // namespace

std::vector<long long> hilbertNumerator(const std::vector<Monomial>& gens, std::size_t nvars) {
  for (const auto& g : gens) {
    if (g.size() != nvars) throw ContextMismatch("monomial size does not match the ring");
  }
  return numerator(gens);
}

HSSequence hsOfMonomialIdeal(const std::vector<Monomial>& gens, std::size_t nvars, unsigned maxDegree) {
  auto num = hilbertNumerator(gens, nvars);
  HSSequence hs;
  for (unsigned k = 0; k <= maxDegree; ++k) {
    mpz_class total = 0;
    for (std::size_t i = 0; i < num.size() && i <= k; ++i) {
      if (num[i] == 0) continue;
      // coefficient of t^(k-i) in 1/(1-t)^n
      mpz_class c;
      if (nvars == 0) {
        c = (k == i) ? 1 : 0;
      } else {
        mpz_bin_uiui(c.get_mpz_t(), nvars - 1 + (k - i), nvars - 1);
      }
      total += c * static_cast<long>(num[i]);
    }
    if (total < 0) throw InternalError("negative Hilbert function value");
    hs.values.push_back(total.get_ui());
  }
  return hs;
}

HSSequence hsSequence(const Ideal& I, unsigned maxDegree, const std::optional<Point>& p, bool cumulative) {
  Ideal J = p ? translate(I, *p) : I;
  auto sb = standardBasis(J, MonomialOrder::localDefault(J.ring()->size()));
  if (sb.isUnit()) throw DomainError("point does not lie on V(I)");
  auto hs = hsOfMonomialIdeal(leadingMonomials(sb), J.ring()->size(), maxDegree);
  return cumulative ? hs.cumulative() : hs;
}

std::strong_ordering hsCompare(const HSSequence& a, const HSSequence& b) {
  if (a.values.size() != b.values.size()) throw DomainError("Hilbert-Samuel sequences of different length");
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i] != b.values[i]) return a.values[i] <=> b.values[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace hybridres
