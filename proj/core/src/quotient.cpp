#include <algorithm>

#include "hybridres/errors.hpp"
#include "hybridres/standard_basis.hpp"

namespace hybridres {

namespace {

Polynomial homogenize(const Polynomial& f, const RingPtr& target) {
  const std::size_t n = f.ring()->size();
  const auto d = static_cast<Monomial::Exponent>(f.degree());
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Exponent> e = t.mono.exponents();
    e.push_back(d - static_cast<Monomial::Exponent>(t.mono.degree()));
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  (void)n;
  return Polynomial(target, std::move(terms));
}

Polynomial dehomogenize(const Polynomial& f, const RingPtr& target) {
  const std::size_t n = target->size();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Exponent> e(t.mono.exponents().begin(), t.mono.exponents().begin() + n);
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial(target, std::move(terms));
}

}  // namespace

// In degrevlex with x_var last, a homogeneous Groebner basis G of J gives
// the basis {g / x_var^min(v(g), p)} of J : x_var^p. The ideal is first
// homogenized through a Groebner basis so that the colon commutes with
// dehomogenization.
Ideal quotientByVariablePower(const Ideal& I, std::size_t var, unsigned power, const MonomialOrder& ord) {
  const auto& ring = I.ring();
  if (var >= ring->size()) throw UnknownVariable("variable index out of range");
  if (ord.size() != ring->size()) throw ContextMismatch("ordering does not match the ring");
  if (I.isZero() || power == 0) return I;
  const std::size_t n = ring->size();
  auto grevlex = MonomialOrder::degrevlex(n);
  auto gb = standardBasis(I, grevlex);
  if (gb.isUnit()) return Ideal::unit(ring);

  auto names = ring->names();
  names.push_back(freshName(*ring, "h"));
  RingPtr hring = makeRing(std::move(names));
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != var) perm.push_back(i);
  }
  perm.push_back(n);
  perm.push_back(var);
  MonomialOrder hord(OrderKind::GlobalDegRevLex, perm);

  std::vector<Polynomial> hom;
  for (const auto& g : gb.basis()) hom.push_back(homogenize(g, hring));
  auto hgb = standardBasis(Ideal(hring, std::move(hom)), hord);

  std::vector<Polynomial> out;
  for (const auto& g : hgb.basis()) {
    auto v = std::min<Monomial::Exponent>(g.valuation(var), power);
    Polynomial q = g.divideByMonomial(Monomial::variable(n + 1, var, v));
    out.push_back(dehomogenize(q, ring));
  }
  return standardBasis(Ideal(ring, std::move(out)), grevlex).toIdeal();
}

Ideal quotientByVariable(const Ideal& I, std::size_t var, const MonomialOrder& ord) {
  return quotientByVariablePower(I, var, 1, ord);
}

Saturation saturateByVariable(const Ideal& I, std::size_t var, const MonomialOrder& ord,
                              std::size_t maxIterations) {
  Saturation s{I, 0};
  for (std::size_t it = 0; it < maxIterations; ++it) {
    Ideal next = quotientByVariable(s.ideal, var, ord);
    ++s.steps;
    if (idealEquals(next, s.ideal, ord)) {
      s.ideal = std::move(next);
      return s;
    }
    s.ideal = std::move(next);
  }
  throw InternalError("saturation did not stabilize");
}

}  // namespace hybridres
