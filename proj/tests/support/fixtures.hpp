#pragma once

#include <string>
#include <vector>

#include "hybridres/ideal.hpp"
#include "hybridres/monomial_order.hpp"
#include "hybridres/parser.hpp"
#include "hybridres/ring.hpp"

namespace fixtures {

using namespace hybridres;

inline Polynomial poly(const RingPtr& ring, const std::string& text) { return parsePolynomial(text, ring); }

inline Ideal ideal(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(poly(ring, g));
  return Ideal(ring, std::move(ps));
}

// <z^2+x^3y^3, w^5+x^5+v^3y^2> in x,y,z,w,v with the local degrevlex order.
inline RingPtr ring61() {
  static RingPtr r = makeRing({"x", "y", "z", "w", "v"});
  return r;
}
inline MonomialOrder order61() { return MonomialOrder::localDefault(5); }
inline Ideal ideal61() { return ideal(ring61(), {"z^2+x^3*y^3", "w^5+x^5+v^3*y^2"}); }

// <x^5+y^11, z^9+x^9> in x,y,z, ordered z > y > x.
inline RingPtr ring62() {
  static RingPtr r = makeRing({"x", "y", "z"});
  return r;
}
inline MonomialOrder order62() { return MonomialOrder(OrderKind::LocalNegDegRevLex, {2, 1, 0}); }
inline Ideal ideal62() { return ideal(ring62(), {"x^5+y^11", "z^9+x^9"}); }

inline MonomialOrder grevlex(const RingPtr& r) { return MonomialOrder::degrevlex(r->size()); }

}  // namespace fixtures
