#include <algorithm>

#include "hybridres/errors.hpp"
#include "hybridres/hybrid.hpp"

namespace hybridres {

namespace {

struct Row {
  std::vector<Rational> linear;
  Polynomial poly;
};

std::vector<Rational> linearPart(const Polynomial& f) {
  std::vector<Rational> out(f.ring()->size(), 0);
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != 1) continue;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (t.mono[i] == 1) out[i] = t.coeff;
    }
  }
  return out;
}

}  // namespace

std::vector<FrameElement> maximalContactFrame(const Ideal& I, unsigned d, const MonomialOrder& ord,
                                              const std::vector<std::size_t>& existingFlag) {
  if (d == 0) throw DomainError("frame degree must be positive");
  const auto& ring = I.ring();
  const std::size_t n = ring->size();
  if (ord.size() != n) throw ContextMismatch("ordering does not match the ring");

  // Order-one elements of Delta^(d-1)(I) come from d-1 fold partials of the
  // generators of order exactly d.
  std::vector<Row> rows;
  for (const auto& g : I.generators()) {
    auto o = orderOfPoly(g);
    if (o < OrderValue(static_cast<long>(d))) throw DomainError("ideal has order below the frame degree");
    if (o != OrderValue(static_cast<long>(d))) continue;
    Polynomial initial = g.homogeneousPart(d);
    for (const auto& alpha : monomialsOfDegree(n, d - 1)) {
      bool hit = std::any_of(initial.terms().begin(), initial.terms().end(),
                             [&](const Term& t) { return alpha.divides(t.mono); });
      if (!hit) continue;
      Polynomial e = derivative(g, alpha);
      rows.push_back({linearPart(e), std::move(e)});
    }
  }

  std::vector<std::size_t> preference = existingFlag;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(existingFlag.begin(), existingFlag.end(), i) == existingFlag.end()) rest.push_back(i);
  }
  std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
    return ord.greater(Monomial::variable(n, a), Monomial::variable(n, b));
  });
  preference.insert(preference.end(), rest.begin(), rest.end());

  std::vector<FrameElement> frame;
  std::vector<Row> chosen;
  for (auto v : preference) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const Row& r) { return r.linear[v] != 0; });
    if (it == rows.end()) continue;
    Row pivot = std::move(*it);
    rows.erase(it);
    Rational inv = 1 / pivot.linear[v];
    for (auto& c : pivot.linear) c *= inv;
    pivot.poly = pivot.poly.scaled(inv);
    auto eliminate = [&](Row& r) {
      Rational c = r.linear[v];
      if (c == 0) return;
      for (std::size_t i = 0; i < n; ++i) r.linear[i] -= c * pivot.linear[i];
      r.poly = r.poly - pivot.poly.scaled(c);
    };
    for (auto& r : rows) eliminate(r);
    for (auto& r : chosen) eliminate(r);
    chosen.push_back(std::move(pivot));
    frame.push_back({Polynomial(), v});
  }
  for (std::size_t k = 0; k < frame.size(); ++k) frame[k].element = std::move(chosen[k].poly);
  return frame;
}

std::vector<FrameElement> maximalContactFrame(const Ideal& I, unsigned d) {
  return maximalContactFrame(I, d, MonomialOrder::localDefault(I.ring()->size()));
}

// x_p -> P with P = (x_p - sum_{i != p} c_i x_i - H(x)|_{x_p = P}) / c_p,
// iterated until stable modulo degree > precision.
std::vector<std::optional<Polynomial>> coordinateChangeFor(const FrameElement& element, std::uint64_t precision) {
  const auto& f = element.element;
  const auto& ring = f.ring();
  const std::size_t n = ring->size();
  const std::size_t p = element.pivot;
  if (p >= n) throw UnknownVariable("pivot out of range");
  auto lin = linearPart(f);
  if (lin[p] == 0) throw DomainError("frame element has no linear term at its pivot");
  if (f.constantTerm() != 0) throw DomainError("frame element is a unit");
  Polynomial xp = Polynomial::variable(ring, p);
  Polynomial base = xp;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != p && lin[i] != 0) base = base - Polynomial::variable(ring, i).scaled(lin[i]);
  }
  Polynomial linear = Polynomial::variable(ring, p).scaled(lin[p]) + (xp - base);
  Polynomial higher = f - linear;
  Rational inv = 1 / lin[p];
  std::vector<std::optional<Polynomial>> images(n);
  Polynomial P = base.scaled(inv);
  if (!higher.isZero()) {
    for (std::uint64_t it = 0; it <= precision; ++it) {
      images[p] = P;
      Polynomial next = (base - substitute(higher, images, precision)).scaled(inv);
      if (next == P) break;
      P = std::move(next);
    }
  }
  images[p] = P;
  if (P == xp) images[p] = std::nullopt;
  return images;
}

}  // namespace hybridres
