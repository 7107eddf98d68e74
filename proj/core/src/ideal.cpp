#include "hybridres/ideal.hpp"

#include <algorithm>

#include "hybridres/errors.hpp"

namespace hybridres {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.isZero()) continue;
    requireSameRing(ring_, g.ring());
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::ofVariables(RingPtr ring, const std::vector<std::size_t>& vars) {
  std::vector<Polynomial> gens;
  for (auto v : vars) gens.push_back(Polynomial::variable(ring, v));
  return Ideal(std::move(ring), std::move(gens));
}

bool Ideal::isMonomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.size() == 1; });
}

namespace {
void pushUnique(std::vector<Polynomial>& out, Polynomial p) {
  if (p.isZero()) return;
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
}
}  // namespace

Ideal idealSum(const Ideal& a, const Ideal& b) {
  requireSameRing(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : b.generators()) pushUnique(gens, g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal idealProduct(const Ideal& a, const Ideal& b) {
  requireSameRing(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) pushUnique(gens, f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal idealPower(const Ideal& a, long e) {
  if (e < 0) throw DomainError("negative ideal power");
  Ideal result = Ideal::unit(a.ring());
  for (long k = 0; k < e; ++k) result = idealProduct(result, a);
  return result;
}

Ideal substitute(const Ideal& I, const std::vector<std::optional<Polynomial>>& images,
                 std::optional<std::uint64_t> maxDegree) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(substitute(g, images, maxDegree));
  return Ideal(I.ring(), std::move(gens));
}

Ideal translate(const Ideal& I, const std::vector<Rational>& point) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(translate(g, point));
  return Ideal(I.ring(), std::move(gens));
}

std::string formatIdeal(const Ideal& I, const MonomialOrder& ord) {
  std::string s = "<";
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (i) s += ", ";
    s += formatCanonical(I.generators()[i], ord);
  }
  return s + ">";
}

}  // namespace hybridres
