#pragma once

#include <string>
#include <vector>

#include "hybridres/polynomial.hpp"

namespace hybridres {

/// Finitely generated ideal; zero generators are dropped on construction.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }
  /// Ideal generated by the listed variables.
  static Ideal ofVariables(RingPtr ring, const std::vector<std::size_t>& vars);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool isZero() const { return gens_.empty(); }

  /// Every generator is a monomial times a constant.
  bool isMonomial() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

Ideal idealSum(const Ideal& a, const Ideal& b);
/// Pairwise products of generators (exact duplicates removed).
Ideal idealProduct(const Ideal& a, const Ideal& b);
/// Iterated product; power 0 is the unit ideal. Throws DomainError on e < 0.
Ideal idealPower(const Ideal& a, long e);

/// Image of each generator under a substitution.
Ideal substitute(const Ideal& I, const std::vector<std::optional<Polynomial>>& images,
                 std::optional<std::uint64_t> maxDegree = std::nullopt);
Ideal translate(const Ideal& I, const std::vector<Rational>& point);

/// "<g1, g2, ...>" with each generator in canonical text.
std::string formatIdeal(const Ideal& I, const MonomialOrder& ord);

}  // namespace hybridres
