#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "hybridres/ideal.hpp"
#include "hybridres/monomial_order.hpp"

namespace properties {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string firstFailure;

  bool ok() const { return failures == 0; }
  void fail(std::string what) {
    if (failures++ == 0) firstFailure = std::move(what);
  }
};

struct RandomIdealSpec {
  std::size_t maxVars = 3;
  unsigned maxDegree = 5;
  std::size_t maxGenerators = 3;
  std::size_t maxTerms = 3;
  int maxCoeff = 3;
};

hybridres::RingPtr randomRing(std::mt19937_64& rng, std::size_t maxVars);
hybridres::Polynomial randomPolynomial(std::mt19937_64& rng, const hybridres::RingPtr& ring,
                                       unsigned maxDegree, std::size_t maxTerms, int maxCoeff,
                                       unsigned minDegree = 0);
hybridres::Ideal randomIdeal(std::mt19937_64& rng, const hybridres::RingPtr& ring, const RandomIdealSpec& spec,
                             unsigned minDegree = 0);

/// Standard bases (local, degrevlex and lex) pass the S-pair criterion
/// checked by the naive reducer.
Outcome standardBasisCriterion(std::size_t count, std::uint64_t seed);
/// Closed-form HS counts agree with staircase enumeration.
Outcome hsVersusStaircase(std::size_t count, std::uint64_t seed);
/// ord(fg) = ord(f) + ord(g).
Outcome valuationLaw(std::size_t count, std::uint64_t seed);
/// total in weak in strict, and E^b * weak = total.
Outcome transformChain(std::size_t count, std::uint64_t seed);
/// Staging data is unchanged by substitutions x_i -> x_i + (quadratic).
Outcome stagingInvariance(std::size_t count, std::uint64_t seed);
/// Element-wise transform of a standard basis matches the saturation on
/// every chart of both worked examples.
Outcome strictViaStandardBasis();

}  // namespace properties
