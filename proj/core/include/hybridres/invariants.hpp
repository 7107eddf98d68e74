#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "hybridres/ideal.hpp"
#include "hybridres/order_value.hpp"

namespace hybridres {

/// Hilbert-Samuel values for degrees 0..D. By default each entry is the
/// number of standard monomials of exactly that degree (graded slices).
struct HSSequence {
  std::vector<std::uint64_t> values;

  std::size_t maxDegree() const { return values.empty() ? 0 : values.size() - 1; }
  /// Prefix sums (the cumulative Hilbert-Samuel function).
  HSSequence cumulative() const;
  bool operator==(const HSSequence&) const = default;
};

using Point = std::vector<Rational>;

/// ord_p(I): max m with I in m_p^m. Zero ideal: infinity; unit at p: 0.
OrderValue orderOfIdeal(const Ideal& I, const std::optional<Point>& p = std::nullopt);

/// Generators together with all their first partials, presented by a
/// reduced degrevlex Groebner basis.
Ideal deltaIdeal(const Ideal& I);
/// Delta^(c-1)(I); c = 1 returns I. Throws DomainError on c = 0.
Ideal deltaIterate(const Ideal& I, unsigned c);
/// Raw generators of Delta^(c-1)(I): all partials of order <= c-1 of the
/// generators of I (no Groebner presentation, duplicates removed).
std::vector<Polynomial> deltaGenerators(const Ideal& I, unsigned c);

/// Graded slice counts of the standard monomials of the local standard
/// basis of I translated to p. Throws DomainError if I is the unit ideal
/// at p (p not on V(I)).
HSSequence hsSequence(const Ideal& I, unsigned maxDegree, const std::optional<Point>& p = std::nullopt,
                      bool cumulative = false);

/// Same counts straight from a monomial ideal (Hilbert series numerator
/// over (1-t)^n, expanded to `maxDegree`).
HSSequence hsOfMonomialIdeal(const std::vector<Monomial>& gens, std::size_t nvars, unsigned maxDegree);

/// Numerator K(t) of the Hilbert series K(t)/(1-t)^n of S/<gens>.
std::vector<long long> hilbertNumerator(const std::vector<Monomial>& gens, std::size_t nvars);

/// Lexicographic. Throws DomainError on length mismatch.
std::strong_ordering hsCompare(const HSSequence& a, const HSSequence& b);

/// Defining ideal of the locus of order >= c (that is Delta^(c-1)(I)).
Ideal orderLocusIdeal(const Ideal& I, unsigned c);
/// True when the locus of order >= c is empty (1 in the locus ideal).
bool orderLocusEmpty(const Ideal& I, unsigned c);

}  // namespace hybridres
