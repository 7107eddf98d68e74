#pragma once

#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hybridres/ideal.hpp"
#include "hybridres/invariants.hpp"

namespace hybridres {

/// Formal sum of powers I_j^{e_j}, never expanded unless asked for.
struct WeightedComponent {
  Ideal ideal;
  mpz_class exponent;
  long level = 0;
};

struct WeightedIdealSum {
  /// Ring of the non-flag variables; null for a zero-dimensional descent.
  RingPtr ambient;
  std::vector<WeightedComponent> components;

  bool empty() const { return components.empty(); }
};

struct MonomialSplit {
  Monomial monomialPart;
  Ideal nonMonomialPart;
};

/// f = sum_k result[k] * z^k, coefficients free of z.
std::map<unsigned, Polynomial> coefficientsInVariable(const Polynomial& f, std::size_t var);

/// f = sum_beta result[beta] * flag^beta. Keys are exponent vectors along
/// `flag` (in flag order).
std::map<std::vector<Monomial::Exponent>, Polynomial> coefficientsInFlag(const Polynomial& f,
                                                                       const std::vector<std::size_t>& flag);

/// b!/(b-k) as an exact integer.
mpz_class coefficientExponent(unsigned b, unsigned k);

/// Villamayor coefficient ideal of I along V(z) for marking b: components
/// (I_k, b!/(b-k), k), k < b, where I_k collects the z^k coefficients of the
/// generators; empty levels omitted. Components live in the ring without z.
WeightedIdealSum coeffIdealVillamayor(const Ideal& I, std::size_t var, unsigned b);

/// min_j e_j * ord_p(I_j); infinity for the empty sum.
OrderValue weightedOrder(const WeightedIdealSum& w, const std::optional<Point>& p = std::nullopt);

/// Sum of powers as an honest ideal. Throws DomainError when
/// sum_j e_j * |gens(I_j)| exceeds `budget`.
Ideal expandWeighted(const WeightedIdealSum& w, long budget);

/// Splits off the largest monomial in `exceptional` dividing every
/// generator. Throws DomainError on the zero ideal.
MonomialSplit monomialSplit(const Ideal& I, const std::vector<std::size_t>& exceptional);

}  // namespace hybridres
