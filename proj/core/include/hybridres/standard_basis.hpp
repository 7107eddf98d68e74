#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "hybridres/ideal.hpp"
#include "hybridres/monomial_order.hpp"
#include "hybridres/polynomial.hpp"

namespace hybridres {

namespace detail {
struct BasisEngine;
}

/// Result of a (possibly truncated) standard basis computation.
///
/// Work proceeds degree by degree (normal strategy). A basis truncated at
/// degree D has processed every S-pair and input generator whose degree is
/// at most D; `resume` continues the same computation to a higher degree
/// and produces exactly what a fresh computation at that degree would.
class StandardBasis {
 public:
  const std::vector<Polynomial>& basis() const { return basis_; }
  const MonomialOrder& ordering() const;
  const RingPtr& ring() const;
  bool reduced() const { return reduced_; }
  std::optional<unsigned> truncationDegree() const { return truncation_; }
  bool isTruncated() const { return truncation_.has_value(); }
  /// True when the ideal contains a unit (basis is {1}).
  bool isUnit() const;
  /// Input generators not yet consumed by the degree-by-degree engine.
  std::size_t pendingInputs() const;

  /// Continue to `degree` (nullopt: to completion).
  StandardBasis resume(std::optional<unsigned> degree) const;

  Ideal toIdeal() const;

 private:
  friend StandardBasis standardBasis(const Ideal&, const MonomialOrder&, bool,
                                     std::optional<unsigned>);
  friend StandardBasis makeBasis(std::shared_ptr<const detail::BasisEngine>, bool,
                                 std::optional<unsigned>);

  std::shared_ptr<const detail::BasisEngine> engine_;
  std::vector<Polynomial> basis_;
  bool reduced_ = false;
  std::optional<unsigned> truncation_;
};

/// lcm/LT(f) * f - lcm/LT(g) * g. Throws DomainError on a zero argument.
Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

/// Global orderings: fully reduced remainder. Local orderings: Mora's weak
/// normal form (u*f = sum a_i g_i + r, u a unit, LM(r) not divisible by any
/// LM(g_i)). Deterministic in the order of `G`.
Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& ord);

/// Buchberger (global) or Mora (local) standard basis.
StandardBasis standardBasis(const Ideal& I, const MonomialOrder& ord, bool reduced = true,
                            std::optional<unsigned> truncationDegree = std::nullopt);

/// Monomial ideal of leading monomials, minimalized. Refuses truncated bases.
Ideal leadingIdeal(const StandardBasis& sb);
std::vector<Monomial> leadingMonomials(const StandardBasis& sb);

/// Local orderings decide membership in the localization at the origin.
bool idealMembership(const Polynomial& f, const Ideal& I, const MonomialOrder& ord);
bool idealMembership(const Polynomial& f, const StandardBasis& sb);
/// Every generator of `sub` lies in `sup`.
bool idealContains(const Ideal& sup, const Ideal& sub, const MonomialOrder& ord);
bool idealEquals(const Ideal& I, const Ideal& J, const MonomialOrder& ord);

/// (I : x_var). Computed in the polynomial ring (which localizes correctly),
/// presented by a reduced Groebner basis.
Ideal quotientByVariable(const Ideal& I, std::size_t var, const MonomialOrder& ord);
/// (I : x_var^power).
Ideal quotientByVariablePower(const Ideal& I, std::size_t var, unsigned power, const MonomialOrder& ord);

struct Saturation {
  Ideal ideal;
  std::size_t steps = 0;
};

/// (I : x_var^infinity) by iterated quotients, stabilization certified by
/// idealEquals under `ord`. Throws InternalError past `maxIterations`.
Saturation saturateByVariable(const Ideal& I, std::size_t var, const MonomialOrder& ord,
                              std::size_t maxIterations = 1000);

}  // namespace hybridres
