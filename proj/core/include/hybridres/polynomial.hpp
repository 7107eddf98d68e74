#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hybridres/monomial.hpp"
#include "hybridres/monomial_order.hpp"
#include "hybridres/order_value.hpp"
#include "hybridres/ring.hpp"

namespace hybridres {

using Rational = mpq_class;

struct Term {
  Rational coeff;
  Monomial mono;
};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted descending under the ring's canonical ordering
/// (negdegrevlex with identity permutation): lowest degree first. Multiplying
/// by a monomial preserves this order, which the reduction loops rely on.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Normalizes: merges duplicates, drops zeros, sorts.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  /// Constant term (0 if absent).
  Rational constantTerm() const;

  /// Minimal total degree of a term; infinite for zero.
  OrderValue order() const;
  /// Maximal total degree; -1 for zero.
  long degree() const;

  /// Leading term under `ord`. Precondition: nonzero.
  const Term& leadingTerm(const MonomialOrder& ord) const;
  /// deg(f) - deg(LM(f)) for the given ordering (Mora's ecart).
  std::uint64_t ecart(const MonomialOrder& ord) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial scaled(const Rational& c) const;
  Polynomial mulTerm(const Rational& c, const Monomial& m) const;
  /// this - c*m*g in one merge pass.
  Polynomial subMulTerm(const Rational& c, const Monomial& m, const Polynomial& g) const;
  /// Product truncated: terms of degree > maxDegree are dropped.
  Polynomial mulTruncated(const Polynomial& g, std::uint64_t maxDegree) const;
  Polynomial truncated(std::uint64_t maxDegree) const;
  Polynomial pow(unsigned e) const;
  /// Divides every coefficient by the leading coefficient under `ord`.
  Polynomial monic(const MonomialOrder& ord) const;

  /// Terms of total degree exactly d.
  Polynomial homogeneousPart(std::uint64_t d) const;

  /// Exact division of every term by `m`. Precondition: m divides each term.
  Polynomial divideByMonomial(const Monomial& m) const;
  /// Largest power of x_i dividing every term (0 for the zero polynomial).
  Monomial::Exponent valuation(std::size_t var) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Same terms, reinterpreted in `target`; `map[i]` gives the target index
  /// of variable i (or nullopt if that variable must not occur).
  Polynomial transfer(const RingPtr& target, const std::vector<std::optional<std::size_t>>& map) const;

  bool operator==(const Polynomial& g) const;
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

 private:
  void normalize();
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Canonical storage order used inside Polynomial (true when a precedes b).
bool canonicalGreater(const Monomial& a, const Monomial& b);

Polynomial derivative(const Polynomial& f, std::size_t var);
/// d^alpha f / d x^alpha.
Polynomial derivative(const Polynomial& f, const Monomial& alpha);

/// Ring-homomorphism image. `images[i]` replaces x_i; unmapped variables
/// (std::nullopt) stay fixed. With `maxDegree`, everything is computed
/// modulo terms of larger total degree.
Polynomial substitute(const Polynomial& f, const std::vector<std::optional<Polynomial>>& images,
                      std::optional<std::uint64_t> maxDegree = std::nullopt);
Polynomial substitute(const Polynomial& f, const std::map<std::size_t, Polynomial>& images,
                      std::optional<std::uint64_t> maxDegree = std::nullopt);

/// x_i -> x_i + point_i.
Polynomial translate(const Polynomial& f, const std::vector<Rational>& point);

OrderValue orderOfPoly(const Polynomial& f);

/// Deterministic text, terms descending under `ord`; reparses to f.
std::string formatCanonical(const Polynomial& f, const MonomialOrder& ord);
std::string formatMonomial(const Monomial& m, const Ring& ring);
std::string formatRational(const Rational& q);

}  // namespace hybridres
