#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace hybridres {

/// Exponent vector with cached total degree.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool isOne() const { return degree_ == 0; }

  void set(std::size_t i, Exponent e);

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Precondition: divides(other) from the right, i.e. other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

  std::size_t hash() const;

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of total degree exactly `degree` in `nvars` variables,
/// in lexicographically decreasing exponent order.
std::vector<Monomial> monomialsOfDegree(std::size_t nvars, std::uint64_t degree);

/// Drops monomials divisible by another one in the list (and duplicates).
std::vector<Monomial> minimalizeMonomials(std::vector<Monomial> gens);

}  // namespace hybridres
