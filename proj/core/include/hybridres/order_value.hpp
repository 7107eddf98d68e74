#pragma once

#include <compare>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace hybridres {

/// A non-negative integer or +infinity. Orders of zero polynomials and of
/// empty coefficient ideals are infinite; weighted orders can exceed 64 bits.
class OrderValue {
 public:
  OrderValue() = default;
  OrderValue(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit OrderValue(mpz_class value) : value_(std::move(value)) {}

  static OrderValue infinity() {
    OrderValue v;
    v.infinite_ = true;
    return v;
  }

  bool isInfinite() const { return infinite_; }
  bool isFinite() const { return !infinite_; }
  /// Throws DomainError when infinite.
  const mpz_class& value() const;
  long toLong() const;

  OrderValue operator+(const OrderValue& other) const;
  OrderValue operator*(const mpz_class& factor) const;

  std::strong_ordering operator<=>(const OrderValue& other) const;
  bool operator==(const OrderValue& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }

  /// Decimal digits or "inf".
  std::string toString() const;

 private:
  mpz_class value_ = 0;
  bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const OrderValue& v) {
  return os << v.toString();
}

}  // namespace hybridres
