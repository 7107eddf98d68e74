#include "hybridres/order_value.hpp"

#include "hybridres/errors.hpp"

namespace hybridres {

const mpz_class& OrderValue::value() const {
  if (infinite_) throw DomainError("order is infinite");
  return value_;
}

long OrderValue::toLong() const {
  const auto& v = value();
  if (!v.fits_slong_p()) throw DomainError("order does not fit a machine integer");
  return v.get_si();
}

OrderValue OrderValue::operator+(const OrderValue& other) const {
  if (infinite_ || other.infinite_) return infinity();
  return OrderValue(mpz_class(value_ + other.value_));
}

OrderValue OrderValue::operator*(const mpz_class& factor) const {
  if (infinite_) return infinity();
  return OrderValue(mpz_class(value_ * factor));
}

std::strong_ordering OrderValue::operator<=>(const OrderValue& other) const {
  if (infinite_ || other.infinite_) return static_cast<int>(infinite_) <=> static_cast<int>(other.infinite_);
  int c = cmp(value_, other.value_);
  return c <=> 0;
}

std::string OrderValue::toString() const { return infinite_ ? "inf" : value_.get_str(); }

}  // namespace hybridres
