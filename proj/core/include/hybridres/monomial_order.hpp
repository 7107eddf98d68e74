#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hybridres/monomial.hpp"
#include "hybridres/ring.hpp"

namespace hybridres {

enum class OrderKind {
  GlobalDegRevLex,   // x > 1
  LocalNegDegRevLex, // 1 > x (Singular's "ds")
  Lex,
};

/// Monomial ordering over a permutation of the ring variables. The
/// permutation lists variable indices from largest to smallest.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation);

  static MonomialOrder localDefault(std::size_t nvars);
  static MonomialOrder degrevlex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& permutation() const { return perm_; }
  std::size_t size() const { return perm_.size(); }
  bool isLocal() const { return kind_ == OrderKind::LocalNegDegRevLex; }
  /// Well-orderings: plain division terminates.
  bool isGlobal() const { return !isLocal(); }

  /// Throws ContextMismatch if either monomial has the wrong length.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  /// Same kind, with `first` moved to the front (in the given order) and
  /// the remaining variables keeping their relative position.
  MonomialOrder withLeading(const std::vector<std::size_t>& first) const;

  /// e.g. "negdegrevlex(x>y>z)".
  std::string describe(const Ring& ring) const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  OrderKind kind_;
  std::vector<std::size_t> perm_;
};

std::string orderKindName(OrderKind kind);

}  // namespace hybridres
