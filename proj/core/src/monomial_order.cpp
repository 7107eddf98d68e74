#include "hybridres/monomial_order.hpp"

#include <algorithm>
#include <numeric>

#include "hybridres/errors.hpp"

namespace hybridres {

namespace {
std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}
}  // namespace

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation)
    : kind_(kind), perm_(std::move(permutation)) {
  std::vector<bool> seen(perm_.size(), false);
  for (auto i : perm_) {
    if (i >= perm_.size() || seen[i]) throw DomainError("ordering permutation is not a bijection");
    seen[i] = true;
  }
}

MonomialOrder MonomialOrder::localDefault(std::size_t nvars) {
  return {OrderKind::LocalNegDegRevLex, identity(nvars)};
}
MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
  return {OrderKind::GlobalDegRevLex, identity(nvars)};
}
MonomialOrder MonomialOrder::lex(std::size_t nvars) { return {OrderKind::Lex, identity(nvars)}; }

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != perm_.size() || b.size() != perm_.size()) {
    throw ContextMismatch("monomial length does not match the ordering");
  }
  if (kind_ == OrderKind::Lex) {
    for (auto i : perm_) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) {
    return kind_ == OrderKind::GlobalDegRevLex ? a.degree() <=> b.degree() : b.degree() <=> a.degree();
  }
  // Reverse lexicographic tie-break: the smaller exponent in the last
  // differing variable wins.
  for (auto it = perm_.rbegin(); it != perm_.rend(); ++it) {
    if (a[*it] != b[*it]) return b[*it] <=> a[*it];
  }
  return std::strong_ordering::equal;
}

MonomialOrder MonomialOrder::withLeading(const std::vector<std::size_t>& first) const {
  std::vector<std::size_t> p(first);
  for (auto i : perm_) {
    if (std::find(first.begin(), first.end(), i) == first.end()) p.push_back(i);
  }
  return {kind_, std::move(p)};
}

std::string orderKindName(OrderKind kind) {
  switch (kind) {
    case OrderKind::GlobalDegRevLex:
      return "degrevlex";
    case OrderKind::LocalNegDegRevLex:
      return "negdegrevlex";
    case OrderKind::Lex:
      return "lex";
  }
  return "?";
}

std::string MonomialOrder::describe(const Ring& ring) const {
  std::string s = orderKindName(kind_) + "(";
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    if (k) s += ">";
    s += ring.name(perm_[k]);
  }
  return s + ")";
}

}  // namespace hybridres
