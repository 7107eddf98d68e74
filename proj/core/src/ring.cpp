#include "hybridres/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hybridres/errors.hpp"

namespace hybridres {

bool Ring::isIdentifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw DomainError("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!isIdentifier(n)) throw DomainError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Ring::indexOf(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownVariable("unknown variable '" + std::string(name) + "'");
}

RingPtr makeRing(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

bool sameRing(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void requireSameRing(const RingPtr& a, const RingPtr& b) {
  if (!sameRing(a, b)) throw ContextMismatch("operands live in different rings");
}

RingPtr restrictRing(const Ring& ring, const std::vector<std::size_t>& drop) {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) kept.push_back(ring.name(i));
  }
  if (kept.empty()) return nullptr;
  return makeRing(std::move(kept));
}

std::string freshName(const Ring& ring, std::string_view stem) {
  std::string name(stem);
  while (ring.find(name)) name += "_";
  return name;
}

}  // namespace hybridres
