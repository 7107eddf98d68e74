#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hybridres {

/// Named coordinates x_1..x_n of an affine chart.
class Ring {
 public:
  /// Throws DomainError on empty, duplicate or malformed names.
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t indexOf(std::string_view name) const;

  bool operator==(const Ring& other) const { return names_ == other.names_; }

  static bool isIdentifier(std::string_view s);

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr makeRing(std::vector<std::string> names);

/// Same pointer or same variable list.
bool sameRing(const RingPtr& a, const RingPtr& b);
void requireSameRing(const RingPtr& a, const RingPtr& b);

/// The ring with `drop` removed, variable order otherwise preserved.
RingPtr restrictRing(const Ring& ring, const std::vector<std::size_t>& drop);

/// A fresh name not clashing with any variable of `ring`.
std::string freshName(const Ring& ring, std::string_view stem);

}  // namespace hybridres
