#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hybridres/ideal.hpp"

namespace hybridres {

/// Coordinate-subspace center V(x_i : i in variables).
class Center {
 public:
  /// Requires at least two variables, or the full variable set (point
  /// blowup). Throws DomainError otherwise.
  Center(const Ring& ring, std::vector<std::size_t> variables);
  static Center origin(const Ring& ring);

  const std::vector<std::size_t>& variables() const { return vars_; }

 private:
  std::vector<std::size_t> vars_;
};

struct BlowupChart {
  RingPtr ring;
  std::size_t chartVar = 0;
  /// images[i] is the image of x_i (nullopt: x_i fixed).
  std::vector<std::optional<Polynomial>> substitution;

  Ideal exceptional() const { return Ideal::ofVariables(ring, {chartVar}); }
};

enum class TransformKind { Total, Weak, Strict };

struct TransformResult {
  Ideal ideal;
  TransformKind kind = TransformKind::Total;
  /// Weak transforms only.
  unsigned controlledExponent = 0;
  /// Strict transforms only.
  std::size_t saturationSteps = 0;
};

std::string transformKindName(TransformKind kind);

/// One chart per center variable, in ring variable order: the chart
/// variable c stays, every other center variable u maps to c*u.
std::vector<BlowupChart> blowupCharts(const RingPtr& ring, const Center& center);
BlowupChart chartFor(const RingPtr& ring, const Center& center, std::size_t chartVar);

TransformResult totalTransform(const Ideal& I, const BlowupChart& chart);
/// (T : E^b) for the largest b with E^b * (T : E^b) = T.
TransformResult weakTransform(const Ideal& I, const BlowupChart& chart);
/// (T : E^infinity). Presented by the generators of T with their E-powers
/// removed when these suffice, otherwise by a reduced degrevlex basis.
TransformResult strictTransform(const Ideal& I, const BlowupChart& chart);
/// Transforms a reduced standard basis of I under `ord` element-wise,
/// dividing each by its largest chart-variable power.
TransformResult strictTransformViaSB(const Ideal& I, const BlowupChart& chart, const MonomialOrder& ord);

}  // namespace hybridres
