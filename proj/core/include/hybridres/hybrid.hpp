#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hybridres/coeff_ideal.hpp"
#include "hybridres/ideal.hpp"
#include "hybridres/invariants.hpp"

namespace hybridres {

/// A generator of the standard basis together with the degree at which
/// the staging marked it and the flag width at that moment.
struct MarkedGenerator {
  Polynomial generator;
  unsigned order = 0;  // d_i
  unsigned width = 0;  // e_i
};

/// Output of the staged standard-basis construction.
struct HybridData {
  RingPtr ring;
  /// Local ordering used for the staging (flag variables largest).
  MonomialOrder ordering = MonomialOrder::localDefault(1);
  /// y_1..y_{e_k}: variable indices that, after `substitution`, define the
  /// hypersurfaces of maximal contact.
  std::vector<std::size_t> flagVars;
  std::vector<MarkedGenerator> marked;
  /// J_k: every marked generator raised to order d_k by flag monomials.
  Ideal Jk;
  /// images[i] is the image of x_i under the composed coordinate change;
  /// nullopt where x_i is untouched.
  std::vector<std::optional<Polynomial>> substitution;
  /// Truncation degree used for non-polynomial coordinate changes.
  std::optional<std::uint64_t> precision;
  Ideal original;

  unsigned dk() const { return marked.empty() ? 0 : marked.back().order; }
  unsigned ek() const { return marked.empty() ? 0 : marked.back().width; }
  bool substitutionIsIdentity() const;
};

/// Order-1 elements of Delta^(d-1)(I) with linearly independent linear parts,
/// in reduced echelon form; pivots are taken ordering-largest first, and
/// variables listed in `existingFlag` are treated as already chosen.
struct FrameElement {
  Polynomial element;
  std::size_t pivot = 0;
};
std::vector<FrameElement> maximalContactFrame(const Ideal& I, unsigned d, const MonomialOrder& ord,
                                              const std::vector<std::size_t>& existingFlag = {});
std::vector<FrameElement> maximalContactFrame(const Ideal& I, unsigned d);

/// Coordinate change that turns `element` (linear part with nonzero
/// coefficient at `pivot`) into the variable x_pivot. Exact if the element
/// is linear; otherwise modulo terms of degree > precision.
std::vector<std::optional<Polynomial>> coordinateChangeFor(const FrameElement& element,
                                                          std::uint64_t precision);

/// Staged construction of flag, markers (d_i, e_i) and J_k.
HybridData stagedBuild(const Ideal& I, const std::optional<MonomialOrder>& baseOrder = std::nullopt);

/// Modified coefficient ideal of J_k along V(y_1..y_{e_k}). With e_k = n the
/// empty sum with a null ambient ring is returned (zero-dimensional descent).
WeightedIdealSum modifiedCoeffIdeal(const HybridData& h);

struct InvariantEntry {
  OrderValue value;
  std::size_t dimension = 0;
  /// Exceptional-divisor counter; always 0 in the young situation.
  unsigned exceptionalCount = 0;
};

struct HybridInvariant {
  std::vector<InvariantEntry> entries;
  /// Variables of every hypersurface of maximal contact used by the descent
  /// (indices in the original ring).
  std::vector<std::size_t> descentVars;
  bool complete = true;
};

HybridInvariant hybridInvariant(const Ideal& I, unsigned maxDepth = 16,
                                const std::optional<MonomialOrder>& baseOrder = std::nullopt);

struct CenterSuggestion {
  std::vector<std::size_t> centerVars;
  std::vector<InvariantEntry> invariantPrefix;
  /// Already smooth (order <= 1 at the origin): no center needed.
  bool smooth = false;
  bool complete = true;
};

CenterSuggestion suggestCenter(const Ideal& I, unsigned maxDepth = 16,
                               const std::optional<MonomialOrder>& baseOrder = std::nullopt);

struct ChartLemmaReport {
  std::size_t chartVar = 0;
  /// nullopt when the strict transform is the unit ideal at the chart origin.
  std::optional<HSSequence> strictHS;
  bool hsDropped = false;
  OrderValue weakJkOrder;
  bool weakJkDropped = false;
  bool equivalent = false;
  /// Only when the HS did not drop: weak(J_k) equals the rebuilt J_k.
  std::optional<bool> weakEqualsRebuilt;
};

struct LemmaReport {
  HSSequence originalHS;
  unsigned dk = 0;
  std::vector<ChartLemmaReport> charts;
  bool allEquivalent() const;
};

/// Blows up at `center` (which must contain the staging flag) and checks,
/// chart by chart at the chart origin, HS drop <=> ord(weak J_k) < d_k.
LemmaReport lemmaEquivalenceCheck(const Ideal& I, const std::vector<std::size_t>& center,
                                  const std::optional<MonomialOrder>& baseOrder = std::nullopt);

}  // namespace hybridres
