#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hybridres/blowup.hpp"
#include "hybridres/hybrid.hpp"
#include "hybridres/invariants.hpp"

namespace hybridres::cli {

using Json = nlohmann::ordered_json;

std::vector<std::string> generatorTexts(const Ideal& I, const MonomialOrder& ord);
std::string joinIdeal(const Ideal& I, const MonomialOrder& ord);
std::string joinValues(const HSSequence& hs);
std::string varList(const Ring& ring, const std::vector<std::size_t>& vars, const char* sep = ",");

/// Small orders as JSON numbers, "inf" as a string.
Json orderJson(const OrderValue& v);

struct CoeffReport {
  std::string variable;
  unsigned marking = 0;
  OrderValue weightedOrder;
  std::string monomialPart;
  OrderValue residualOrder;
};

struct ChartReport {
  std::string chartVar;
  TransformKind kind = TransformKind::Strict;
  std::vector<std::string> generators;
  OrderValue order;
  /// nullopt when the transform is the unit ideal at the chart origin.
  std::optional<HSSequence> hs;
  unsigned controlledExponent = 0;
  std::size_t saturationSteps = 0;
  bool nonSingular = false;
  std::optional<CoeffReport> coeff;
};

/// Coefficient ideal along a hypersurface of maximal contact of `I` at the
/// origin, marked by ord(I); nullopt when ord(I) < 2.
std::optional<CoeffReport> coefficientReport(const Ideal& I, std::optional<std::size_t> exceptionalVar);

ChartReport chartReport(const TransformResult& t, const BlowupChart& chart, const MonomialOrder& ord, unsigned D,
                        bool withCoeff);

void renderChart(std::ostream& os, const ChartReport& r, const std::string& indent);
Json chartJson(const ChartReport& r);

std::string centerText(const Ring& ring, const std::vector<std::size_t>& vars);
std::string invariantText(const HybridInvariant& inv);
Json invariantJson(const std::vector<InvariantEntry>& entries);

}  // namespace hybridres::cli
