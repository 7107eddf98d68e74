#include "report.hpp"

#include <ostream>
#include <sstream>

#include "hybridres/coeff_ideal.hpp"
#include "hybridres/errors.hpp"
#include "hybridres/standard_basis.hpp"

namespace hybridres::cli {

std::vector<std::string> generatorTexts(const Ideal& I, const MonomialOrder& ord) {
  std::vector<std::string> out;
  for (const auto& g : I.generators()) out.push_back(formatCanonical(g, ord));
  return out;
}

std::string joinIdeal(const Ideal& I, const MonomialOrder& ord) {
  std::string s = "<";
  auto texts = generatorTexts(I, ord);
  for (std::size_t i = 0; i < texts.size(); ++i) s += (i ? ", " : "") + texts[i];
  return s + ">";
}

std::string joinValues(const HSSequence& hs) {
  std::string s;
  for (std::size_t i = 0; i < hs.values.size(); ++i) s += (i ? " " : "") + std::to_string(hs.values[i]);
  return s;
}

std::string varList(const Ring& ring, const std::vector<std::size_t>& vars, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? sep : "") + ring.name(vars[i]);
  return s;
}

Json orderJson(const OrderValue& v) {
  if (v.isInfinite()) return "inf";
  if (v.value().fits_slong_p()) return v.value().get_si();
  return v.toString();
}

std::optional<CoeffReport> coefficientReport(const Ideal& I, std::optional<std::size_t> exceptionalVar) {
  auto o = orderOfIdeal(I);
  if (o.isInfinite() || o < OrderValue(2L)) return std::nullopt;
  auto b = static_cast<unsigned>(o.toLong());
  const auto& ring = I.ring();
  auto frame = maximalContactFrame(I, b, MonomialOrder::localDefault(ring->size()));
  if (frame.empty()) return std::nullopt;
  long maxDeg = 0;
  for (const auto& g : I.generators()) maxDeg = std::max(maxDeg, g.degree());
  auto precision = 2 * static_cast<std::uint64_t>(maxDeg);
  auto sigma = coordinateChangeFor(frame.front(), precision);
  bool nonlinear = std::any_of(sigma.begin(), sigma.end(), [](const auto& im) { return im && im->degree() > 1; });
  Ideal moved = substitute(I, sigma, nonlinear ? std::optional(precision) : std::nullopt);
  std::size_t z = frame.front().pivot;
  auto w = coeffIdealVillamayor(moved, z, b);
  CoeffReport r;
  r.variable = ring->name(z);
  r.marking = b;
  r.weightedOrder = weightedOrder(w);
  if (w.empty()) return r;
  Ideal rep = w.components.front().ideal;
  try {
    rep = expandWeighted(w, 64);
  } catch (const DomainError&) {
    // keep the lowest level
  }
  std::vector<std::size_t> exc;
  if (exceptionalVar && *exceptionalVar != z) exc.push_back(w.ambient->indexOf(ring->name(*exceptionalVar)));
  auto split = monomialSplit(rep, exc);
  r.monomialPart = formatMonomial(split.monomialPart, *w.ambient);
  r.residualOrder = orderOfIdeal(split.nonMonomialPart);
  return r;
}

ChartReport chartReport(const TransformResult& t, const BlowupChart& chart, const MonomialOrder& ord, unsigned D,
                        bool withCoeff) {
  ChartReport r;
  r.chartVar = chart.ring->name(chart.chartVar);
  r.kind = t.kind;
  r.generators = generatorTexts(t.ideal, ord);
  r.order = orderOfIdeal(t.ideal);
  if (r.order != OrderValue(0L)) r.hs = hsSequence(t.ideal, D);
  r.controlledExponent = t.controlledExponent;
  r.saturationSteps = t.saturationSteps;
  r.nonSingular = !t.ideal.isZero() && orderLocusEmpty(t.ideal, 2);
  if (withCoeff) r.coeff = coefficientReport(t.ideal, chart.chartVar);
  return r;
}

void renderChart(std::ostream& os, const ChartReport& r, const std::string& indent) {
  os << indent << transformKindName(r.kind) << " transform:\n";
  for (const auto& g : r.generators) os << indent << "  " << g << "\n";
  if (r.kind == TransformKind::Weak) os << indent << "  b: " << r.controlledExponent << "\n";
  os << indent << "  order at chart origin: " << r.order << "\n";
  if (r.hs) {
    os << indent << "  HS at chart origin: " << joinValues(*r.hs) << "\n";
  } else {
    os << indent << "  HS at chart origin: unit ideal there\n";
  }
  if (r.nonSingular) os << indent << "  already non-singular (order >= 2 locus is empty)\n";
  if (r.coeff) {
    os << indent << "  coefficient ideal along V(" << r.coeff->variable << "), b = " << r.coeff->marking
       << ": order " << r.coeff->weightedOrder << ", monomial part " << r.coeff->monomialPart
       << ", non-monomial order " << r.coeff->residualOrder << "\n";
  }
}

Json chartJson(const ChartReport& r) {
  Json j;
  j["chart"] = r.chartVar;
  j["transform"] = transformKindName(r.kind);
  j["generators"] = r.generators;
  j["order"] = orderJson(r.order);
  j["hs"] = r.hs ? Json(r.hs->values) : Json(nullptr);
  if (r.kind == TransformKind::Weak) j["b"] = r.controlledExponent;
  if (r.kind == TransformKind::Strict) j["saturation_steps"] = r.saturationSteps;
  j["non_singular"] = r.nonSingular;
  if (r.coeff) {
    j["coefficient_ideal"] = {{"variable", r.coeff->variable},
                              {"b", r.coeff->marking},
                              {"weighted_order", r.coeff->weightedOrder.toString()},
                              {"monomial_part", r.coeff->monomialPart},
                              {"non_monomial_order", orderJson(r.coeff->residualOrder)}};
  }
  return j;
}

std::string centerText(const Ring& ring, const std::vector<std::size_t>& vars) {
  return "V(" + varList(ring, vars) + ")";
}

std::string invariantText(const HybridInvariant& inv) {
  std::string s;
  for (std::size_t i = 0; i < inv.entries.size(); ++i) {
    s += (i ? " " : "") + std::string("(") + inv.entries[i].value.toString() + "," +
         std::to_string(inv.entries[i].dimension) + ")";
  }
  if (!inv.complete) s += " ...";
  return s;
}

Json invariantJson(const std::vector<InvariantEntry>& entries) {
  Json a = Json::array();
  for (const auto& e : entries) a.push_back({{"value", e.value.toString()}, {"dimension", e.dimension}});
  return a;
}

}  // namespace hybridres::cli
