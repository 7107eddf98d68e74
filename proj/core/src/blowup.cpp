#include "hybridres/blowup.hpp"

#include <algorithm>

#include "hybridres/errors.hpp"
#include "hybridres/standard_basis.hpp"

namespace hybridres {

Center::Center(const Ring& ring, std::vector<std::size_t> variables) : vars_(std::move(variables)) {
  std::sort(vars_.begin(), vars_.end());
  if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end()) {
    throw DomainError("center lists a variable twice");
  }
  for (auto v : vars_) {
    if (v >= ring.size()) throw UnknownVariable("center variable out of range");
  }
  if (vars_.size() < 2 && vars_.size() != ring.size()) {
    throw DomainError("center must have codimension at least 2");
  }
}

Center Center::origin(const Ring& ring) {
  std::vector<std::size_t> all(ring.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Center(ring, std::move(all));
}

std::string transformKindName(TransformKind kind) {
  switch (kind) {
    case TransformKind::Total:
      return "total";
    case TransformKind::Weak:
      return "weak";
    case TransformKind::Strict:
      return "strict";
  }
  return "unknown";
}

BlowupChart chartFor(const RingPtr& ring, const Center& center, std::size_t chartVar) {
  const auto& vars = center.variables();
  if (std::find(vars.begin(), vars.end(), chartVar) == vars.end()) {
    throw DomainError("chart variable is not in the center");
  }
  BlowupChart chart;
  chart.ring = ring;
  chart.chartVar = chartVar;
  chart.substitution.assign(ring->size(), std::nullopt);
  const Polynomial c = Polynomial::variable(ring, chartVar);
  for (auto u : vars) {
    if (u != chartVar) chart.substitution[u] = c * Polynomial::variable(ring, u);
  }
  return chart;
}

std::vector<BlowupChart> blowupCharts(const RingPtr& ring, const Center& center) {
  std::vector<BlowupChart> out;
  for (auto v : center.variables()) out.push_back(chartFor(ring, center, v));
  return out;
}

namespace {

void requireChartRing(const Ideal& I, const BlowupChart& chart) { requireSameRing(I.ring(), chart.ring); }

Polynomial stripChartVar(const Polynomial& f, std::size_t var) {
  if (f.isZero()) return f;
  return f.divideByMonomial(Monomial::variable(f.ring()->size(), var, f.valuation(var)));
}

}  // namespace

TransformResult totalTransform(const Ideal& I, const BlowupChart& chart) {
  requireChartRing(I, chart);
  return {substitute(I, chart.substitution), TransformKind::Total, 0, 0};
}

TransformResult weakTransform(const Ideal& I, const BlowupChart& chart) {
  auto total = totalTransform(I, chart).ideal;
  TransformResult r{total, TransformKind::Weak, 0, 0};
  if (total.isZero()) return r;
  auto b = total.generators().front().valuation(chart.chartVar);
  for (const auto& g : total.generators()) b = std::min(b, g.valuation(chart.chartVar));
  std::vector<Polynomial> gens;
  Monomial e = Monomial::variable(chart.ring->size(), chart.chartVar, b);
  for (const auto& g : total.generators()) gens.push_back(g.divideByMonomial(e));
  r.ideal = Ideal(chart.ring, std::move(gens));
  r.controlledExponent = b;
  return r;
}

TransformResult strictTransform(const Ideal& I, const BlowupChart& chart) {
  auto total = totalTransform(I, chart).ideal;
  std::vector<Polynomial> gens;
  for (const auto& g : total.generators()) gens.push_back(stripChartVar(g, chart.chartVar));
  Ideal divided(chart.ring, std::move(gens));
  auto grevlex = MonomialOrder::degrevlex(chart.ring->size());
  auto sat = saturateByVariable(divided, chart.chartVar, grevlex);
  // Prefer the divided generators when they already present the saturation.
  if (idealContains(divided, sat.ideal, grevlex)) return {divided, TransformKind::Strict, 0, sat.steps};
  return {sat.ideal, TransformKind::Strict, 0, sat.steps};
}

TransformResult strictTransformViaSB(const Ideal& I, const BlowupChart& chart, const MonomialOrder& ord) {
  requireChartRing(I, chart);
  auto sb = standardBasis(I, ord);
  std::vector<Polynomial> gens;
  for (const auto& g : sb.basis()) {
    gens.push_back(stripChartVar(substitute(g, chart.substitution), chart.chartVar));
  }
  return {Ideal(chart.ring, std::move(gens)), TransformKind::Strict, 0, 0};
}

}  // namespace hybridres
