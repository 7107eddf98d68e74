#include <sstream>
#include <stdexcept>

#include "hybridres/cli.hpp"
#include "hybridres/standard_basis.hpp"
#include "report.hpp"

namespace hybridres::cli {

namespace {

constexpr const char* kEx61 =
    "# five-variable example\n"
    "ring: x, y, z, w, v\n"
    "order: negdegrevlex x,y,z,w,v\n"
    "gen: z^2 + x^3*y^3\n"
    "gen: w^5 + x^5 + v^3*y^2\n";

constexpr const char* kEx62 =
    "# three-variable example\n"
    "ring: x, y, z\n"
    "order: negdegrevlex z,y,x\n"
    "gen: x^5 + y^11\n"
    "gen: z^9 + x^9\n";

constexpr unsigned kDemoDepth = 3;

std::string yesNo(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string demoFixture(const std::string& name) {
  if (name == "ex61") return kEx61;
  if (name == "ex62") return kEx62;
  throw std::invalid_argument("unknown demo '" + name + "'");
}

std::string demoScenario(const std::string& name, bool json) {
  IdealFile f = parseIdealFile(demoFixture(name));
  const auto& ring = f.ring;
  const auto& ord = f.order;
  const auto& I = f.ideal;
  std::ostringstream os;
  Json j;
  j["ring"] = ring->names();
  j["order"] = ord.describe(*ring);
  j["generators"] = generatorTexts(I, ord);

  auto o = orderOfIdeal(I);
  auto delta = deltaIdeal(I);
  auto hs = hsSequence(I, kDemoDepth);
  os << "demo " << name << "\n";
  os << "ring: " << varList(*ring, [&] {
    std::vector<std::size_t> all(ring->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }(), ", ") << "\n";
  os << "ordering: " << ord.describe(*ring) << "\n";
  os << "I = " << joinIdeal(I, ord) << "\n";
  os << "order at origin: " << o << "\n";
  os << "Delta(I) = " << joinIdeal(delta, ord) << "\n";
  os << "HS at origin: " << joinValues(hs) << "\n";
  j["ideal_order"] = orderJson(o);
  j["delta"] = generatorTexts(delta, ord);
  j["hs"] = hs.values;

  auto h = stagedBuild(I, ord);
  auto coeffNew = weightedOrder(modifiedCoeffIdeal(h));
  auto suggestion = suggestCenter(I, 16, ord);
  std::vector<unsigned> d;
  std::vector<unsigned> e;
  for (const auto& m : h.marked) {
    if (d.empty() || d.back() != m.order) {
      d.push_back(m.order);
      e.push_back(m.width);
    }
  }
  os << "\nstaging\n";
  os << "  d:";
  for (auto x : d) os << " " << x;
  os << "\n  e:";
  for (auto x : e) os << " " << x;
  os << "\n  flag: " << varList(*ring, h.flagVars, " ") << "\n";
  os << "  J = " << joinIdeal(h.Jk, ord) << "\n";
  os << "  ord J: " << orderOfIdeal(h.Jk) << "\n";
  os << "  Coeff^new weighted order: " << coeffNew << "\n";
  os << "  invariant: ";
  {
    HybridInvariant inv;
    inv.entries = suggestion.invariantPrefix;
    inv.complete = suggestion.complete;
    os << invariantText(inv) << "\n";
  }
  os << "  center: " << centerText(*ring, suggestion.centerVars) << "\n";
  j["hybrid"] = {{"d", d},
                 {"e", e},
                 {"flag", varList(*ring, h.flagVars)},
                 {"Jk", generatorTexts(h.Jk, ord)},
                 {"Jk_order", orderJson(orderOfIdeal(h.Jk))},
                 {"coeff_new_weighted_order", coeffNew.toString()},
                 {"invariant", invariantJson(suggestion.invariantPrefix)},
                 {"center", varList(*ring, suggestion.centerVars)}};

  auto lemma = lemmaEquivalenceCheck(I, suggestion.centerVars, ord);
  Center center(*ring, suggestion.centerVars);
  Json charts = Json::array();
  auto charts_ = blowupCharts(ring, center);
  for (std::size_t k = 0; k < charts_.size(); ++k) {
    const auto& chart = charts_[k];
    const auto& lr = lemma.charts[k];
    auto strict = chartReport(strictTransform(I, chart), chart, ord, kDemoDepth, false);
    auto weak = chartReport(weakTransform(I, chart), chart, ord, kDemoDepth, true);
    auto weakJ = weakTransform(h.Jk, chart).ideal;
    os << "\nchart " << (k + 1) << ": E = V(" << ring->name(chart.chartVar) << ")\n";
    renderChart(os, strict, "  ");
    renderChart(os, weak, "  ");
    os << "  weak transform of J: " << joinIdeal(weakJ, ord) << ", order " << lr.weakJkOrder << "\n";
    os << "  HS drop: " << yesNo(lr.hsDropped) << ", order drop of weak J: " << yesNo(lr.weakJkDropped)
       << ", equivalent: " << yesNo(lr.equivalent) << "\n";
    Json cj;
    cj["chart"] = ring->name(chart.chartVar);
    cj["strict"] = chartJson(strict);
    cj["weak"] = chartJson(weak);
    cj["weak_J"] = {{"generators", generatorTexts(weakJ, ord)}, {"order", orderJson(lr.weakJkOrder)}};
    cj["hs_dropped"] = lr.hsDropped;
    cj["weak_J_dropped"] = lr.weakJkDropped;
    cj["equivalent"] = lr.equivalent;
    charts.push_back(cj);
  }
  os << "\nHS drop iff order drop of weak J on every chart: " << yesNo(lemma.allEquivalent()) << "\n";
  j["charts"] = charts;
  j["lemma_all_equivalent"] = lemma.allEquivalent();
  if (json) return j.dump(2) + "\n";
  return os.str();
}

}  // namespace hybridres::cli
