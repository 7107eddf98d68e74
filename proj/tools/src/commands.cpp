#include <CLI11.hpp>
#include <algorithm>
#include <sstream>

#include "hybridres/cli.hpp"
#include "hybridres/coeff_ideal.hpp"
#include "hybridres/parser.hpp"
#include "hybridres/standard_basis.hpp"
#include "report.hpp"

namespace hybridres::cli {

namespace {

struct Context {
  bool json = false;
  bool quiet = false;
  std::ostringstream out;
};

Json header(const IdealFile& f) {
  Json j;
  j["ring"] = f.ring->names();
  j["order"] = f.order.describe(*f.ring);
  j["generators"] = generatorTexts(f.ideal, f.order);
  return j;
}

void emit(Context& ctx, const Json& j, const std::string& text) {
  if (ctx.quiet) return;
  if (ctx.json) {
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << text;
  }
}

std::vector<std::size_t> parseVarList(const std::string& text, const Ring& ring) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
    if (name.empty()) continue;
    auto idx = ring.find(name);
    if (!idx) throw CLI::ValidationError("unknown variable '" + name + "'");
    out.push_back(*idx);
  }
  return out;
}

std::size_t parseVar(const std::string& name, const Ring& ring) {
  auto idx = ring.find(name);
  if (!idx) throw CLI::ValidationError("unknown variable '" + name + "'");
  return *idx;
}

void cmdOrder(Context& ctx, const IdealFile& f) {
  auto o = orderOfIdeal(f.ideal);
  Json j = header(f);
  j["ideal_order"] = orderJson(o);
  emit(ctx, j, o.toString() + "\n");
}

void cmdSb(Context& ctx, const IdealFile& f) {
  auto sb = standardBasis(f.ideal, f.order);
  Json j = header(f);
  auto gens = generatorTexts(sb.toIdeal(), f.order);
  j["standard_basis"] = gens;
  std::string text;
  for (const auto& g : gens) text += g + "\n";
  emit(ctx, j, text);
}

void cmdDelta(Context& ctx, const IdealFile& f, unsigned c) {
  if (c == 0) throw CLI::ValidationError("--iterate must be at least 1");
  auto d = deltaIterate(f.ideal, c);
  Json j = header(f);
  auto gens = generatorTexts(d, f.order);
  j["delta"] = {{"iterate", c}, {"generators", gens}, {"order", orderJson(orderOfIdeal(d))}};
  std::string text;
  for (const auto& g : gens) text += g + "\n";
  emit(ctx, j, text);
}

void cmdHs(Context& ctx, const IdealFile& f, unsigned D, const std::string& point, bool cumulative) {
  std::optional<Point> p;
  if (!point.empty()) {
    Point q;
    std::stringstream ss(point);
    std::string item;
    while (std::getline(ss, item, ',')) q.push_back(parseRational(item));
    if (q.size() != f.ring->size()) throw CLI::ValidationError("--point needs one coordinate per variable");
    p = q;
  }
  auto hs = hsSequence(f.ideal, D, p, cumulative);
  Json j = header(f);
  j["hs"] = {{"max_degree", D}, {"cumulative", cumulative}, {"values", hs.values}};
  emit(ctx, j, joinValues(hs) + "\n");
}

void cmdCoeff(Context& ctx, const IdealFile& f, const std::string& var, std::optional<unsigned> b) {
  std::size_t z = parseVar(var, *f.ring);
  unsigned marking;
  if (b) {
    marking = *b;
  } else {
    auto o = orderOfIdeal(f.ideal);
    if (o.isInfinite()) throw DomainError("zero ideal has no coefficient ideal");
    marking = static_cast<unsigned>(o.toLong());
  }
  if (marking == 0) throw DomainError("marking must be positive");
  auto w = coeffIdealVillamayor(f.ideal, z, marking);
  auto wo = weightedOrder(w);
  Json j = header(f);
  Json comps = Json::array();
  std::ostringstream text;
  for (const auto& c : w.components) {
    auto ord = MonomialOrder::localDefault(w.ambient->size());
    comps.push_back({{"level", c.level},
                     {"exponent", c.exponent.get_str()},
                     {"generators", generatorTexts(c.ideal, ord)},
                     {"order", orderJson(orderOfIdeal(c.ideal))}});
    text << "level " << c.level << " exponent " << c.exponent.get_str() << ": " << joinIdeal(c.ideal, ord) << "\n";
  }
  j["coeff"] = {{"variable", var}, {"b", marking}, {"components", comps}, {"weighted_order", wo.toString()}};
  text << "weighted order: " << wo << "\n";
  emit(ctx, j, text.str());
}

void cmdHybrid(Context& ctx, const IdealFile& f, bool centerOnly) {
  const auto& ring = *f.ring;
  auto s = suggestCenter(f.ideal, 16, f.order);
  std::string center = s.smooth ? "smooth" : centerText(ring, s.centerVars);
  if (centerOnly) {
    Json j = header(f);
    j["hybrid"] = {{"center", s.smooth ? Json(nullptr) : Json(varList(ring, s.centerVars))}, {"smooth", s.smooth}};
    emit(ctx, j, center + "\n");
    return;
  }
  if (s.smooth) {
    Json j = header(f);
    j["hybrid"] = {{"smooth", true}};
    emit(ctx, j, "smooth: order at origin is at most 1\n");
    return;
  }
  auto h = stagedBuild(f.ideal, f.order);
  auto coeff = weightedOrder(modifiedCoeffIdeal(h));
  auto inv = hybridInvariant(f.ideal, 16, f.order);
  std::ostringstream text;
  std::vector<unsigned> d;
  std::vector<unsigned> e;
  for (const auto& m : h.marked) {
    if (d.empty() || d.back() != m.order) {
      d.push_back(m.order);
      e.push_back(m.width);
    }
  }
  auto list = [](const std::vector<unsigned>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  text << "d: " << list(d) << "\n";
  text << "e: " << list(e) << "\n";
  text << "flag: " << varList(ring, h.flagVars, " ") << "\n";
  text << "coordinate change: " << (h.substitutionIsIdentity() ? "none" : "yes") << "\n";
  for (std::size_t i = 0; i < h.substitution.size(); ++i) {
    if (h.substitution[i] && *h.substitution[i] != Polynomial::variable(f.ring, i)) {
      text << "  " << ring.name(i) << " -> " << formatCanonical(*h.substitution[i], f.order) << "\n";
    }
  }
  text << "J_k:\n";
  for (const auto& g : generatorTexts(h.Jk, h.ordering)) text << "  " << g << "\n";
  text << "ord J_k: " << orderOfIdeal(h.Jk) << "\n";
  text << "Coeff^new weighted order: " << coeff << "\n";
  text << "invariant: " << invariantText(inv) << "\n";
  text << "center: " << center << "\n";
  Json j = header(f);
  Json marked = Json::array();
  for (const auto& m : h.marked) {
    marked.push_back({{"generator", formatCanonical(m.generator, h.ordering)}, {"d", m.order}, {"e", m.width}});
  }
  j["hybrid"] = {{"d", d},
                 {"e", e},
                 {"flag", varList(ring, h.flagVars)},
                 {"marked", marked},
                 {"Jk", generatorTexts(h.Jk, h.ordering)},
                 {"Jk_order", orderJson(orderOfIdeal(h.Jk))},
                 {"coeff_new_weighted_order", coeff.toString()},
                 {"invariant", invariantJson(inv.entries)},
                 {"center", varList(ring, s.centerVars)}};
  emit(ctx, j, text.str());
}

void cmdBlowup(Context& ctx, const IdealFile& f, const std::string& centerArg, const std::string& chartArg,
               const std::string& kindArg, bool viaSb, unsigned D) {
  TransformKind kind;
  if (kindArg == "total") {
    kind = TransformKind::Total;
  } else if (kindArg == "weak") {
    kind = TransformKind::Weak;
  } else if (kindArg == "strict") {
    kind = TransformKind::Strict;
  } else {
    throw CLI::ValidationError("--transform must be total, weak or strict");
  }
  if (viaSb && kind != TransformKind::Strict) throw CLI::ValidationError("--via-sb needs --transform strict");
  Center center(*f.ring, parseVarList(centerArg, *f.ring));
  std::vector<BlowupChart> charts;
  if (chartArg.empty()) {
    charts = blowupCharts(f.ring, center);
  } else {
    charts.push_back(chartFor(f.ring, center, parseVar(chartArg, *f.ring)));
  }
  Json j = header(f);
  j["center"] = varList(*f.ring, center.variables());
  Json arr = Json::array();
  std::ostringstream text;
  for (const auto& chart : charts) {
    TransformResult t;
    switch (kind) {
      case TransformKind::Total:
        t = totalTransform(f.ideal, chart);
        break;
      case TransformKind::Weak:
        t = weakTransform(f.ideal, chart);
        break;
      case TransformKind::Strict:
        t = viaSb ? strictTransformViaSB(f.ideal, chart, f.order) : strictTransform(f.ideal, chart);
        break;
    }
    auto r = chartReport(t, chart, f.order, D, false);
    text << "chart " << r.chartVar << " (E = V(" << r.chartVar << "))\n";
    renderChart(text, r, "  ");
    arr.push_back(chartJson(r));
  }
  j["charts"] = arr;
  emit(ctx, j, text.str());
}

void cmdInvariant(Context& ctx, const IdealFile& f, unsigned depth) {
  if (depth == 0) throw CLI::ValidationError("--max-depth must be positive");
  auto inv = hybridInvariant(f.ideal, depth, f.order);
  Json j = header(f);
  j["hybrid"] = {{"invariant", invariantJson(inv.entries)}, {"complete", inv.complete}};
  emit(ctx, j, invariantText(inv) + "\n");
}

}  // namespace

RunResult runCommand(const std::vector<std::string>& args) {
  Context ctx;
  RunResult result;
  CLI::App app{"Hilbert-Samuel guided resolution toolkit"};
  app.name("hybridres");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", ctx.json, "Emit JSON");
  app.add_flag("--quiet", ctx.quiet, "Suppress standard output");

  std::string file;
  auto* order = app.add_subcommand("order", "Order of the ideal at the origin");
  auto* sb = app.add_subcommand("sb", "Reduced standard basis under the file's ordering");
  auto* delta = app.add_subcommand("delta", "Delta^(c-1)(I) as a reduced degrevlex basis");
  auto* hs = app.add_subcommand("hs", "Hilbert-Samuel sequence");
  auto* coeff = app.add_subcommand("coeff", "Villamayor coefficient ideal");
  auto* hybrid = app.add_subcommand("hybrid", "Staged construction and center suggestion");
  auto* blowup = app.add_subcommand("blowup", "Transforms under a coordinate blowup");
  auto* invariant = app.add_subcommand("invariant", "Invariant by descent in dimension");
  auto* demo = app.add_subcommand("demo", "Worked examples ex61, ex62");
  for (auto* sub : {order, sb, delta, hs, coeff, hybrid, blowup, invariant}) {
    sub->add_option("file", file, "Ideal file")->required();
  }
  unsigned iterate = 2;
  delta->add_option("--iterate", iterate, "c in Delta^(c-1)");
  unsigned maxDegree = 3;
  std::string point;
  bool cumulative = false;
  hs->add_option("--max-degree", maxDegree, "Largest degree D");
  hs->add_option("--point", point, "Comma separated rational coordinates");
  hs->add_flag("--cumulative", cumulative, "Prefix sums");
  std::string var;
  std::optional<unsigned> marking;
  coeff->add_option("--var", var, "Hypersurface variable z")->required();
  coeff->add_option("--order", marking, "Marking b (default: order of the ideal)");
  bool centerOnly = false;
  hybrid->add_flag("--center-only", centerOnly, "Print only the suggested center");
  std::string centerArg;
  std::string chartArg;
  std::string kindArg;
  bool viaSb = false;
  unsigned blowupDegree = 3;
  blowup->add_option("--center", centerArg, "Center variables")->required();
  blowup->add_option("--chart", chartArg, "Chart variable (default: all charts)");
  blowup->add_option("--transform", kindArg, "total|weak|strict")->required();
  blowup->add_flag("--via-sb", viaSb, "Transform a standard basis element-wise");
  blowup->add_option("--max-degree", blowupDegree, "HS depth at chart origins");
  unsigned depth = 16;
  invariant->add_option("--max-depth", depth, "Number of entries");
  std::string demoName;
  demo->add_option("name", demoName, "ex61 or ex62")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (demo->parsed()) {
      if (demoName != "ex61" && demoName != "ex62") throw CLI::ValidationError("unknown demo '" + demoName + "'");
      if (!ctx.quiet) ctx.out << demoScenario(demoName, ctx.json);
    } else {
      auto f = loadIdealFile(file);
      if (order->parsed()) cmdOrder(ctx, f);
      if (sb->parsed()) cmdSb(ctx, f);
      if (delta->parsed()) cmdDelta(ctx, f, iterate);
      if (hs->parsed()) cmdHs(ctx, f, maxDegree, point, cumulative);
      if (coeff->parsed()) cmdCoeff(ctx, f, var, marking);
      if (hybrid->parsed()) cmdHybrid(ctx, f, centerOnly);
      if (blowup->parsed()) cmdBlowup(ctx, f, centerArg, chartArg, kindArg, viaSb, blowupDegree);
      if (invariant->parsed()) cmdInvariant(ctx, f, depth);
    }
    result.exitCode = kOk;
  } catch (const CLI::CallForHelp&) {
    ctx.out << app.help();
    result.exitCode = kOk;
  } catch (const CLI::CallForAllHelp&) {
    ctx.out << app.help("", CLI::AppFormatMode::All);
    result.exitCode = kOk;
  } catch (const CLI::ParseError& e) {
    result.err = std::string("usage error: ") + e.what() + "\n";
    result.exitCode = kUsage;
  } catch (const ParseError& e) {
    result.err = std::string("parse error: ") + e.what() + "\n";
    result.exitCode = kParseOrIo;
  } catch (const IoError& e) {
    result.err = std::string("I/O error: ") + e.what() + "\n";
    result.exitCode = kParseOrIo;
  } catch (const UnknownVariable& e) {
    result.err = std::string("usage error: ") + e.what() + "\n";
    result.exitCode = kUsage;
  } catch (const Error& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exitCode = kDomain;
  }
  result.out = ctx.out.str();
  if (result.exitCode != kOk) result.out.clear();
  return result;
}

}  // namespace hybridres::cli
