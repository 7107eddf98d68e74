#include "hybridres/hybrid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hybridres/blowup.hpp"
#include "hybridres/errors.hpp"
#include "hybridres/standard_basis.hpp"

namespace hybridres {

bool HybridData::substitutionIsIdentity() const {
  for (std::size_t i = 0; i < substitution.size(); ++i) {
    if (substitution[i] && *substitution[i] != Polynomial::variable(ring, i)) return false;
  }
  return true;
}

namespace {

bool isNonlinear(const std::vector<std::optional<Polynomial>>& images) {
  return std::any_of(images.begin(), images.end(),
                     [](const auto& im) { return im && im->degree() > 1; });
}

bool onlyFlagVariables(const Monomial& m, const std::vector<std::size_t>& flag) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0 && std::find(flag.begin(), flag.end(), i) == flag.end()) return false;
  }
  return true;
}

/// All monomials of degree `deg` in the variables `vars`.
std::vector<Monomial> flagMonomials(std::size_t n, const std::vector<std::size_t>& vars, std::uint64_t deg) {
  std::vector<Monomial> out;
  for (const auto& m : monomialsOfDegree(vars.size(), deg)) {
    Monomial full(n);
    for (std::size_t k = 0; k < vars.size(); ++k) full.set(vars[k], m[k]);
    out.push_back(std::move(full));
  }
  return out;
}

/// Raises the marked generators step by step to the top order: between
/// consecutive marked orders d_t < d_{t+1} everything collected so far is
/// multiplied by the degree d_{t+1}-d_t monomials in y_1..y_{e_t}.
std::vector<Polynomial> raiseMarked(const std::vector<std::pair<Polynomial, unsigned>>& elems,
                                    const std::map<unsigned, std::size_t>& widthAt,
                                    const std::vector<std::size_t>& flag, std::size_t n) {
  std::vector<Polynomial> acc;
  std::optional<unsigned> level;
  std::size_t k = 0;
  while (k < elems.size()) {
    unsigned d = elems[k].second;
    if (level) {
      std::size_t width = widthAt.at(*level);
      std::vector<std::size_t> vars(flag.begin(), flag.begin() + static_cast<long>(width));
      auto mults = flagMonomials(n, vars, d - *level);
      std::vector<Polynomial> next;
      for (const auto& f : acc) {
        for (const auto& m : mults) next.push_back(f.mulTerm(1, m));
      }
      acc = std::move(next);
    }
    for (; k < elems.size() && elems[k].second == d; ++k) acc.push_back(elems[k].first);
    level = d;
  }
  return acc;
}

struct StageState {
  Ideal current;
  std::vector<std::size_t> flag;
  std::vector<std::optional<Polynomial>> images;
  std::uint64_t precision = 0;
  bool truncated = false;
};

/// Applies the coordinate changes of the new frame elements (pivots outside
/// the flag) to the current ideal and to the composed substitution.
bool extendFlag(StageState& s, const Ideal& J, unsigned deg, const MonomialOrder& ord) {
  auto frame = maximalContactFrame(J, deg, ord, s.flag);
  const auto& ring = s.current.ring();
  bool grew = false;
  std::vector<std::optional<Polynomial>> sinceFrame(ring->size());
  for (auto& fe : frame) {
    if (std::find(s.flag.begin(), s.flag.end(), fe.pivot) != s.flag.end()) continue;
    grew = true;
    s.flag.push_back(fe.pivot);
    Polynomial el = substitute(fe.element, sinceFrame, s.truncated ? std::optional(s.precision) : std::nullopt);
    auto sigma = coordinateChangeFor({el, fe.pivot}, s.precision);
    if (std::none_of(sigma.begin(), sigma.end(), [](const auto& im) { return im.has_value(); })) continue;
    bool nonlinear = isNonlinear(sigma);
    s.truncated = s.truncated || nonlinear;
    std::optional<std::uint64_t> cap = s.truncated ? std::optional(s.precision) : std::nullopt;
    s.current = substitute(s.current, sigma, cap);
    for (std::size_t i = 0; i < s.images.size(); ++i) {
      Polynomial img = s.images[i] ? *s.images[i] : Polynomial::variable(ring, i);
      s.images[i] = substitute(img, sigma, cap);
    }
    for (std::size_t i = 0; i < sinceFrame.size(); ++i) {
      Polynomial img = sinceFrame[i] ? *sinceFrame[i] : Polynomial::variable(ring, i);
      sinceFrame[i] = substitute(img, sigma, cap);
    }
  }
  return grew;
}

}  // namespace

HybridData stagedBuild(const Ideal& I, const std::optional<MonomialOrder>& baseOrder) {
  const auto& ring = I.ring();
  const std::size_t n = ring->size();
  MonomialOrder base = baseOrder ? *baseOrder : MonomialOrder::localDefault(n);
  if (!base.isLocal()) throw DomainError("staging needs a local ordering");
  if (base.size() != n) throw ContextMismatch("ordering does not match the ring");
  auto o = orderOfIdeal(I);
  if (o.isInfinite()) throw DomainError("staging of the zero ideal");
  if (o == OrderValue(0L)) throw DomainError("ideal is the unit ideal at the origin");
  const auto d1 = static_cast<unsigned>(o.toLong());

  StageState s;
  s.current = I;
  s.images.assign(n, std::nullopt);
  long maxDeg = 0;
  for (const auto& g : I.generators()) maxDeg = std::max(maxDeg, g.degree());
  s.precision = 2 * static_cast<std::uint64_t>(maxDeg);

  extendFlag(s, I, d1, base);
  MonomialOrder ord = base.withLeading(s.flag);
  std::map<unsigned, std::size_t> widthAt;
  unsigned deg = d1;
  auto sb = standardBasis(s.current, ord, true, deg);
  std::set<std::size_t> seen;
  for (;;) {
    std::vector<std::pair<Polynomial, unsigned>> older;
    std::vector<Polynomial> fresh;
    for (const auto& g : sb.basis()) {
      auto go = static_cast<unsigned>(orderOfPoly(g).toLong());
      if (go < deg) {
        older.emplace_back(g, go);
      } else {
        fresh.push_back(g);
      }
    }
    bool escapes = std::any_of(fresh.begin(), fresh.end(), [&](const Polynomial& g) {
      return !onlyFlagVariables(g.leadingTerm(ord).mono, s.flag);
    });
    if (escapes) {
      std::stable_sort(older.begin(), older.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
      std::vector<std::pair<Polynomial, unsigned>> all = older;
      for (const auto& g : fresh) all.emplace_back(g, deg);
      widthAt[deg] = s.flag.size();
      Ideal J(ring, raiseMarked(all, widthAt, s.flag, n));
      if (extendFlag(s, J, deg, ord)) {
        ord = base.withLeading(s.flag);
        sb = standardBasis(s.current, ord, true, deg);
        continue;
      }
    }
    widthAt[deg] = s.flag.size();
    if (sb.pendingInputs() == 0 || !sb.isTruncated()) break;
    ++deg;
    sb = sb.resume(deg);
  }

  HybridData h;
  h.ring = ring;
  h.ordering = ord;
  h.flagVars = s.flag;
  h.substitution = s.images;
  if (s.truncated) h.precision = s.precision;
  h.original = I;
  std::vector<std::pair<Polynomial, unsigned>> marks;
  for (const auto& g : sb.basis()) {
    auto go = static_cast<unsigned>(orderOfPoly(g).toLong());
    if (go <= deg) marks.emplace_back(g, go);
  }
  std::stable_sort(marks.begin(), marks.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  for (const auto& [g, d] : marks) {
    auto it = widthAt.find(d);
    h.marked.push_back({g, d, static_cast<unsigned>(it == widthAt.end() ? s.flag.size() : it->second)});
  }
  h.Jk = Ideal(ring, raiseMarked(marks, widthAt, s.flag, n));
  return h;
}

WeightedIdealSum modifiedCoeffIdeal(const HybridData& h) {
  const std::size_t n = h.ring->size();
  const unsigned dk = h.dk();
  std::vector<std::size_t> flag(h.flagVars.begin(), h.flagVars.begin() + h.ek());
  WeightedIdealSum w;
  if (flag.size() >= n) return w;
  w.ambient = restrictRing(*h.ring, flag);
  std::vector<std::optional<std::size_t>> map(n);
  for (std::size_t i = 0, j = 0; i < n; ++i) {
    if (std::find(flag.begin(), flag.end(), i) == flag.end()) map[i] = j++;
  }
  auto ambientOrder = MonomialOrder::degrevlex(w.ambient->size());
  std::map<unsigned, std::vector<Polynomial>> levels;
  for (const auto& m : h.marked) {
    for (const auto& [beta, a] : coefficientsInFlag(m.generator, flag)) {
      unsigned len = std::accumulate(beta.begin(), beta.end(), 0U);
      if (len >= m.order || a.isZero()) continue;
      Polynomial c = a.transfer(w.ambient, map).monic(ambientOrder);
      unsigned lo = len + dk > m.order ? len + dk - m.order : 0;
      for (unsigned j = lo; j < dk; ++j) {
        auto& lvl = levels[j];
        if (std::find(lvl.begin(), lvl.end(), c) == lvl.end()) lvl.push_back(c);
      }
    }
  }
  for (auto& [j, gens] : levels) {
    w.components.push_back({Ideal(w.ambient, std::move(gens)), coefficientExponent(dk, j), static_cast<long>(j)});
  }
  return w;
}

namespace {

constexpr long kExpandBudget = 256;

/// One descent step on a weighted sum: normalize exponents, pick an ideal
/// with the same maximal contact, choose a hypersurface and take its
/// Villamayor coefficient ideal.
struct DescentStep {
  WeightedIdealSum next;
  std::string hypersurfaceVar;
};

Ideal representative(const WeightedIdealSum& w) {
  mpz_class g = 0;
  for (const auto& c : w.components) g = gcd(g, c.exponent);
  WeightedIdealSum normalized = w;
  for (auto& c : normalized.components) c.exponent /= g;
  try {
    return expandWeighted(normalized, kExpandBudget);
  } catch (const DomainError&) {
    const WeightedComponent* best = nullptr;
    OrderValue bestValue = OrderValue::infinity();
    for (const auto& c : normalized.components) {
      auto v = orderOfIdeal(c.ideal) * c.exponent;
      if (!best || v < bestValue) {
        best = &c;
        bestValue = v;
      }
    }
    return best->ideal;
  }
}

DescentStep descend(const WeightedIdealSum& w) {
  Ideal E = representative(w);
  const auto& ring = E.ring();
  auto d = static_cast<unsigned>(orderOfIdeal(E).toLong());
  auto ord = MonomialOrder::localDefault(ring->size());
  auto frame = maximalContactFrame(E, d, ord);
  if (frame.empty()) throw InternalError("no hypersurface of maximal contact");
  long maxDeg = 0;
  for (const auto& g : E.generators()) maxDeg = std::max(maxDeg, g.degree());
  auto sigma = coordinateChangeFor(frame.front(), 2 * static_cast<std::uint64_t>(maxDeg));
  std::optional<std::uint64_t> cap;
  if (isNonlinear(sigma)) cap = 2 * static_cast<std::uint64_t>(maxDeg);
  Ideal moved = substitute(E, sigma, cap);
  std::size_t v = frame.front().pivot;
  return {coeffIdealVillamayor(moved, v, d), ring->name(v)};
}

}  // namespace

HybridInvariant hybridInvariant(const Ideal& I, unsigned maxDepth, const std::optional<MonomialOrder>& baseOrder) {
  if (maxDepth == 0) throw DomainError("invariant depth must be positive");
  const std::size_t n = I.ring()->size();
  auto h = stagedBuild(I, baseOrder);
  HybridInvariant inv;
  inv.entries.push_back({orderOfIdeal(h.Jk), n, 0});
  inv.descentVars = h.flagVars;
  if (maxDepth == 1) {
    inv.complete = false;
    return inv;
  }
  auto w = modifiedCoeffIdeal(h);
  std::size_t dim = n - h.ek();
  inv.entries.push_back({weightedOrder(w), dim, 0});
  for (;;) {
    const auto& last = inv.entries.back();
    if (last.value.isInfinite() || last.value == OrderValue(0L) || last.dimension == 0) break;
    if (inv.entries.size() >= maxDepth) {
      inv.complete = false;
      break;
    }
    auto step = descend(w);
    inv.descentVars.push_back(I.ring()->indexOf(step.hypersurfaceVar));
    w = std::move(step.next);
    --dim;
    inv.entries.push_back({w.ambient ? weightedOrder(w) : OrderValue::infinity(), dim, 0});
  }
  return inv;
}

CenterSuggestion suggestCenter(const Ideal& I, unsigned maxDepth, const std::optional<MonomialOrder>& baseOrder) {
  CenterSuggestion s;
  auto o = orderOfIdeal(I);
  if (o.isInfinite()) throw DomainError("center suggestion for the zero ideal");
  if (o <= OrderValue(1L)) {
    s.smooth = true;
    return s;
  }
  auto inv = hybridInvariant(I, maxDepth, baseOrder);
  s.invariantPrefix = inv.entries;
  s.complete = inv.complete;
  s.centerVars = inv.descentVars;
  std::sort(s.centerVars.begin(), s.centerVars.end());
  s.centerVars.erase(std::unique(s.centerVars.begin(), s.centerVars.end()), s.centerVars.end());
  return s;
}

bool LemmaReport::allEquivalent() const {
  return std::all_of(charts.begin(), charts.end(), [](const ChartLemmaReport& c) { return c.equivalent; });
}

LemmaReport lemmaEquivalenceCheck(const Ideal& I, const std::vector<std::size_t>& center,
                                  const std::optional<MonomialOrder>& baseOrder) {
  auto h = stagedBuild(I, baseOrder);
  for (auto v : h.flagVars) {
    if (std::find(center.begin(), center.end(), v) == center.end()) {
      throw DomainError("center must contain the flag variables");
    }
  }
  const auto& ring = I.ring();
  Ideal moved = h.substitutionIsIdentity() ? I : substitute(I, h.substitution, h.precision);
  LemmaReport report;
  report.dk = h.dk();
  const unsigned D = 2 * report.dk;
  report.originalHS = hsSequence(moved, D);
  Center c(*ring, center);
  for (const auto& chart : blowupCharts(ring, c)) {
    ChartLemmaReport r;
    r.chartVar = chart.chartVar;
    Ideal strict = strictTransform(moved, chart).ideal;
    if (orderOfIdeal(strict) == OrderValue(0L)) {
      r.hsDropped = true;
    } else {
      r.strictHS = hsSequence(strict, D);
      r.hsDropped = hsCompare(*r.strictHS, report.originalHS) == std::strong_ordering::less;
    }
    Ideal weakJ = weakTransform(h.Jk, chart).ideal;
    r.weakJkOrder = orderOfIdeal(weakJ);
    r.weakJkDropped = r.weakJkOrder < OrderValue(static_cast<long>(report.dk));
    r.equivalent = r.hsDropped == r.weakJkDropped;
    if (!r.hsDropped && !r.weakJkDropped) {
      auto rebuilt = stagedBuild(strict, baseOrder);
      r.weakEqualsRebuilt = idealEquals(weakJ, rebuilt.Jk, rebuilt.ordering);
    }
    report.charts.push_back(std::move(r));
  }
  return report;
}

}  // namespace hybridres
