#include "hybridres/standard_basis.hpp"

#include <algorithm>
#include <deque>

#include "hybridres/errors.hpp"

namespace hybridres {

namespace detail {

struct BasisElement {
  Polynomial poly;
  Monomial lm;
  Rational lc;
  std::uint64_t ecart = 0;
};

struct WorkItem {
  std::uint64_t degree = 0;
  int kind = 0;  // 0: polynomial to insert, 1: S-pair
  Monomial key;  // leading monomial or lcm
  std::size_t i = 0;
  std::size_t j = 0;
  Polynomial poly;
  bool fromInput = false;
  bool original = false;  // an input generator as given, not yet reduced
  std::size_t seq = 0;
};

/// Degree-by-degree standard basis engine (normal strategy). For local
/// orderings every queued polynomial has order >= the degree being
/// processed, so stopping at degree D and resuming later replays a fresh
/// computation exactly.
struct BasisEngine {
  RingPtr ring;
  MonomialOrder ord;
  std::vector<BasisElement> elements;
  std::vector<WorkItem> queue;
  // Input generators already taken from the queue; candidates for the
  // reduced basis alongside the computed elements.
  std::vector<BasisElement> consumedInputs;
  std::size_t pendingInputs = 0;
  std::size_t nextSeq = 0;
  bool unit = false;

  BasisEngine(RingPtr r, MonomialOrder o) : ring(std::move(r)), ord(std::move(o)) {}

  static BasisElement makeElement(Polynomial p, const MonomialOrder& ord) {
    const Term& lt = p.leadingTerm(ord);
    BasisElement e{p, lt.mono, lt.coeff, p.ecart(ord)};
    return e;
  }

  void enqueueInput(Polynomial p) {
    WorkItem w;
    w.key = p.leadingTerm(ord).mono;
    w.degree = w.key.degree();
    w.kind = 0;
    w.poly = std::move(p);
    w.fromInput = true;
    w.original = true;
    w.seq = nextSeq++;
    queue.push_back(std::move(w));
    ++pendingInputs;
  }

  bool before(const WorkItem& a, const WorkItem& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.kind != b.kind) return a.kind < b.kind;
    auto c = ord.compare(a.key, b.key);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return a.seq < b.seq;
  }

  bool finished() const { return queue.empty(); }

  void run(std::optional<unsigned> limit) {
    while (!queue.empty()) {
      auto best = queue.begin();
      for (auto it = queue.begin() + 1; it != queue.end(); ++it) {
        if (before(*it, *best)) best = it;
      }
      if (limit && best->degree > *limit) return;
      WorkItem item = std::move(*best);
      queue.erase(best);
      process(std::move(item));
    }
  }

  void process(WorkItem item) {
    Polynomial h;
    if (item.kind == 1) {
      const auto& f = elements[item.i];
      const auto& g = elements[item.j];
      h = spoly(f, g);
    } else {
      if (item.original) consumedInputs.push_back(makeElement(item.poly.monic(ord), ord));
      h = std::move(item.poly);
    }
    h = reduce(std::move(h));
    if (h.isZero()) {
      if (item.fromInput) --pendingInputs;
      return;
    }
    const Monomial& lm = h.leadingTerm(ord).mono;
    if (ord.isLocal() && lm.degree() > item.degree) {
      WorkItem w;
      w.key = lm;
      w.degree = lm.degree();
      w.kind = 0;
      w.poly = std::move(h);
      w.fromInput = item.fromInput;
      w.seq = nextSeq++;
      queue.push_back(std::move(w));
      return;
    }
    if (item.fromInput) --pendingInputs;
    add(std::move(h));
  }

  Polynomial spoly(const BasisElement& f, const BasisElement& g) const {
    Monomial l = f.lm.lcm(g.lm);
    Polynomial a = f.poly.mulTerm(1 / f.lc, l / f.lm);
    return a.subMulTerm(1 / g.lc, l / g.lm, g.poly);
  }

  Polynomial reduce(Polynomial h) const;

  void add(Polynomial h) {
    h = h.monic(ord);
    BasisElement e = makeElement(std::move(h), ord);
    if (e.lm.isOne()) {
      elements.clear();
      elements.push_back(std::move(e));
      queue.clear();
      pendingInputs = 0;
      unit = true;
      return;
    }
    std::size_t k = elements.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (elements[i].lm.coprime(e.lm)) continue;
      WorkItem w;
      w.key = elements[i].lm.lcm(e.lm);
      w.degree = w.key.degree();
      w.kind = 1;
      w.i = i;
      w.j = k;
      w.seq = nextSeq++;
      queue.push_back(std::move(w));
    }
    elements.push_back(std::move(e));
  }
};

namespace {

struct Reducer {
  const Polynomial* poly;
  Monomial lm;
  Rational lc;
  std::uint64_t ecart;
  std::size_t index;
};

Polynomial moraNormalForm(Polynomial h, std::vector<Reducer> T, const MonomialOrder& ord) {
  std::deque<Polynomial> owned;
  while (!h.isZero()) {
    const Term& lt = h.leadingTerm(ord);
    const Reducer* best = nullptr;
    for (const auto& r : T) {
      if (!r.lm.divides(lt.mono)) continue;
      if (!best || r.ecart < best->ecart ||
          (r.ecart == best->ecart && (ord.greater(r.lm, best->lm) || (r.lm == best->lm && r.index < best->index)))) {
        best = &r;
      }
    }
    if (!best) break;
    Rational c = lt.coeff / best->lc;
    Monomial m = lt.mono / best->lm;
    std::uint64_t hEcart = h.ecart(ord);
    if (best->ecart > hEcart) {
      owned.push_back(h);
      Monomial hlm = lt.mono;
      Rational hlc = lt.coeff;
      std::size_t idx = T.size();
      // `best` may be invalidated by the push_back below.
      Reducer chosen = *best;
      T.push_back({&owned.back(), std::move(hlm), std::move(hlc), hEcart, idx});
      h = h.subMulTerm(c, m, *chosen.poly);
    } else {
      h = h.subMulTerm(c, m, *best->poly);
    }
  }
  return h;
}

Polynomial fullNormalForm(Polynomial h, const std::vector<Reducer>& T, const MonomialOrder& ord) {
  std::vector<Term> rest;
  while (!h.isZero()) {
    const Term& lt = h.leadingTerm(ord);
    const Reducer* best = nullptr;
    for (const auto& r : T) {
      if (r.lm.divides(lt.mono)) {
        best = &r;
        break;
      }
    }
    if (best) {
      h = h.subMulTerm(lt.coeff / best->lc, lt.mono / best->lm, *best->poly);
    } else {
      Term t = lt;
      h = h - Polynomial::monomial(h.ring(), t.mono, t.coeff);
      rest.push_back(std::move(t));
    }
  }
  if (rest.empty()) return h;
  return Polynomial(h.ring(), std::move(rest));
}

std::vector<Reducer> reducersOf(const std::vector<BasisElement>& elems) {
  std::vector<Reducer> T;
  T.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    T.push_back({&elems[i].poly, elems[i].lm, elems[i].lc, elems[i].ecart, i});
  }
  return T;
}

}  // namespace

Polynomial BasisEngine::reduce(Polynomial h) const {
  if (h.isZero()) return h;
  auto T = reducersOf(elements);
  if (ord.isLocal()) return moraNormalForm(std::move(h), std::move(T), ord);
  // Top reduction only; tails are handled when the final basis is reduced.
  while (!h.isZero()) {
    const Term& lt = h.leadingTerm(ord);
    const Reducer* best = nullptr;
    for (const auto& r : T) {
      if (r.lm.divides(lt.mono)) {
        best = &r;
        break;
      }
    }
    if (!best) break;
    h = h.subMulTerm(lt.coeff / best->lc, lt.mono / best->lm, *best->poly);
  }
  return h;
}

}  // namespace detail

using detail::BasisElement;
using detail::BasisEngine;

namespace {

std::vector<Polynomial> reducedBasis(const BasisEngine& engine) {
  const auto& ord = engine.ord;
  const auto& elems = engine.elements;
  if (engine.unit) return {Polynomial::constant(engine.ring, 1)};
  // Minimal leading monomials; for equal leading monomials keep the
  // representative with the smallest ecart, then fewest terms.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < elems.size() && !redundant; ++j) {
      if (i == j || !elems[j].lm.divides(elems[i].lm)) continue;
      if (elems[j].lm != elems[i].lm) {
        redundant = true;
      } else {
        auto ki = std::make_tuple(elems[i].ecart, elems[i].poly.size(), i);
        auto kj = std::make_tuple(elems[j].ecart, elems[j].poly.size(), j);
        redundant = kj < ki;
      }
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<BasisElement> minimal;
  for (auto i : keep) minimal.push_back(elems[i]);
  if (ord.isLocal()) {
    // An input generator with the same leading monomial and a smaller
    // (ecart, size) is an equally valid and simpler representative.
    for (auto& m : minimal) {
      for (const auto& in : engine.consumedInputs) {
        if (in.lm != m.lm) continue;
        if (std::make_tuple(in.ecart, in.poly.size()) < std::make_tuple(m.ecart, m.poly.size())) m = in;
      }
    }
  }
  std::vector<Polynomial> out;
  if (ord.isGlobal()) {
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<BasisElement> others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      auto T = detail::reducersOf(others);
      const auto& p = minimal[i].poly;
      Polynomial lead = Polynomial::monomial(p.ring(), minimal[i].lm, minimal[i].lc);
      Polynomial tail = detail::fullNormalForm(p - lead, T, ord);
      out.push_back((lead + tail).monic(ord));
    }
  } else {
    for (auto& e : minimal) out.push_back(e.poly.monic(ord));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.leadingTerm(ord).mono, b.leadingTerm(ord).mono);
  });
  return out;
}

}  // namespace

StandardBasis makeBasis(std::shared_ptr<const BasisEngine> engine, bool reduced, std::optional<unsigned> limit) {
  StandardBasis sb;
  sb.engine_ = std::move(engine);
  sb.reduced_ = reduced;
  sb.truncation_ = sb.engine_->finished() ? std::nullopt : limit;
  if (reduced) {
    sb.basis_ = reducedBasis(*sb.engine_);
  } else {
    for (const auto& e : sb.engine_->elements) sb.basis_.push_back(e.poly);
  }
  return sb;
}

const MonomialOrder& StandardBasis::ordering() const { return engine_->ord; }
const RingPtr& StandardBasis::ring() const { return engine_->ring; }
bool StandardBasis::isUnit() const { return engine_->unit; }
std::size_t StandardBasis::pendingInputs() const { return engine_->pendingInputs; }

StandardBasis StandardBasis::resume(std::optional<unsigned> degree) const {
  auto next = std::make_shared<BasisEngine>(*engine_);
  next->run(degree);
  return makeBasis(std::move(next), reduced_, degree);
}

Ideal StandardBasis::toIdeal() const { return Ideal(engine_->ring, basis_); }

StandardBasis standardBasis(const Ideal& I, const MonomialOrder& ord, bool reduced,
                            std::optional<unsigned> truncationDegree) {
  if (ord.size() != I.ring()->size()) throw ContextMismatch("ordering does not match the ring");
  auto engine = std::make_shared<BasisEngine>(I.ring(), ord);
  for (const auto& g : I.generators()) engine->enqueueInput(g);
  engine->run(truncationDegree);
  return makeBasis(std::move(engine), reduced, truncationDegree);
}

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  if (f.isZero() || g.isZero()) throw DomainError("S-polynomial of a zero polynomial");
  requireSameRing(f.ring(), g.ring());
  const Term& a = f.leadingTerm(ord);
  const Term& b = g.leadingTerm(ord);
  Monomial l = a.mono.lcm(b.mono);
  return f.mulTerm(1 / a.coeff, l / a.mono).subMulTerm(1 / b.coeff, l / b.mono, g);
}

Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& ord) {
  std::vector<BasisElement> elems;
  for (const auto& g : G) {
    if (g.isZero()) continue;
    requireSameRing(f.ring() ? f.ring() : g.ring(), g.ring());
    elems.push_back(BasisEngine::makeElement(g, ord));
  }
  auto T = detail::reducersOf(elems);
  if (ord.isLocal()) return detail::moraNormalForm(f, std::move(T), ord);
  return detail::fullNormalForm(f, T, ord);
}

std::vector<Monomial> leadingMonomials(const StandardBasis& sb) {
  if (sb.isTruncated()) throw DomainError("leading ideal of a truncated standard basis");
  std::vector<Monomial> lms;
  for (const auto& g : sb.basis()) lms.push_back(g.leadingTerm(sb.ordering()).mono);
  return minimalizeMonomials(std::move(lms));
}

Ideal leadingIdeal(const StandardBasis& sb) {
  std::vector<Polynomial> gens;
  for (const auto& m : leadingMonomials(sb)) gens.push_back(Polynomial::monomial(sb.ring(), m));
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return sb.ordering().greater(a.terms()[0].mono, b.terms()[0].mono);
  });
  return Ideal(sb.ring(), std::move(gens));
}

bool idealMembership(const Polynomial& f, const StandardBasis& sb) {
  if (f.isZero()) return true;
  if (sb.isUnit()) return true;
  return normalForm(f, sb.basis(), sb.ordering()).isZero();
}

bool idealMembership(const Polynomial& f, const Ideal& I, const MonomialOrder& ord) {
  if (f.isZero()) return true;
  requireSameRing(f.ring(), I.ring());
  return idealMembership(f, standardBasis(I, ord, false));
}

bool idealContains(const Ideal& sup, const Ideal& sub, const MonomialOrder& ord) {
  requireSameRing(sup.ring(), sub.ring());
  if (sub.isZero()) return true;
  auto sb = standardBasis(sup, ord, false);
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Polynomial& g) { return idealMembership(g, sb); });
}

bool idealEquals(const Ideal& I, const Ideal& J, const MonomialOrder& ord) {
  return idealContains(I, J, ord) && idealContains(J, I, ord);
}

}  // namespace hybridres
