#include "hybridres/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "hybridres/errors.hpp"

namespace hybridres {

bool canonicalGreater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, const Rational& bScale,
                        const Monomial* bShift) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  auto bTerm = [&](std::size_t k) {
    Term t{b[k].coeff * bScale, bShift ? b[k].mono * *bShift : b[k].mono};
    return t;
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Term tb = bTerm(j);
    if (i == a.size()) {
      out.push_back(std::move(tb));
      ++j;
      continue;
    }
    if (a[i].mono == tb.mono) {
      Rational c = a[i].coeff + tb.coeff;
      if (c != 0) out.push_back({std::move(c), a[i].mono});
      ++i;
      ++j;
    } else if (canonicalGreater(a[i].mono, tb.mono)) {
      out.push_back(a[i++]);
    } else {
      out.push_back(std::move(tb));
      ++j;
    }
  }
  return out;
}

void sortTerms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return canonicalGreater(x.mono, y.mono); });
}

std::vector<Term> accumulate(std::unordered_map<Monomial, Rational, MonomialHash>& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({std::move(c), m});
  }
  sortTerms(terms);
  return terms;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.mono.size() != ring_->size()) throw ContextMismatch("term length does not match the ring");
  }
  normalize();
}

void Polynomial::normalize() {
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (auto& t : terms_) acc[t.mono] += t.coeff;
  terms_ = accumulate(acc);
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({c, Monomial(ring->size())});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Polynomial p(ring);
  p.terms_.push_back({1, Monomial::variable(ring->size(), index)});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({c, m});
  return p;
}

bool Polynomial::isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.isOne()); }

Rational Polynomial::constantTerm() const {
  if (!terms_.empty() && terms_.front().mono.isOne()) return terms_.front().coeff;
  return 0;
}

OrderValue Polynomial::order() const {
  if (terms_.empty()) return OrderValue::infinity();
  return OrderValue(static_cast<long>(terms_.front().mono.degree()));
}

long Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(terms_.back().mono.degree());
}

const Term& Polynomial::leadingTerm(const MonomialOrder& ord) const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  if (ord.kind() == OrderKind::LocalNegDegRevLex) {
    // Candidates are the lowest-degree terms, which come first.
    auto best = terms_.begin();
    for (auto it = terms_.begin() + 1; it != terms_.end() && it->mono.degree() == best->mono.degree(); ++it) {
      if (ord.greater(it->mono, best->mono)) best = it;
    }
    return *best;
  }
  auto best = terms_.begin();
  for (auto it = terms_.begin() + 1; it != terms_.end(); ++it) {
    if (ord.greater(it->mono, best->mono)) best = it;
  }
  return *best;
}

std::uint64_t Polynomial::ecart(const MonomialOrder& ord) const {
  if (terms_.empty()) return 0;
  return static_cast<std::uint64_t>(degree()) - leadingTerm(ord).mono.degree();
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator+(const Polynomial& g) const {
  if (isZero()) return g;
  if (g.isZero()) return *this;
  requireSameRing(ring_, g.ring_);
  Polynomial r(ring_);
  r.terms_ = merge(terms_, g.terms_, 1, nullptr);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  if (g.isZero()) return *this;
  if (isZero()) return -g;
  requireSameRing(ring_, g.ring_);
  Polynomial r(ring_);
  r.terms_ = merge(terms_, g.terms_, -1, nullptr);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  if (ring_ && g.ring_) requireSameRing(ring_, g.ring_);
  RingPtr ring = ring_ ? ring_ : g.ring_;
  if (isZero() || g.isZero()) return Polynomial(ring);
  if (size() == 1) return g.mulTerm(terms_[0].coeff, terms_[0].mono);
  if (g.size() == 1) return mulTerm(g.terms_[0].coeff, g.terms_[0].mono);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(size() * g.size());
  for (const auto& a : terms_) {
    for (const auto& b : g.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
  }
  Polynomial r(ring);
  r.terms_ = accumulate(acc);
  return r;
}

Polynomial Polynomial::mulTruncated(const Polynomial& g, std::uint64_t maxDegree) const {
  if (ring_ && g.ring_) requireSameRing(ring_, g.ring_);
  RingPtr ring = ring_ ? ring_ : g.ring_;
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& a : terms_) {
    if (a.mono.degree() > maxDegree) break;
    for (const auto& b : g.terms_) {
      if (a.mono.degree() + b.mono.degree() > maxDegree) break;
      acc[a.mono * b.mono] += a.coeff * b.coeff;
    }
  }
  Polynomial r(ring);
  r.terms_ = accumulate(acc);
  return r;
}

Polynomial Polynomial::truncated(std::uint64_t maxDegree) const {
  Polynomial r(ring_);
  for (const auto& t : terms_) {
    if (t.mono.degree() > maxDegree) break;
    r.terms_.push_back(t);
  }
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::mulTerm(const Rational& c, const Monomial& m) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * m});
  return r;
}

Polynomial Polynomial::subMulTerm(const Rational& c, const Monomial& m, const Polynomial& g) const {
  if (ring_ && g.ring_) requireSameRing(ring_, g.ring_);
  Polynomial r(ring_ ? ring_ : g.ring_);
  r.terms_ = merge(terms_, g.terms_, -c, &m);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (isZero()) return *this;
  Rational lc = leadingTerm(ord).coeff;
  return scaled(1 / lc);
}

Polynomial Polynomial::homogeneousPart(std::uint64_t d) const {
  Polynomial r(ring_);
  for (const auto& t : terms_) {
    if (t.mono.degree() == d) r.terms_.push_back(t);
  }
  return r;
}

Polynomial Polynomial::divideByMonomial(const Monomial& m) const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.mono)) throw DomainError("monomial does not divide every term");
    r.terms_.push_back({t.coeff, t.mono / m});
  }
  return r;
}

Monomial::Exponent Polynomial::valuation(std::size_t var) const {
  if (terms_.empty()) return 0;
  Monomial::Exponent v = terms_.front().mono[var];
  for (const auto& t : terms_) v = std::min(v, t.mono[var]);
  return v;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->size()) throw ContextMismatch("point dimension does not match the ring");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (Monomial::Exponent e = 0; e < t.mono[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::transfer(const RingPtr& target, const std::vector<std::optional<std::size_t>>& map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) throw ContextMismatch("variable '" + ring_->name(i) + "' does not exist in the target ring");
      m.set(*map[i], m[*map[i]] + t.mono[i]);
    }
    out.push_back({t.coeff, std::move(m)});
  }
  return Polynomial(target, std::move(out));
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (terms_.size() != g.terms_.size()) return false;
  if (!terms_.empty() && !sameRing(ring_, g.ring_)) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != g.terms_[i].mono || terms_[i].coeff != g.terms_[i].coeff) return false;
  }
  return true;
}

Polynomial derivative(const Polynomial& f, std::size_t var) {
  if (f.ring() && var >= f.ring()->size()) throw UnknownVariable("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    auto e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({t.coeff * e, std::move(m)});
  }
  if (!f.ring()) return f;
  return Polynomial(f.ring(), std::move(out));
}

Polynomial derivative(const Polynomial& f, const Monomial& alpha) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (!alpha.divides(t.mono)) continue;
    Rational c = t.coeff;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      for (Monomial::Exponent k = 0; k < alpha[i]; ++k) c *= (t.mono[i] - k);
    }
    out.push_back({std::move(c), t.mono / alpha});
  }
  if (!f.ring()) return f;
  return Polynomial(f.ring(), std::move(out));
}

Polynomial substitute(const Polynomial& f, const std::vector<std::optional<Polynomial>>& images,
                      std::optional<std::uint64_t> maxDegree) {
  const RingPtr& ring = f.ring();
  if (!ring) return f;
  if (images.size() != ring->size()) throw ContextMismatch("substitution size does not match the ring");
  for (const auto& img : images) {
    if (img && img->ring()) requireSameRing(ring, img->ring());
  }
  auto mul = [&](const Polynomial& a, const Polynomial& b) {
    return maxDegree ? a.mulTruncated(b, *maxDegree) : a * b;
  };
  // powers[i][e] = images[i]^e, built lazily.
  std::vector<std::vector<Polynomial>> powers(ring->size());
  auto power = [&](std::size_t i, Monomial::Exponent e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(Polynomial::constant(ring, 1));
      cache.push_back(images[i]->ring() ? *images[i] : Polynomial(ring));
    }
    while (cache.size() <= e) cache.push_back(mul(cache.back(), cache[1]));
    return cache[e];
  };
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& t : f.terms()) {
    Monomial fixed(ring->size());
    Polynomial image = Polynomial::constant(ring, t.coeff);
    for (std::size_t i = 0; i < ring->size(); ++i) {
      auto e = t.mono[i];
      if (e == 0) continue;
      if (!images[i]) {
        fixed.set(i, e);
      } else {
        image = mul(image, power(i, e));
        if (image.isZero()) break;
      }
    }
    for (const auto& s : image.terms()) {
      Monomial m = s.mono * fixed;
      if (maxDegree && m.degree() > *maxDegree) continue;
      acc[m] += s.coeff;
    }
  }
  std::vector<Term> out;
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({c, m});
  }
  return Polynomial(ring, std::move(out));
}

Polynomial substitute(const Polynomial& f, const std::map<std::size_t, Polynomial>& images,
                      std::optional<std::uint64_t> maxDegree) {
  if (!f.ring()) return f;
  std::vector<std::optional<Polynomial>> v(f.ring()->size());
  for (const auto& [i, p] : images) {
    if (i >= v.size()) throw UnknownVariable("variable index out of range");
    v[i] = p;
  }
  return substitute(f, v, maxDegree);
}

Polynomial translate(const Polynomial& f, const std::vector<Rational>& point) {
  if (!f.ring()) return f;
  if (point.size() != f.ring()->size()) throw ContextMismatch("point dimension does not match the ring");
  std::vector<std::optional<Polynomial>> images(point.size());
  bool any = false;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (point[i] != 0) {
      images[i] = Polynomial::variable(f.ring(), i) + Polynomial::constant(f.ring(), point[i]);
      any = true;
    }
  }
  return any ? substitute(f, images) : f;
}

OrderValue orderOfPoly(const Polynomial& f) { return f.order(); }

std::string formatRational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string formatMonomial(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string formatCanonical(const Polynomial& f, const MonomialOrder& ord) {
  if (f.isZero()) return "0";
  if (ord.size() != f.ring()->size()) throw ContextMismatch("ordering does not match the ring");
  std::vector<const Term*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  std::stable_sort(terms.begin(), terms.end(), [&](const Term* a, const Term* b) { return ord.greater(a->mono, b->mono); });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : terms) {
    Rational c = t->coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (t->mono.isOne()) {
      os << formatRational(c);
    } else {
      if (c != 1) os << formatRational(c) << "*";
      os << formatMonomial(t->mono, *f.ring());
    }
  }
  return os.str();
}

}  // namespace hybridres
