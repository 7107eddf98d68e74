#include "hybridres/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace hybridres {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, Exponent e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  r.degree_ -= other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& other) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : exps_) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {
void enumerate(std::size_t nvars, std::size_t pos, std::uint64_t remaining, std::vector<Monomial::Exponent>& cur,
               std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = static_cast<Monomial::Exponent>(remaining);
    out.emplace_back(cur);
    return;
  }
  for (std::uint64_t e = remaining + 1; e-- > 0;) {
    cur[pos] = static_cast<Monomial::Exponent>(e);
    enumerate(nvars, pos + 1, remaining - e, cur, out);
  }
}
}  // namespace

std::vector<Monomial> monomialsOfDegree(std::size_t nvars, std::uint64_t degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(std::vector<Monomial::Exponent>{});
    return out;
  }
  std::vector<Monomial::Exponent> cur(nvars, 0);
  enumerate(nvars, 0, degree, cur, out);
  return out;
}

std::vector<Monomial> minimalizeMonomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() > b.exponents();
  });
  std::vector<Monomial> out;
  for (auto& m : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace hybridres
