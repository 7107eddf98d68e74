#include "hybridres/parser.hpp"

#include <cctype>
#include <string>

#include "hybridres/errors.hpp"

namespace hybridres {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring, std::size_t line)
      : text_(text), ring_(ring), line_(line) {}

  Polynomial parseAll() {
    skipSpace();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expr();
    skipSpace();
    if (pos_ != text_.size()) {
      if (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(') {
        fail("implicit multiplication is not allowed; use '*'");
      }
      fail(std::string("unexpected character '") + text_[pos_] + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line_) + ", column " + std::to_string(pos_ + 1) + ": " + msg, line_,
                     pos_ + 1);
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skipSpace();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      skipSpace();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("exponent must be a non-negative integer literal");
      }
      mpz_class e(digits(), 10);
      if (e > 1000000) fail("exponent too large");
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial base() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits(), 10);
      mpz_class den = 1;
      if (accept('/')) {
        skipSpace();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("denominator must be a natural number literal");
        }
        den = mpz_class(digits(), 10);
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->find(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parsePolynomial(std::string_view text, const RingPtr& ring, std::size_t line) {
  return PolyParser(text, ring, line).parseAll();
}

Rational parseRational(std::string_view text) {
  std::string s(text);
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  std::size_t end = s.size();
  while (end > start && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  s = s.substr(start, end - start);
  bool ok = !s.empty();
  std::size_t i = (ok && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  std::size_t slash = s.find('/');
  auto allDigits = [&](std::size_t a, std::size_t b) {
    if (a >= b) return false;
    for (std::size_t k = a; k < b; ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
  };
  if (slash == std::string::npos) {
    ok = ok && allDigits(i, s.size());
  } else {
    ok = ok && allDigits(i, slash) && allDigits(slash + 1, s.size());
  }
  if (!ok) throw ParseError("invalid rational '" + std::string(text) + "'", 1, 1);
  if (s[0] == '+') s = s.substr(1);
  Rational q;
  try {
    q = Rational(s, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid rational '" + std::string(text) + "'", 1, 1);
  }
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 1, 1);
  q.canonicalize();
  return q;
}

}  // namespace hybridres
