#include <algorithm>
#include <cctype>

#include "lefschetz/poly.hpp"

namespace lefschetz {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::span<const std::string> vars) : s_(text), vars_(vars) {}

  Poly parse() {
    const int n = static_cast<int>(vars_.size());
    std::vector<Term> terms;
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = term(n);
      t.coef *= sign;
      terms.push_back(std::move(t));
      first = false;
    }
    return Poly::from_terms(n, std::move(terms));
  }

  std::size_t position() const { return pos_; }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("syntax error at position " + std::to_string(pos_) + ": " + what + " in '" +
                          std::string(s_) + "'");
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Term term(int n) {
    Term t{Monomial(n), 1};
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      t.coef = Rational(num, den);
      t.coef.canonicalize();
      have_factor = true;
    }
    while (true) {
      skip_ws();
      if (peek() == '*') {
        if (!have_factor) fail("unexpected '*'");
        ++pos_;
        skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') fail("expected variable after '*'");
      }
      char c = peek();
      if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') break;
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      int index = -1;
      for (int i = 0; i < n; ++i)
        if (vars_[i] == name) index = i;
      if (index < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      int exponent = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        mpz_class e = integer();
        if (e > 10000) fail("exponent too large");
        exponent = static_cast<int>(e.get_si());
      }
      t.mono.set(index, t.mono[index] + exponent);
      have_factor = true;
    }
    if (!have_factor) fail("expected coefficient or variable");
    return t;
  }

  std::string_view s_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::span<const std::string> varnames, bool require_homogeneous) {
  Poly p = PolyParser(text, varnames).parse();
  if (require_homogeneous && !p.is_homogeneous()) {
    int d1 = p.terms().front().mono.degree(), d2 = d1;
    for (const auto& t : p.terms())
      if (t.mono.degree() != d1) {
        d2 = t.mono.degree();
        break;
      }
    throw ValidationError("inhomogeneous polynomial '" + std::string(text) + "': found term degrees " +
                          std::to_string(std::min(d1, d2)) + " and " + std::to_string(std::max(d1, d2)));
  }
  return p;
}

}  // namespace lefschetz
