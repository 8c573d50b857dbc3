#include "lefschetz/poly.hpp"

#include <algorithm>
#include <sstream>

namespace lefschetz {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(int nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars < 0 || nvars > kMaxVars)
    throw ValidationError("unsupported number of variables: " + std::to_string(nvars));
}

Monomial::Monomial(int nvars, std::span<const int> exponents) : Monomial(nvars) {
  if (static_cast<int>(exponents.size()) != nvars)
    throw ValidationError("exponent vector length does not match variable count");
  for (int i = 0; i < nvars; ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(int nvars, int index) {
  Monomial m(nvars);
  m.set(index, 1);
  return m;
}

void Monomial::set(int i, int exponent) {
  if (exponent < 0 || exponent > 0xFFFF) throw ValidationError("exponent out of range");
  deg_ = static_cast<std::uint16_t>(deg_ - e_[i] + exponent);
  e_[i] = static_cast<std::uint16_t>(exponent);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(r.e_[i] + o.e_[i]);
  r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < n_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r(o);
  for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(o.e_[i] - e_[i]);
  r.deg_ = static_cast<std::uint16_t>(o.deg_ - deg_);
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(n_);
  for (int i = 0; i < n_; ++i) r.set(i, std::max(e_[i], o.e_[i]));
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (int i = 0; i < n_; ++i)
    if (e_[i] && o.e_[i]) return false;
  return true;
}

Monomial Monomial::widened(int nvars, int offset) const {
  Monomial r(nvars);
  for (int i = 0; i < n_; ++i) r.set(i + offset, e_[i]);
  return r;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  const int n = a.nvars();
  switch (order) {
    case MonomialOrder::grlex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (int i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case MonomialOrder::grevlex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (int i = n - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      return 0;
    case MonomialOrder::elim1: {
      if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
      int da = a.degree() - a[0], db = b.degree() - b[0];
      if (da != db) return da > db ? 1 : -1;
      for (int i = n - 1; i >= 1; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      return 0;
    }
  }
  return 0;
}

namespace {

void enumerate(int nvars, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.set(var, remaining);
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(var, e);
    enumerate(nvars, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

std::size_t binom(int n, int k) {
  if (k < 0 || n < k) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  enumerate(nvars, 0, degree, cur, out);
  return out;
}

std::size_t monomial_rank(const Monomial& m) {
  std::size_t rank = 0;
  int remaining = m.degree();
  const int n = m.nvars();
  for (int i = 0; i + 1 < n; ++i) {
    // monomials whose exponent at i exceeds m[i] come first
    for (int e = remaining; e > m[i]; --e) rank += binom(remaining - e + (n - i - 2), n - i - 2);
    remaining -= m[i];
  }
  return rank;
}

// -------------------------------------------------------------------- Poly

namespace {

bool grlex_greater(const Term& a, const Term& b) {
  return compare(a.mono, b.mono, MonomialOrder::grlex) > 0;
}

}  // namespace

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Poly Poly::variable(int nvars, int index) { return monomial(Monomial::variable(nvars, index)); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p(m.nvars());
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(int nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), grlex_greater);
  Poly p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

std::optional<int> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().mono.degree();
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return compare(t.mono, key, MonomialOrder::grlex) > 0;
  });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(std::max(n_, o.n_));
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = i == terms_.size()     ? -1
            : j == o.terms_.size() ? 1
                                   : compare(terms_[i].mono, o.terms_[j].mono, MonomialOrder::grlex);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coef + o.terms_[j].coef;
      if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(std::max(n_, o.n_));
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coef * b.coef});
  return from_terms(n_, std::move(prod));
}

Poly Poly::operator*(const Rational& c) const {
  if (c == 0) return Poly(n_);
  Poly r(*this);
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw Error("negative exponent");
  Poly result = constant(n_, 1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::times_monomial(const Monomial& m, const Rational& c) const {
  if (c == 0) return Poly(n_);
  Poly r(n_);
  r.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves graded-lex order
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != n_) throw Error("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (int i = 0; i < n_; ++i)
      for (int e = 0; e < t.mono[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

Poly Poly::normalized() const {
  if (is_zero()) return *this;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_.front().coef < 0) scale = -scale;
  return *this * scale;
}

Poly Poly::widened(int nvars, int offset) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back({t.mono.widened(nvars, offset), t.coef});
  return from_terms(nvars, std::move(ts));
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

std::string Poly::to_string(std::span<const std::string> varnames) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    bool unit = c == 1;
    bool constant_term = t.mono.degree() == 0;
    if (!unit || constant_term) os << c.get_str();
    bool need_star = !unit || constant_term;
    for (int i = 0; i < n_; ++i) {
      if (t.mono[i] == 0) continue;
      if (need_star) os << "*";
      os << varnames[i];
      if (t.mono[i] > 1) os << "^" << t.mono[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

Poly exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("division by zero polynomial");
  const Term& lead = b.terms().front();
  Poly rem = a;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& t = rem.terms().front();
    if (!lead.mono.divides(t.mono)) throw Error("inexact polynomial division");
    Monomial q = lead.mono.quotient_of(t.mono);
    Rational c = t.coef / lead.coef;
    rem = rem - b.times_monomial(q, c);
    quotient.push_back({q, c});
  }
  return Poly::from_terms(a.nvars(), std::move(quotient));
}

std::vector<std::string> default_varnames(int nvars) {
  if (nvars == 3) return {"x", "y", "z"};
  std::vector<std::string> names;
  for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::vector<std::string> dual_varnames(int nvars) {
  std::vector<std::string> names;
  for (int i = 1; i <= nvars; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

}  // namespace lefschetz
