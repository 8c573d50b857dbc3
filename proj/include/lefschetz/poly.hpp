#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/scalar.hpp"

namespace lefschetz {

/// Upper bound on the number of ring variables a monomial can carry.
inline constexpr int kMaxVars = 8;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(int nvars, std::span<const int> exponents);

  static Monomial variable(int nvars, int index);

  int nvars() const { return n_; }
  int degree() const { return deg_; }
  int operator[](int i) const { return e_[i]; }
  void set(int i, int exponent);

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / *this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  /// Same exponents placed at positions [offset, offset + nvars()) of a wider ring.
  Monomial widened(int nvars, int offset) const;

  bool operator==(const Monomial& o) const { return n_ == o.n_ && e_ == o.e_; }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  std::uint16_t deg_ = 0;
};

enum class MonomialOrder {
  grlex,    ///< degree, then lex with x1 > x2 > ...
  grevlex,  ///< degree, then reverse lex
  elim1,    ///< first variable eliminated (lex on it), grevlex on the rest
};

/// Three-way comparison: positive when a > b.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

/// All monomials of total degree `degree` in `nvars` variables, listed in
/// descending graded-lex order (x^d first).
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

/// Position of `m` in monomials_of_degree(m.nvars(), m.degree()).
std::size_t monomial_rank(const Monomial& m);

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse polynomial over Q. Terms are kept sorted in descending graded-lex
/// order with no zero coefficients, so equality is structural.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : n_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);
  static Poly monomial(const Monomial& m, const Rational& c = 1);
  /// Combines like terms and drops zeros.
  static Poly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Total degree of the leading term; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  /// Coefficient of `m` (zero when absent).
  Rational coefficient(const Monomial& m) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly pow(int e) const;
  Poly times_monomial(const Monomial& m, const Rational& c) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Rational multiple with coprime integer coefficients and a positive
  /// graded-lex leading coefficient.
  Poly normalized() const;
  /// Variables renumbered into a ring with `nvars` variables, starting at `offset`.
  Poly widened(int nvars, int offset) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string(std::span<const std::string> varnames) const;

 private:
  int n_ = 0;
  std::vector<Term> terms_;
};

/// Exact quotient a / b; throws Error when b does not divide a.
Poly exact_divide(const Poly& a, const Poly& b);

/// Parses a polynomial in the text grammar
///   poly  := ['+'|'-'] term (('+'|'-') term)*
///   term  := [coef ['*']] factor (('*')? factor)* | coef
///   coef  := int | int '/' int
///   factor:= var ['^' int]
/// When `require_homogeneous` is set, mixed-degree input is rejected.
Poly parse_poly(std::string_view text, std::span<const std::string> varnames,
                bool require_homogeneous = false);

/// Default variable names: x,y,z for three variables, otherwise x1..xn.
std::vector<std::string> default_varnames(int nvars);
/// Dual-ring variable names a1..an.
std::vector<std::string> dual_varnames(int nvars);

}  // namespace lefschetz
