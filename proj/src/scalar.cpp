#include "lefschetz/scalar.hpp"

#include <cctype>

namespace lefschetz {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  Rational q{mpz_class{std::string(num)}, mpz_class{std::string(den)}};
  if (q.get_den() == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  if (p <= 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw ValidationError("field characteristic must be an odd prime");
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a == 0) throw Error("inverse of zero in F_p");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::reduce(const Rational& q) const {
  mpz_class p;
  mpz_import(p.get_mpz_t(), 1, 1, sizeof(p_), 0, 0, &p_);
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw Error("prime divides a denominator");
  auto to_u64 = [](const mpz_class& z) {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, z.get_mpz_t());
    return v;
  };
  return mul(to_u64(num), inv(to_u64(den)));
}

}  // namespace lefschetz
