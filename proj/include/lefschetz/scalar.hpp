#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lefschetz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad syntax, wrong shapes, failed invariants).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A computation refused to start because it would exceed a fixed size cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// Exact rational scalar; canonical (reduced, positive denominator) after every
/// arithmetic operation performed through gmpxx.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Arithmetic in F_p for a prime 2 < p < 2^63.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t inv(std::uint64_t a) const;

  /// Image of a rational number; throws if p divides the denominator.
  std::uint64_t reduce(const Rational& q) const;

 private:
  std::uint64_t p_;
};

/// Three primes above 2^30 used for the modular cross-check.
inline constexpr std::uint64_t kCheckPrimes[3] = {2147483647ULL, 2147483629ULL,
                                                   2147483587ULL};

/// Ground field used by rank computations.
struct Field {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  std::uint64_t p = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint64_t p) { return {Kind::prime, p}; }
};

}  // namespace lefschetz
