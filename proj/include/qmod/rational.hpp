#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace qmod {

/// Arbitrary-precision rational number, kept in lowest terms with a positive
/// denominator.  The canonical zero is 0/1.  Immutable in spirit: every
/// operation returns a fresh value; nothing here locks or shares state.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long n) {  // NOLINT: implicit by design, mirrors integer literals
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(long num, long den);
  /// Parses "num", "num/den" or "-num/den"; throws std::invalid_argument on
  /// malformed input or zero denominator.
  explicit Rational(std::string_view text);

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  Rational abs() const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  Rational inverse() const;
  /// Integer power, negative exponents allowed for nonzero values.
  Rational pow_int(long e) const;
  /// Exact k-th root (k >= 1) when one exists in Q; nullopt otherwise.
  /// Negative values admit only odd k.
  std::optional<Rational> nth_root(unsigned long k) const;
  /// Exact rational power r^(p/q); nullopt when the root is irrational.
  std::optional<Rational> pow_rational(const Rational& e) const;

  /// Numerator and denominator as independent rationals (denominator 1).
  Rational numerator() const;
  Rational denominator() const;
  /// Floor of the value as a long; throws std::overflow_error if it does not fit.
  long to_long() const;
  bool fits_long() const;

  /// "num" when integral, "num/den" otherwise.
  std::string to_string() const;

  /// gcd / lcm of integers (both arguments must be integral; result >= 0).
  static Rational integer_gcd(const Rational& a, const Rational& b);
  static Rational integer_lcm(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_t q_;
};

inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

}  // namespace qmod
