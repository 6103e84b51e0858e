#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmod/polynomial.hpp"

namespace qmod {

/// Truncated Laurent series over Rational.  Coefficients are stored densely
/// for exponents valuation()..truncation_order()-1; everything at or above
/// the truncation order is unknown.  The leading stored coefficient is
/// nonzero; a series that is zero as far as it is known has an empty
/// coefficient vector and valuation() == truncation_order().
///
/// Truncation propagates pessimistically through arithmetic: a result never
/// claims more coefficients than its inputs determine.
class LaurentSeries {
 public:
  LaurentSeries() : val_(0), trunc_(0) {}

  static LaurentSeries zero_to_order(long trunc);
  static LaurentSeries monomial(const Rational& c, long exponent, long trunc);
  static LaurentSeries one(long trunc) { return monomial(Rational(1), 0, trunc); }
  /// coeffs[i] is the coefficient of x^(val+i); normalized on construction.
  static LaurentSeries from_coeffs(std::vector<Rational> coeffs, long val, long trunc);
  /// A polynomial is exact, so any truncation order is valid.
  static LaurentSeries of_polynomial(const Polynomial& p, long trunc);

  long valuation() const { return val_; }
  long truncation_order() const { return trunc_; }
  bool is_zero_to_order() const { return coeffs_.empty(); }
  /// Coefficient of x^e; zero below the valuation, throws std::out_of_range
  /// at or above the truncation order.
  const Rational& coeff(long e) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries operator*(const Rational& c) const;
  friend LaurentSeries operator+(const LaurentSeries& a, const Rational& c);
  friend LaurentSeries operator-(const LaurentSeries& a, const Rational& c);

  /// Multiply, additionally capping the truncation order at `cap`.
  static LaurentSeries mul_capped(const LaurentSeries& a, const LaurentSeries& b,
                                  long cap);
  /// Multiply by x^k.
  LaurentSeries shifted(long k) const;
  /// Restrict knowledge to exponents < t (t <= truncation_order()).
  LaurentSeries truncated(long t) const;
  LaurentSeries derivative() const;

  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  long val_, trunc_;
  std::vector<Rational> coeffs_;
};

/// Multiplicative inverse of a series that is not zero to order.
LaurentSeries series_recip(const LaurentSeries& b);
/// a/b; throws std::domain_error when b is zero to its truncation order.
LaurentSeries series_div(const LaurentSeries& a, const LaurentSeries& b);
/// outer(inner); requires outer.valuation() >= 0 and inner.valuation() >= 1.
LaurentSeries series_compose(const LaurentSeries& outer, const LaurentSeries& inner);
/// u^e for a series with valuation 0 and constant term exactly 1.
LaurentSeries series_pow_rational(const LaurentSeries& u, const Rational& e);
/// Integer power of any series (negative exponents invert first).
LaurentSeries series_pow_int(const LaurentSeries& a, long e);
/// Square root branch with positive rational leading coefficient; requires an
/// even valuation and a leading coefficient that is the square of a rational.
LaurentSeries laurent_sqrt(const LaurentSeries& a);

struct SeriesMismatch {
  long power;
  Rational lhs, rhs;
};
/// First differing coefficient at exponents < upto (and below both truncation
/// orders); nullopt when the series agree on that range.
std::optional<SeriesMismatch> first_mismatch(const LaurentSeries& a,
                                             const LaurentSeries& b, long upto);

}  // namespace qmod
