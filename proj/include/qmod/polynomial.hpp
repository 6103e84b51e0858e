#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmod/rational.hpp"

namespace qmod {

/// Dense univariate polynomial over Rational.  Coefficient i is the
/// coefficient of x^i; the vector never carries trailing zeros, and the zero
/// polynomial is the empty vector (degree -1).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c) { coeffs_.push_back(c); normalize(); }  // NOLINT
  Polynomial(long c) : Polynomial(Rational(c)) {}                        // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }
  Polynomial(std::initializer_list<Rational> coeffs)
      : coeffs_(coeffs) {
    normalize();
  }

  static Polynomial variable() { return monomial(Rational(1), 1); }
  static Polynomial monomial(const Rational& c, std::size_t deg);
  /// Parses e.g. "x^4+5*x^3+15*x^2+25*x+25" or "t^2-t+1" or "1/2*x-3".
  /// Any single-letter variable is accepted; mixing letters is an error.
  static Polynomial parse(std::string_view text);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator*(const Rational& c) const;
  Polynomial operator/(const Rational& c) const { return *this * c.inverse(); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Polynomial pow(unsigned long e) const;
  Polynomial derivative() const;
  Rational eval(const Rational& x) const;
  Polynomial compose(const Polynomial& inner) const;
  /// Multiply by x^k.
  Polynomial shifted(std::size_t k) const;

  /// Quotient and remainder with deg(rem) < deg(divisor); divisor nonzero.
  static std::pair<Polynomial, Polynomial> divrem(const Polynomial& a,
                                                  const Polynomial& b);
  /// True with quotient when b divides a exactly.
  static bool divides(const Polynomial& b, const Polynomial& a, Polynomial* quot);
  /// Monic gcd via a primitive remainder sequence (content stripped each
  /// step to keep coefficient growth down).
  static Polynomial gcd(Polynomial a, Polynomial b);

  Polynomial monic() const;
  /// Rational content (gcd of coefficients as a positive rational times the
  /// sign of the leading coefficient).
  Rational content() const;
  Polynomial primitive_part() const { return *this / content(); }

  /// Multiplicity of the root r (0 when r is not a root).
  long root_multiplicity(const Rational& r) const;
  /// All rational roots with multiplicities, found by the rational root
  /// theorem on the primitive part.
  std::vector<std::pair<Rational, long>> rational_roots() const;

  /// Text form used in tables and CLI output, e.g. "x^4+5*x^3+25".
  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace qmod
