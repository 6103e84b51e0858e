#pragma once

#include <string>

#include "qmod/polynomial.hpp"

namespace qmod {

/// Reduced quotient of polynomials: gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Polynomial(c)) {}           // NOLINT
  /// Canonicalizing constructor; throws std::domain_error on zero denominator.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  RationalFunction derivative() const;
  /// Substitution of another rational function for the variable.
  RationalFunction compose(const RationalFunction& inner) const;
  /// Evaluation away from poles; throws std::domain_error at a pole.
  Rational eval(const Rational& x) const;

  std::string to_string(char var = 'x') const;

 private:
  Polynomial num_, den_;
};

/// Free-function spelling of the canonical reduction.
RationalFunction ratfun_reduce(const Polynomial& num, const Polynomial& den);

}  // namespace qmod
