#include "qmod/rational_function.hpp"

#include <stdexcept>

namespace qmod {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial(Rational(1));
    return;
  }
  Polynomial g = Polynomial::gcd(num, den);
  if (g.degree() > 0) {
    Polynomial q;
    Polynomial::divides(g, num, &q);
    num = q;
    Polynomial::divides(g, den, &q);
    den = q;
  }
  const Rational lead_inv = den.leading().inverse();
  num_ = num * lead_inv;
  den_ = den * lead_inv;
}

RationalFunction ratfun_reduce(const Polynomial& num, const Polynomial& den) {
  return RationalFunction(num, den);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                          den_ * den_);
}

RationalFunction RationalFunction::compose(const RationalFunction& inner) const {
  // p(P/Q) = sum p_i P^i Q^(d-i) / Q^d, assembled for numerator and
  // denominator separately over the common power of Q.
  const Polynomial& P = inner.num();
  const Polynomial& Q = inner.den();
  auto lift = [&](const Polynomial& p, unsigned long d) {
    Polynomial acc;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(d); ++i) {
      const Rational& c = p.coeff(i);
      if (c.is_zero()) continue;
      acc = acc + P.pow(i) * Q.pow(d - i) * c;
    }
    return acc;
  };
  const unsigned long d =
      static_cast<unsigned long>(std::max({num_.degree(), den_.degree(), 0L}));
  return RationalFunction(lift(num_, d), lift(den_, d));
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("RationalFunction: evaluation at a pole");
  return num_.eval(x) / d;
}

std::string RationalFunction::to_string(char var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace qmod
