#include "qmod/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qmod {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(q_, q_, d);
  mpq_clear(d);
}

Rational::Rational(std::string_view text) {
  mpq_init(q_);
  std::string s(text);
  if (s.empty() || mpq_set_str(q_, s.c_str(), 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (mpz_sgn(mpq_denref(q_)) == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  mpq_canonicalize(q_);
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.q_, q_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.q_, q_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rational: negative power of zero");
    return Rational(0);
  }
  Rational base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                          : static_cast<unsigned long>(e);
  Rational r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), k);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), k);
  return r;
}

std::optional<Rational> Rational::nth_root(unsigned long k) const {
  if (k == 0) throw std::domain_error("Rational: 0th root");
  if (k == 1) return *this;
  if (sign() < 0 && k % 2 == 0) return std::nullopt;
  Rational r;
  int num_exact = mpz_root(mpq_numref(r.q_), mpq_numref(q_), k);
  int den_exact = mpz_root(mpq_denref(r.q_), mpq_denref(q_), k);
  if (!num_exact || !den_exact) return std::nullopt;
  return r;
}

std::optional<Rational> Rational::pow_rational(const Rational& e) const {
  Rational den = e.denominator();
  if (!den.fits_long()) return std::nullopt;
  auto root = nth_root(static_cast<unsigned long>(den.to_long()));
  if (!root) return std::nullopt;
  Rational num = e.numerator();
  if (!num.fits_long()) return std::nullopt;
  return root->pow_int(num.to_long());
}

Rational Rational::numerator() const {
  Rational r;
  mpq_set_z(r.q_, mpq_numref(q_));
  return r;
}

Rational Rational::denominator() const {
  Rational r;
  mpq_set_z(r.q_, mpq_denref(q_));
  return r;
}

bool Rational::fits_long() const {
  return is_integer() && mpz_fits_slong_p(mpq_numref(q_));
}

long Rational::to_long() const {
  if (!fits_long()) throw std::overflow_error("Rational: does not fit in long");
  return mpz_get_si(mpq_numref(q_));
}

std::string Rational::to_string() const {
  char* raw = mpq_get_str(nullptr, 10, q_);
  std::string s(raw);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(raw, s.size() + 1);
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational Rational::integer_gcd(const Rational& a, const Rational& b) {
  if (!a.is_integer() || !b.is_integer())
    throw std::domain_error("Rational: integer_gcd of non-integers");
  Rational r;
  mpz_gcd(mpq_numref(r.q_), mpq_numref(a.q_), mpq_numref(b.q_));
  return r;
}

Rational Rational::integer_lcm(const Rational& a, const Rational& b) {
  if (!a.is_integer() || !b.is_integer())
    throw std::domain_error("Rational: integer_lcm of non-integers");
  Rational r;
  mpz_lcm(mpq_numref(r.q_), mpq_numref(a.q_), mpq_numref(b.q_));
  return r;
}

}  // namespace qmod
