#include "qmod/polynomial.hpp"

#include <cctype>
#include <stdexcept>

#include "qmod/kernel.hpp"

namespace qmod {

namespace {
const Rational kZero(0);
}  // namespace

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t deg) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(deg + 1);
  v[deg] = c;
  return Polynomial(std::move(v));
}

const Rational& Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("Polynomial: leading of zero");
  return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return Polynomial(
      kernel::convolve(a.coeffs_, b.coeffs_, a.coeffs_.size() + b.coeffs_.size() - 1));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c.is_zero()) return {};
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial r(Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(v));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * inner;
    acc = acc + Polynomial(coeffs_[i]);
  }
  return acc;
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> v(coeffs_.size() + k);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& a,
                                                     const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("Polynomial: division by zero");
  Polynomial rem = a;
  std::vector<Rational> quot;
  const long db = b.degree();
  if (rem.degree() >= db) quot.resize(rem.degree() - db + 1);
  const Rational lead_inv = b.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= db) {
    const long k = rem.degree() - db;
    Rational c = rem.leading() * lead_inv;
    quot[k] = c;
    rem = rem - b.shifted(k) * c;
  }
  return {Polynomial(std::move(quot)), rem};
}

bool Polynomial::divides(const Polynomial& b, const Polynomial& a, Polynomial* quot) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) return false;
  if (quot) *quot = q;
  return true;
}

Rational Polynomial::content() const {
  if (is_zero()) return Rational(0);
  // gcd of numerators over lcm of denominators, sign of the leading coeff
  Rational num_gcd(0), den_lcm(1);
  for (const auto& c : coeffs_) {
    if (c.is_zero()) continue;
    num_gcd = Rational::integer_gcd(num_gcd, c.numerator());
    den_lcm = Rational::integer_lcm(den_lcm, c.denominator());
  }
  Rational c = num_gcd / den_lcm;
  return leading().sign() < 0 ? -c : c;
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    auto [q, r] = divrem(a, b);
    a = b;
    b = r.is_zero() ? r : r.primitive_part();
  }
  return a.monic();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw std::domain_error("Polynomial: monic of zero");
  return *this * leading().inverse();
}

long Polynomial::root_multiplicity(const Rational& r) const {
  if (is_zero()) throw std::domain_error("Polynomial: root multiplicity of zero");
  Polynomial factor{-r, Rational(1)};
  Polynomial cur = *this;
  long mult = 0;
  Polynomial q;
  while (!cur.is_zero() && divides(factor, cur, &q)) {
    ++mult;
    cur = q;
  }
  return mult;
}

std::vector<std::pair<Rational, long>> Polynomial::rational_roots() const {
  std::vector<std::pair<Rational, long>> out;
  if (is_zero()) throw std::domain_error("Polynomial: roots of zero");
  Polynomial cur = *this;
  // Strip powers of x first.
  long at_zero = 0;
  while (!cur.is_zero() && cur.coeff(0).is_zero()) {
    std::vector<Rational> v(cur.coeffs().begin() + 1, cur.coeffs().end());
    cur = Polynomial(std::move(v));
    ++at_zero;
  }
  if (at_zero) out.emplace_back(Rational(0), at_zero);
  if (cur.degree() < 1) return out;

  // Rational root theorem on the primitive integer form: candidates p/q with
  // p | constant, q | leading.
  Polynomial prim = cur.primitive_part();
  const Rational c0 = prim.coeff(0), cl = prim.leading();
  auto divisors = [](const Rational& v) {
    std::vector<long> ds;
    long n = v.abs().fits_long() ? v.abs().to_long() : 0;
    if (n == 0) return ds;  // too large: no candidates from this side
    for (long d = 1; d * d <= n; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        if (d != n / d) ds.push_back(n / d);
      }
    return ds;
  };
  for (long p : divisors(c0))
    for (long q : divisors(cl))
      for (int s : {1, -1}) {
        Rational cand(s * p, q);
        if (!prim.eval(cand).is_zero()) continue;
        bool seen = false;
        for (auto& [r, m] : out) seen = seen || r == cand;
        if (seen) continue;
        long m = prim.root_multiplicity(cand);
        if (m > 0) out.emplace_back(cand, m);
      }
  return out;
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (s.empty()) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? "-" : "+";
    }
    const bool unit = a.is_one();
    if (i == 0) {
      s += a.to_string();
    } else {
      if (!unit) {
        s += a.to_string();
        s += "*";
      }
      s += var;
      if (i > 1) {
        s += "^";
        s += std::to_string(i);
      }
    }
  }
  return s;
}

Polynomial Polynomial::parse(std::string_view text) {
  std::size_t pos = 0;
  char var = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_uint = [&]() -> std::string {
    std::string d;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      d += text[pos++];
    return d;
  };
  Polynomial result;
  skip_ws();
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw std::invalid_argument("Polynomial: expected '+' or '-' in '" +
                                  std::string(text) + "'");
    }
    first = false;
    skip_ws();
    Rational coef(1);
    bool have_coef = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::string num = parse_uint();
      std::string frac = num;
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        frac += "/" + parse_uint();
      } else {
        frac = num;
      }
      coef = Rational(frac);
      have_coef = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    std::size_t deg = 0;
    if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
      char v = text[pos++];
      if (var == 0) var = v;
      if (v != var)
        throw std::invalid_argument("Polynomial: mixed variables in '" +
                                    std::string(text) + "'");
      deg = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        std::string e = parse_uint();
        if (e.empty()) throw std::invalid_argument("Polynomial: bad exponent");
        deg = std::stoul(e);
      }
    } else if (!have_coef) {
      throw std::invalid_argument("Polynomial: empty term in '" + std::string(text) + "'");
    }
    result = result + monomial(sign < 0 ? -coef : coef, deg);
    skip_ws();
  }
  return result;
}

}  // namespace qmod
