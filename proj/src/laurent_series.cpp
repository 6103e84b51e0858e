#include "qmod/laurent_series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "qmod/kernel.hpp"

namespace qmod {

namespace {
const Rational kZero(0);
}

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    val_ = trunc_;
    return;
  }
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    val_ += static_cast<long>(lead);
  }
}

LaurentSeries LaurentSeries::zero_to_order(long trunc) {
  LaurentSeries s;
  s.val_ = s.trunc_ = trunc;
  return s;
}

LaurentSeries LaurentSeries::monomial(const Rational& c, long exponent, long trunc) {
  if (c.is_zero() || exponent >= trunc) return zero_to_order(trunc);
  LaurentSeries s;
  s.val_ = exponent;
  s.trunc_ = trunc;
  s.coeffs_.assign(static_cast<std::size_t>(trunc - exponent), Rational(0));
  s.coeffs_[0] = c;
  return s;
}

LaurentSeries LaurentSeries::from_coeffs(std::vector<Rational> coeffs, long val,
                                         long trunc) {
  if (trunc < val + static_cast<long>(coeffs.size()))
    coeffs.resize(static_cast<std::size_t>(std::max(0L, trunc - val)));
  else if (trunc > val + static_cast<long>(coeffs.size()))
    coeffs.resize(static_cast<std::size_t>(trunc - val), Rational(0));
  LaurentSeries s;
  s.val_ = val;
  s.trunc_ = trunc;
  s.coeffs_ = std::move(coeffs);
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::of_polynomial(const Polynomial& p, long trunc) {
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  return from_coeffs(std::move(c), 0, trunc);
}

const Rational& LaurentSeries::coeff(long e) const {
  if (e >= trunc_)
    throw std::out_of_range("LaurentSeries: coefficient beyond truncation order");
  if (e < val_) return kZero;
  return coeffs_[static_cast<std::size_t>(e - val_)];
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const long trunc = std::min(a.trunc_, b.trunc_);
  const long val = std::min(a.val_, b.val_);
  if (val >= trunc) return LaurentSeries::zero_to_order(trunc);
  std::vector<Rational> c(static_cast<std::size_t>(trunc - val));
  for (long e = a.val_; e < std::min(a.trunc_, trunc); ++e)
    c[static_cast<std::size_t>(e - val)] += a.coeff(e);
  for (long e = b.val_; e < std::min(b.trunc_, trunc); ++e)
    c[static_cast<std::size_t>(e - val)] += b.coeff(e);
  return LaurentSeries::from_coeffs(std::move(c), val, trunc);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return a + (-b);
}

LaurentSeries operator+(const LaurentSeries& a, const Rational& c) {
  return a + LaurentSeries::monomial(c, 0, a.trunc_);
}

LaurentSeries operator-(const LaurentSeries& a, const Rational& c) {
  return a + (-c);
}

LaurentSeries LaurentSeries::mul_capped(const LaurentSeries& a, const LaurentSeries& b,
                                        long cap) {
  // A product is known where no unknown tail of one factor can reach: the
  // weaker of trunc(a)+val(b) and trunc(b)+val(a).
  const long trunc = std::min(cap, std::min(a.trunc_ + b.val_, b.trunc_ + a.val_));
  if (a.is_zero_to_order() || b.is_zero_to_order())
    return zero_to_order(trunc);
  const long val = a.val_ + b.val_;
  if (val >= trunc) return zero_to_order(trunc);
  auto c = kernel::convolve(a.coeffs_, b.coeffs_, static_cast<std::size_t>(trunc - val));
  return from_coeffs(std::move(c), val, trunc);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  return LaurentSeries::mul_capped(a, b, std::numeric_limits<long>::max() / 4);
}

LaurentSeries LaurentSeries::operator*(const Rational& c) const {
  if (c.is_zero()) return zero_to_order(trunc_);
  LaurentSeries s = *this;
  for (auto& x : s.coeffs_) x *= c;
  return s;
}

LaurentSeries LaurentSeries::shifted(long k) const {
  LaurentSeries s = *this;
  s.val_ += k;
  s.trunc_ += k;
  return s;
}

LaurentSeries LaurentSeries::truncated(long t) const {
  if (t > trunc_)
    throw std::domain_error("LaurentSeries: cannot extend truncation order");
  if (t <= val_) return zero_to_order(t);
  LaurentSeries s;
  s.val_ = val_;
  s.trunc_ = t;
  s.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + static_cast<long>(t - val_));
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::derivative() const {
  if (is_zero_to_order()) return zero_to_order(trunc_ - 1);
  std::vector<Rational> c;
  c.reserve(coeffs_.size());
  for (long e = val_; e < trunc_; ++e)
    c.push_back(coeff(e) * Rational(e));
  return from_coeffs(std::move(c), val_ - 1, trunc_ - 1);
}

std::string LaurentSeries::to_string(char var) const {
  if (is_zero_to_order()) return "O(" + std::string(1, var) + "^" + std::to_string(trunc_) + ")";
  std::string s;
  for (long e = val_; e < trunc_; ++e) {
    const Rational& c = coeff(e);
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (s.empty())
      s += c.sign() < 0 ? "-" : "";
    else
      s += c.sign() < 0 ? " - " : " + ";
    if (e == 0) {
      s += a.to_string();
    } else {
      if (!a.is_one()) s += a.to_string() + "*";
      s += var;
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  if (s.empty()) s = "0";
  s += " + O(" + std::string(1, var) + "^" + std::to_string(trunc_) + ")";
  return s;
}

LaurentSeries series_recip(const LaurentSeries& b) {
  if (b.is_zero_to_order())
    throw std::domain_error("series_recip: series is zero to its truncation order");
  const long vb = b.valuation();
  const long m = b.truncation_order() - vb;  // relative terms known
  const Rational c0 = b.coeff(vb);
  const Rational c0_inv = c0.inverse();
  std::vector<Rational> r(static_cast<std::size_t>(m));
  r[0] = Rational(1);
  for (long n = 1; n < m; ++n) {
    Rational acc;
    for (long k = 1; k <= n; ++k) {
      const Rational& u = b.coeff(vb + k);
      if (u.is_zero()) continue;
      acc += u * c0_inv * r[static_cast<std::size_t>(n - k)];
    }
    r[static_cast<std::size_t>(n)] = -acc;
  }
  for (auto& x : r) x *= c0_inv;
  return LaurentSeries::from_coeffs(std::move(r), -vb, -vb + m);
}

LaurentSeries series_div(const LaurentSeries& a, const LaurentSeries& b) {
  return a * series_recip(b);
}

LaurentSeries series_compose(const LaurentSeries& outer, const LaurentSeries& inner) {
  if (outer.valuation() < 0)
    throw std::domain_error("series_compose: outer series has negative valuation");
  const long vg = inner.is_zero_to_order() ? inner.truncation_order() : inner.valuation();
  if (vg <= 0)
    throw std::domain_error("series_compose: inner valuation must be >= 1");
  const long To = outer.truncation_order();
  const long vo = outer.valuation();
  // Outer tail enters at exponent To*vg; inner tail enters through the first
  // derivative at Tg + (vo-1)*vg (vo >= 1) or Tg (vo = 0).
  const long cap = std::min(To * vg, inner.truncation_order() + std::max(0L, vo - 1) * vg);
  LaurentSeries acc = LaurentSeries::zero_to_order(cap);
  for (long i = To - 1; i >= 0; --i) {
    acc = LaurentSeries::mul_capped(acc, inner, cap);
    const Rational& c = outer.coeff(i);
    if (!c.is_zero()) acc = acc + LaurentSeries::monomial(c, 0, cap);
  }
  return acc;
}

LaurentSeries series_pow_rational(const LaurentSeries& u, const Rational& e) {
  if (u.is_zero_to_order() || u.valuation() != 0 || !u.coeff(0).is_one())
    throw std::domain_error(
        "series_pow_rational: series must have valuation 0 and constant term 1 "
        "(factor out the leading constant first)");
  const long m = u.truncation_order();
  std::vector<Rational> w(static_cast<std::size_t>(m));
  w[0] = Rational(1);
  // From u w' = e u' w: n*w_n = sum_{j>=1} (e*j - (n-j)) u_j w_{n-j}.
  for (long n = 1; n < m; ++n) {
    Rational acc;
    for (long j = 1; j <= n; ++j) {
      const Rational& uj = u.coeff(j);
      if (uj.is_zero()) continue;
      acc += (e * Rational(j) - Rational(n - j)) * uj * w[static_cast<std::size_t>(n - j)];
    }
    w[static_cast<std::size_t>(n)] = acc / Rational(n);
  }
  return LaurentSeries::from_coeffs(std::move(w), 0, m);
}

LaurentSeries series_pow_int(const LaurentSeries& a, long e) {
  if (e == 0) return LaurentSeries::one(a.truncation_order());
  LaurentSeries base = e < 0 ? series_recip(a) : a;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  // Split off the pure monomial so the unit part keeps full relative order.
  if (base.is_zero_to_order())
    return LaurentSeries::zero_to_order(base.truncation_order() * static_cast<long>(k));
  const long v = base.valuation();
  const Rational lead = base.coeff(v);
  LaurentSeries unit = base.shifted(-v) * lead.inverse();
  LaurentSeries acc = LaurentSeries::one(unit.truncation_order());
  LaurentSeries sq = unit;
  while (k) {
    if (k & 1) acc = acc * sq;
    k >>= 1;
    if (k) sq = sq * sq;
  }
  const long ke = e < 0 ? -e : e;
  return acc.shifted(v * ke) * lead.pow_int(ke);
}

LaurentSeries laurent_sqrt(const LaurentSeries& a) {
  if (a.is_zero_to_order())
    throw std::domain_error("laurent_sqrt: series is zero to its truncation order");
  const long v = a.valuation();
  if (v % 2 != 0)
    throw std::domain_error("laurent_sqrt: odd valuation, no rational branch");
  const Rational lead = a.coeff(v);
  auto root = lead.nth_root(2);
  if (!root)
    throw std::domain_error(
        "laurent_sqrt: leading coefficient is not the square of a rational");
  LaurentSeries unit = a.shifted(-v) * lead.inverse();
  return series_pow_rational(unit, Rational(1, 2)).shifted(v / 2) * *root;
}

std::optional<SeriesMismatch> first_mismatch(const LaurentSeries& a,
                                             const LaurentSeries& b, long upto) {
  const long lo = std::min(a.valuation(), b.valuation());
  const long hi = std::min({a.truncation_order(), b.truncation_order(), upto});
  for (long e = lo; e < hi; ++e) {
    const Rational& x = a.coeff(e);
    const Rational& y = b.coeff(e);
    if (x != y) return SeriesMismatch{e, x, y};
  }
  return std::nullopt;
}

}  // namespace qmod
