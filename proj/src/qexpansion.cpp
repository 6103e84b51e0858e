#include "qmod/qexpansion.hpp"

#include <stdexcept>

namespace qmod {

Rational EtaProduct::q_exponent() const {
  Rational r;
  for (const auto& [k, e] : factors) r += e * Rational(k);
  return r / Rational(24);
}

QExpansion::QExpansion(Rational q_exponent, LaurentSeries unit)
    : q_exponent_(std::move(q_exponent)), unit_(std::move(unit)) {
  if (!unit_.is_zero_to_order() && unit_.valuation() != 0) {
    q_exponent_ += Rational(unit_.valuation());
    unit_ = unit_.shifted(-unit_.valuation());
  }
}

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
  return QExpansion(a.q_exponent_ + b.q_exponent_, a.unit_ * b.unit_);
}

QExpansion operator/(const QExpansion& a, const QExpansion& b) {
  return QExpansion(a.q_exponent_ - b.q_exponent_, series_div(a.unit_, b.unit_));
}

QExpansion QExpansion::operator*(const Rational& c) const {
  return QExpansion(q_exponent_, unit_ * c);
}

QExpansion QExpansion::pow(const Rational& e) const {
  if (is_zero_to_order())
    throw std::domain_error("QExpansion: power of a zero-to-order expansion");
  const Rational lead = leading();
  auto scaled = lead.pow_rational(e);
  if (!scaled)
    throw std::domain_error("QExpansion: leading coefficient " + lead.to_string() +
                            " has no rational power " + e.to_string());
  LaurentSeries u = unit_ * lead.inverse();
  return QExpansion(q_exponent_ * e, series_pow_rational(u, e) * *scaled);
}

LaurentSeries QExpansion::to_laurent() const {
  if (!q_exponent_.is_integer())
    throw std::domain_error("QExpansion: fractional q-exponent " +
                            q_exponent_.to_string() + " has no Laurent form");
  return unit_.shifted(q_exponent_.to_long());
}

std::optional<SeriesMismatch> qexp_first_mismatch(const QExpansion& a,
                                                  const QExpansion& b, long upto) {
  if (a.q_exponent() == b.q_exponent()) {
    if (a.q_exponent().is_integer()) {
      const long shift = a.q_exponent().to_long();
      return first_mismatch(a.unit().shifted(shift), b.unit().shifted(shift), upto);
    }
    return first_mismatch(a.unit(), b.unit(), upto);
  }
  // Different global prefactors: the smaller-order side leads with a nonzero
  // coefficient where the other side has none.
  const bool a_first = a.q_exponent() < b.q_exponent();
  const QExpansion& lead = a_first ? a : b;
  SeriesMismatch m;
  m.power = lead.q_exponent().is_integer() ? lead.q_exponent().to_long()
                                           : lead.unit().valuation();
  m.lhs = a_first ? lead.leading() : Rational(0);
  m.rhs = a_first ? Rational(0) : lead.leading();
  return m;
}

}  // namespace qmod
