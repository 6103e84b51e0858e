#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmod/laurent_series.hpp"
#include "qmod/rational.hpp"

namespace qmod {

/// Eta product in Fine's bracket notation: constant * prod [k_i]^{e_i},
/// where [k] is the eta factor at level k.  Levels are distinct and sorted;
/// rational exponents are allowed (the N=5 and N=7 weight-1 forms use them).
struct EtaProduct {
  Rational constant{1};
  std::vector<std::pair<long, Rational>> factors;  // (level, exponent)

  /// q^(sum e_i k_i / 24): the global fractional power contributed by the
  /// q^(1/24) prefactors of the eta factors.
  Rational q_exponent() const;
};

/// Exact fractional-power q-series: q^r times a Laurent unit part.  Canonical
/// form keeps the unit at valuation 0, folding any integer valuation into r.
class QExpansion {
 public:
  QExpansion() : q_exponent_(0), unit_(LaurentSeries::one(1)) {}
  QExpansion(Rational q_exponent, LaurentSeries unit);

  const Rational& q_exponent() const { return q_exponent_; }
  const LaurentSeries& unit() const { return unit_; }
  bool is_zero_to_order() const { return unit_.is_zero_to_order(); }
  /// Leading coefficient of the unit part.
  const Rational& leading() const { return unit_.coeff(unit_.valuation()); }

  friend QExpansion operator*(const QExpansion& a, const QExpansion& b);
  friend QExpansion operator/(const QExpansion& a, const QExpansion& b);
  QExpansion operator*(const Rational& c) const;

  /// Rational power.  The leading coefficient must have an exact rational
  /// e-th power; throws std::domain_error otherwise.
  QExpansion pow(const Rational& e) const;

  /// View as a plain Laurent series; requires an integer q_exponent.
  LaurentSeries to_laurent() const;
  static QExpansion from_laurent(const LaurentSeries& s) {
    return QExpansion(Rational(0), s);
  }

 private:
  Rational q_exponent_;
  LaurentSeries unit_;
};

/// First differing unit coefficient when the q-exponents match; when they do
/// not, the leading term of the side with smaller total order is reported
/// against zero.  Powers are absolute exponents whenever the q-exponent is
/// integral, else indices relative to the common prefactor.
std::optional<SeriesMismatch> qexp_first_mismatch(const QExpansion& a,
                                                  const QExpansion& b, long upto);

}  // namespace qmod
