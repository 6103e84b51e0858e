#include "qmod/qforms.hpp"

#include <stdexcept>

#include "qmod/appendix_data.hpp"
#include "qmod/fuchsian.hpp"

namespace qmod::qforms {

namespace {

// Guarded internal order: a few spare terms cover valuation shifts in
// divisions and compositions.
constexpr long kGuard = 6;

LaurentSeries one_minus_power(const LaurentSeries& s, long m) {
  // s * (1 - q^m)
  return s - s.shifted(m).truncated(s.truncation_order());
}

}  // namespace

LaurentSeries eta_unit(long k, long order) {
  if (order < 1) throw std::domain_error("eta_unit: order must be >= 1");
  if (k < 1) throw std::domain_error("eta_unit: level must be >= 1");
  LaurentSeries s = LaurentSeries::one(order);
  for (long n = 1; k * n < order; ++n) s = one_minus_power(s, k * n);
  return s;
}

QExpansion eta_qexp(long k, long order) {
  return QExpansion(Rational(k, 24), eta_unit(k, order));
}

QExpansion eta_product_qexp(const EtaProduct& p, long order) {
  LaurentSeries unit = LaurentSeries::one(order);
  for (const auto& [k, e] : p.factors)
    unit = unit * series_pow_rational(eta_unit(k, order), e);
  return QExpansion(p.q_exponent(), unit * p.constant);
}

QExpansion hauptmodul_qexp(const std::string& name, long order) {
  return eta_product_qexp(data::hauptmodul(name).eta, order);
}

LaurentSeries poly_at_series(const Polynomial& p, const LaurentSeries& s) {
  // Direct Horner: a polynomial is a finite sum, so the inner series may
  // have any valuation (unlike series_compose).
  const long shrink = std::max(0L, -s.valuation()) * (p.degree() + 2);
  const long big = s.truncation_order() + shrink + 2;
  LaurentSeries acc = LaurentSeries::zero_to_order(big);
  for (long i = p.degree(); i >= 0; --i) {
    acc = acc * s;
    const Rational& c = p.coeff(static_cast<std::size_t>(i));
    if (!c.is_zero()) acc = acc + LaurentSeries::monomial(c, 0, acc.truncation_order());
  }
  return acc;
}

LaurentSeries ratfun_at_series(const RationalFunction& f, const LaurentSeries& s) {
  return series_div(poly_at_series(f.num(), s), poly_at_series(f.den(), s));
}

LaurentSeries j_qexp(long order) {
  const long n = order + kGuard;
  const auto& rec = data::hauptmodul("x2");
  LaurentSeries x2 = hauptmodul_qexp("x2", n).to_laurent();
  return series_div(poly_at_series(rec.P, x2), poly_at_series(rec.Q, x2))
      .truncated(order);
}

LaurentSeries jhat_qexp(long order) {
  LaurentSeries j = j_qexp(order + 2);
  return series_div(LaurentSeries::monomial(Rational(1728), 0, order + 2), j)
      .truncated(order);
}

LaurentSeries form_qseries(int N, long order) {
  const long n = order + kGuard;
  LaurentSeries h = fuchsian::frobenius_series(fuchsian::lifted_operator(N), n);
  LaurentSeries x = hauptmodul_qexp(data::hauptmodul_for_level(N).name, n).to_laurent();
  return series_compose(h, x).truncated(order);
}

IdentityReport verify_covering(int N, long order) {
  const std::string name = "covering_" + std::to_string(N);
  const auto& rec = data::hauptmodul_for_level(N);
  if (!rec.has_covering)
    throw std::domain_error("verify_covering: no direct j formula at level " +
                            std::to_string(N));
  const long n = order + kGuard;
  LaurentSeries x = hauptmodul_qexp(rec.name, n).to_laurent();
  LaurentSeries lhs = series_div(poly_at_series(rec.P, x), poly_at_series(rec.Q, x));
  return IdentityReport::from_series(name, order, lhs, j_qexp(order));
}

namespace {

struct EtaIdentity {
  const char* id;
  // lhs: polynomial in the named Hauptmodul; rhs: an eta product.
  const char* haupt;
  Polynomial lhs_poly;        // evaluated at the Hauptmodul's q-expansion
  EtaProduct rhs;
  // alternative form: lhs = chain map applied to `haupt`, rhs = target Hauptmodul
  bool is_chain = false;
};

EtaProduct ep(long constant, std::vector<std::pair<long, Rational>> f) {
  EtaProduct e;
  e.constant = Rational(constant);
  e.factors = std::move(f);
  return e;
}

const std::vector<EtaIdentity>& eta_identities() {
  static const std::vector<EtaIdentity> v = [] {
    std::vector<EtaIdentity> t;
    Polynomial x = Polynomial::variable();
    // x6 + 8 = 8 [2]^9 [3]^3 / [1]^9 [6]^3
    t.push_back({"x6plus8", "x6", x + Polynomial(Rational(8)),
                 ep(8, {{1, -9}, {2, 9}, {3, 3}, {6, -3}}), false});
    // x6 + 9 = 9 [2]^4 [3]^8 / [1]^8 [6]^4
    t.push_back({"x6plus9", "x6", x + Polynomial(Rational(9)),
                 ep(9, {{1, -8}, {2, 4}, {3, 8}, {6, -4}}), false});
    // t36 - 1 = [4][9] / [1][36]
    t.push_back({"t36_minus1", "t36", x - Polynomial(Rational(1)),
                 ep(1, {{1, -1}, {4, 1}, {9, 1}, {36, -1}}), false});
    // t36 - 2 = [4][6]^8[9] / [2]^2[3]^3[12]^3[18]^2
    t.push_back({"t36_minus2", "t36", x - Polynomial(Rational(2)),
                 ep(1, {{2, -2}, {3, -3}, {4, 1}, {6, 8}, {9, 1}, {12, -3}, {18, -2}}),
                 false});
    // t36^2 - t36 + 1 = [2]^2[3]^4[12]^4[18]^2 / [1]^3[4][6]^4[9][36]^3
    t.push_back({"t36_quadratic", "t36", Polynomial::parse("x^2-x+1"),
                 ep(1, {{1, -3}, {2, 2}, {3, 4}, {4, -1}, {6, -4}, {9, -1}, {12, 4},
                        {18, 2}, {36, -3}}),
                 false});
    return t;
  }();
  return v;
}

IdentityReport check_chain(const std::string& id, const std::string& from_name,
                           long order) {
  const auto& rec = data::hauptmodul(from_name);
  const long n = order + kGuard;
  LaurentSeries from = hauptmodul_qexp(from_name, n).to_laurent();
  LaurentSeries lhs = ratfun_at_series(rec.chain_map, from);
  LaurentSeries rhs = hauptmodul_qexp(rec.chain_target, n).to_laurent();
  return IdentityReport::from_series(id, order, lhs.truncated(order),
                                     rhs.truncated(order));
}

IdentityReport check_in_x6(const std::string& id, const RationalFunction& map,
                           const std::string& target, long order) {
  const long n = order + kGuard;
  LaurentSeries x6 = hauptmodul_qexp("x6", n).to_laurent();
  LaurentSeries lhs = ratfun_at_series(map, x6);
  LaurentSeries rhs = hauptmodul_qexp(target, n).to_laurent();
  return IdentityReport::from_series(id, order, lhs.truncated(order),
                                     rhs.truncated(order));
}

}  // namespace

const std::vector<std::string>& eta_identity_ids() {
  static const std::vector<std::string> ids = {
      "x6plus8",     "x6plus9",     "x2_from_x6",  "x3_from_x6",
      "x2_from_x4",  "x3_from_x9",  "x4_from_x16", "x5_from_x25",
      "x5_from_x10", "x6_from_x18", "t36_minus1",  "t36_minus2",
      "t36_quadratic"};
  return ids;
}

IdentityReport verify_eta_identity(const std::string& id, long order) {
  if (id == "x2_from_x6") return check_in_x6(id, data::x2_in_x6(), "x2", order);
  if (id == "x3_from_x6") return check_in_x6(id, data::x3_in_x6(), "x3", order);
  if (id == "x2_from_x4") return check_chain(id, "x4", order);
  if (id == "x3_from_x9") return check_chain(id, "x9", order);
  if (id == "x4_from_x16") return check_chain(id, "x16", order);
  if (id == "x5_from_x25") return check_chain(id, "x25", order);
  if (id == "x5_from_x10") return check_chain(id, "x10", order);
  if (id == "x6_from_x18") return check_chain(id, "x18", order);
  for (const auto& e : eta_identities()) {
    if (id != e.id) continue;
    const long n = order + kGuard;
    LaurentSeries x = hauptmodul_qexp(e.haupt, n).to_laurent();
    QExpansion lhs = QExpansion::from_laurent(poly_at_series(e.lhs_poly, x));
    QExpansion rhs = eta_product_qexp(e.rhs, n);
    return IdentityReport::from_qexp(id, order, lhs, rhs);
  }
  throw std::domain_error("verify_eta_identity: unknown identity '" + id + "'");
}

IdentityReport verify_form_equals_eta(int N, long order) {
  const std::string name = "form_eta_" + std::to_string(N);
  const long n = order + kGuard;
  const auto& rec = data::hauptmodul_for_level(N);

  QExpansion lhs = QExpansion::from_laurent(form_qseries(N, order));

  // Table form: the weight-1 eta product.
  QExpansion table = eta_product_qexp(data::weight1_form_eta(N), n);
  if (auto m = qexp_first_mismatch(lhs, table, order))
    return IdentityReport::fail(name, order, m->power, m->lhs.to_string(),
                                m->rhs.to_string());

  // Eta-squared form: P_N(0)^{1/12} Q_N(x_N)^{-1/12} eta^2.  The twelfth
  // roots cancel only jointly, so Q_N(x_N) is normalized by P_N(0) before
  // the fractional power is taken.
  LaurentSeries x = hauptmodul_qexp(rec.name, n).to_laurent();
  QExpansion qpart =
      QExpansion::from_laurent(poly_at_series(rec.Q, x)) * rec.P.eval(Rational(0)).inverse();
  QExpansion eta2 = QExpansion(Rational(1, 12), series_pow_int(eta_unit(1, n), 2));
  QExpansion rhs = qpart.pow(Rational(-1, 12)) * eta2;
  return IdentityReport::from_qexp(name, order, lhs, rhs);
}

IdentityReport verify_h4_equals_h2(long order) {
  return IdentityReport::from_series("h4_equals_h2", order, form_qseries(4, order),
                                     form_qseries(2, order));
}

IdentityReport verify_dedekind_stiller(long order) {
  const long n = order + kGuard;
  LaurentSeries jh = jhat_qexp(n);
  LaurentSeries F = jh.shifted(-1) * Rational(1, 1728);  // unit series, F(0) = 1
  LaurentSeries lhs = series_pow_int(eta_unit(1, n), 2);
  LaurentSeries f21 = fuchsian::gauss_series(Rational(1, 12), Rational(5, 12),
                                             Rational(1), n);
  LaurentSeries rhs =
      series_pow_rational(F, Rational(1, 12)) * series_compose(f21, jh);
  return IdentityReport::from_series("dedekind_stiller", order, lhs.truncated(order),
                                     rhs.truncated(order));
}

QExpansion qexp_object(const std::string& name, long order) {
  if (name.rfind("eta:", 0) == 0) {
    const long k = std::stol(name.substr(4));
    return eta_qexp(k, order);
  }
  if (name == "j") return QExpansion::from_laurent(j_qexp(order));
  if (name.size() == 2 && name[0] == 'h') {
    const int N = name[1] - '0';
    if (N >= 2 && N <= 7)
      return eta_product_qexp(data::weight1_form_eta(N), order);
  }
  return hauptmodul_qexp(name, order);
}

}  // namespace qmod::qforms
