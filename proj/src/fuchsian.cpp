#include "qmod/fuchsian.hpp"

#include <algorithm>
#include <stdexcept>

#include "qmod/appendix_data.hpp"
#include "qmod/modcurve.hpp"

namespace qmod::fuchsian {

namespace {

// --- arithmetic in Q[x]/(x^2 + b1 x + b0), for the conjugate-pair points ---

struct QuadElt {
  Rational u, v;  // u + v*theta
};

struct QuadCtx {
  Rational b1, b0;  // theta^2 = -b1*theta - b0

  QuadElt mul(const QuadElt& x, const QuadElt& y) const {
    return {x.u * y.u - b0 * x.v * y.v, x.u * y.v + x.v * y.u - b1 * x.v * y.v};
  }
  QuadElt times_theta(const QuadElt& x) const {
    return {-b0 * x.v, x.u - b1 * x.v};
  }
  QuadElt inv(const QuadElt& x) const {
    Rational norm = x.u * x.u - b1 * x.u * x.v + b0 * x.v * x.v;
    if (norm.is_zero()) throw std::domain_error("quadratic field: inverse of zero");
    Rational ninv = norm.inverse();
    return {(x.u - b1 * x.v) * ninv, -x.v * ninv};
  }
  QuadElt eval(const Polynomial& p) const {
    QuadElt acc{Rational(0), Rational(0)};
    for (long i = p.degree(); i >= 0; --i) {
      acc = times_theta(acc);
      acc.u += p.coeff(static_cast<std::size_t>(i));
    }
    return acc;
  }
};

// Multiplicity of the monic factor m in p (m need not be linear).
long factor_multiplicity(const Polynomial& p, const Polynomial& m) {
  long k = 0;
  Polynomial cur = p, q;
  while (!cur.is_zero() && Polynomial::divides(m, cur, &q)) {
    ++k;
    cur = q;
  }
  return k;
}

// Laurent expansion of a rational function at 0, exact to `trunc` terms.
LaurentSeries rf_to_series(const RationalFunction& f, long trunc) {
  long vd = 0;
  Polynomial den = f.den();
  while (!den.is_zero() && den.coeff(0).is_zero() && den.degree() >= 1) {
    ++vd;
    std::vector<Rational> c(den.coeffs().begin() + 1, den.coeffs().end());
    den = Polynomial(std::move(c));
  }
  const long big = trunc + 2 * vd + 2;
  LaurentSeries num = LaurentSeries::of_polynomial(f.num(), big);
  LaurentSeries d1 = LaurentSeries::of_polynomial(den, big);
  return series_div(num, d1).shifted(-vd).truncated(trunc);
}

std::pair<Rational, Rational> solve_indicial(const Rational& a, const Rational& b) {
  // r(r-1) + a r + b = 0
  Rational p = a - Rational(1);
  Rational disc = p * p - Rational(4) * b;
  auto s = disc.nth_root(2);
  if (!s)
    throw std::domain_error("local_exponents: irrational characteristic exponents");
  Rational r1 = (-p - *s) / Rational(2);
  Rational r2 = (-p + *s) / Rational(2);
  if (r2 < r1) std::swap(r1, r2);
  return {r1, r2};
}

// Indicial data at a finite rational point.
std::pair<Rational, Rational> exponents_at_finite(const FuchsianOperator& L,
                                                  const Rational& p) {
  Polynomial lin{-p, Rational(1)};
  const long ka = factor_multiplicity(L.A.den(), lin);
  if (ka >= 2)
    throw std::domain_error("local_exponents: irregular singularity (A pole order >= 2)");
  const long kb = factor_multiplicity(L.B.den(), lin);
  if (kb >= 3)
    throw std::domain_error("local_exponents: irregular singularity (B pole order >= 3)");
  Rational a(0), b(0);
  if (ka == 1) {
    Polynomial d1;
    Polynomial::divides(lin, L.A.den(), &d1);
    a = L.A.num().eval(p) / d1.eval(p);
  }
  if (kb == 2) {
    Polynomial d2;
    Polynomial::divides(lin * lin, L.B.den(), &d2);
    b = L.B.num().eval(p) / d2.eval(p);
  }
  return solve_indicial(a, b);
}

std::pair<Rational, Rational> exponents_at_quadratic(const FuchsianOperator& L,
                                                     const Polynomial& m) {
  if (m.degree() != 2 || !m.is_monic())
    throw std::domain_error("local_exponents: minimal polynomial must be monic quadratic");
  QuadCtx K{m.coeff(1), m.coeff(0)};
  Polynomial mp = m.derivative();

  auto residue_like = [&](const RationalFunction& f, long pole_order,
                          const Polynomial& m_pow) -> QuadElt {
    Polynomial rest;
    Polynomial::divides(m_pow, f.den(), &rest);
    QuadElt numv = K.eval(f.num());
    QuadElt mpv = K.eval(mp);
    QuadElt denv = K.eval(rest);
    for (long i = 0; i < pole_order; ++i) denv = K.mul(denv, mpv);
    return K.mul(numv, K.inv(denv));
  };

  const long ka = factor_multiplicity(L.A.den(), m);
  if (ka >= 2) throw std::domain_error("local_exponents: irregular singularity");
  const long kb = factor_multiplicity(L.B.den(), m);
  if (kb >= 3) throw std::domain_error("local_exponents: irregular singularity");

  QuadElt a{Rational(0), Rational(0)}, b{Rational(0), Rational(0)};
  if (ka == 1) a = residue_like(L.A, 1, m);
  if (kb == 2) b = residue_like(L.B, 2, m * m);
  if (!a.v.is_zero() || !b.v.is_zero())
    throw std::domain_error(
        "local_exponents: indicial data not rational at conjugate pair");
  return solve_indicial(a.u, b.u);
}

FuchsianOperator at_infinity(const FuchsianOperator& L) {
  // x = 1/w: D_x^2 + A D_x + B becomes
  // D_w^2 + [2/w - A(1/w)/w^2] D_w + B(1/w)/w^4.
  RationalFunction inv(Polynomial(Rational(1)), Polynomial::variable());
  Polynomial w = Polynomial::variable();
  RationalFunction w2(w * w), w4((w * w) * (w * w));
  RationalFunction Atil = RationalFunction(Polynomial(Rational(2)), w) -
                          L.A.compose(inv) / w2;
  RationalFunction Btil = L.B.compose(inv) / w4;
  return {Atil, Btil};
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  // gcd(p/q, r/s) = gcd(p s, r q) / (q s)
  Rational num = Rational::integer_gcd(a.numerator() * b.denominator(),
                                       b.numerator() * a.denominator());
  return num / (a.denominator() * b.denominator());
}

Polynomial falling_factorial_poly(long shift, long count) {
  // (n+shift)(n+shift-1)...(n+shift-count+1) as a polynomial in n
  Polynomial r(Rational(1));
  for (long i = 0; i < count; ++i)
    r = r * Polynomial{Rational(shift - i), Rational(1)};
  return r;
}

}  // namespace

SingularLocation SingularLocation::finite(Rational p) {
  SingularLocation s;
  s.tag = Tag::Finite;
  s.point = std::move(p);
  return s;
}

SingularLocation SingularLocation::infinity() {
  SingularLocation s;
  s.tag = Tag::Infinity;
  return s;
}

SingularLocation SingularLocation::quadratic(Polynomial m) {
  SingularLocation s;
  s.tag = Tag::QuadraticPair;
  s.minpoly = std::move(m);
  return s;
}

std::string SingularLocation::to_string(char var) const {
  switch (tag) {
    case Tag::Finite:
      return std::string(1, var) + "=" + point.to_string();
    case Tag::Infinity:
      return std::string(1, var) + "=infinity";
    case Tag::QuadraticPair:
      return "roots of " + minpoly.to_string(var);
  }
  return {};
}

FuchsianOperator gauss_operator(const Rational& a, const Rational& b, const Rational& c) {
  Polynomial x = Polynomial::variable();
  Polynomial x_one_minus_x = x - x * x;  // x(1-x)
  RationalFunction A(Polynomial{c, -(a + b + Rational(1))}, x_one_minus_x);
  RationalFunction B(Polynomial(a * b), x * x - x);  // ab/(x(x-1))
  return {A, B};
}

FuchsianOperator heun_operator(const HeunParams& p) {
  Polynomial x = Polynomial::variable();
  Rational eps = p.alpha + p.beta + Rational(1) - p.gamma - p.delta;
  RationalFunction A = RationalFunction(Polynomial(p.gamma), x) +
                       RationalFunction(Polynomial(p.delta), x - Polynomial(Rational(1))) +
                       RationalFunction(Polynomial(eps), x - Polynomial(p.a));
  Polynomial den = x * (x - Polynomial(Rational(1))) * (x - Polynomial(p.a));
  RationalFunction B(Polynomial{-p.q, p.alpha * p.beta}, den);
  return {A, B};
}

std::pair<Rational, Rational> local_exponents(const FuchsianOperator& L,
                                              const SingularLocation& p) {
  switch (p.tag) {
    case SingularLocation::Tag::Finite:
      return exponents_at_finite(L, p.point);
    case SingularLocation::Tag::Infinity:
      return exponents_at_finite(at_infinity(L), Rational(0));
    case SingularLocation::Tag::QuadraticPair:
      return exponents_at_quadratic(L, p.minpoly);
  }
  throw std::logic_error("unreachable");
}

LaurentSeries frobenius_series(const FuchsianOperator& L, long order) {
  if (order < 1) throw std::domain_error("frobenius_series: order must be >= 1");
  LaurentSeries As = rf_to_series(L.A, order);
  LaurentSeries Bs = rf_to_series(L.B, order);
  if (As.valuation() < -1 || Bs.valuation() < -2)
    throw std::domain_error("frobenius_series: irregular singularity at 0");
  auto cf = [](const LaurentSeries& s, long e) -> Rational {
    return e < s.truncation_order() ? s.coeff(e) : Rational(0);
  };
  const Rational a_m1 = cf(As, -1);
  const Rational b_m2 = cf(Bs, -2);
  if (!b_m2.is_zero())
    throw std::domain_error("frobenius_series: no zero exponent at 0");
  const Rational partner = Rational(1) - a_m1;  // the other indicial root
  if (partner.is_integer() && partner.sign() > 0)
    throw std::domain_error(
        "frobenius_series: resonant exponents at 0 (partner " + partner.to_string() + ")");

  std::vector<Rational> c(static_cast<std::size_t>(order));
  c[0] = Rational(1);
  for (long n = 1; n < order; ++n) {
    Rational acc;
    for (long m = 0; m < n; ++m) {
      if (c[static_cast<std::size_t>(m)].is_zero()) continue;
      Rational w = cf(As, n - 1 - m) * Rational(m) + cf(Bs, n - 2 - m);
      if (w.is_zero()) continue;
      acc += w * c[static_cast<std::size_t>(m)];
    }
    Rational indicial = Rational(n) * (Rational(n) - Rational(1) + a_m1);
    c[static_cast<std::size_t>(n)] = -acc / indicial;
  }
  return LaurentSeries::from_coeffs(std::move(c), 0, order);
}

LaurentSeries apply(const FuchsianOperator& L, const LaurentSeries& u) {
  const long t = u.truncation_order() + 4;
  LaurentSeries As = rf_to_series(L.A, t);
  LaurentSeries Bs = rf_to_series(L.B, t);
  return u.derivative().derivative() + As * u.derivative() + Bs * u;
}

Recurrence extract_recurrence(const FuchsianOperator& L) {
  Polynomial g = Polynomial::gcd(L.A.den(), L.B.den());
  Polynomial q;
  Polynomial::divides(g, L.B.den(), &q);
  Polynomial D = L.A.den() * q;  // monic lcm of the two denominators

  RationalFunction p1r = L.A * RationalFunction(D);
  RationalFunction p0r = L.B * RationalFunction(D);
  if (!p1r.is_polynomial() || !p0r.is_polynomial())
    throw std::logic_error("extract_recurrence: denominator clearing failed");
  Polynomial p[3] = {p0r.num(), p1r.num(), D};

  // Joint content, so the printed recurrence is primitive with a positive
  // leading term on the second-derivative polynomial.
  Rational content(0);
  for (const auto& pi : p)
    if (!pi.is_zero()) {
      Rational c = pi.content().abs();
      content = content.is_zero() ? c : rational_gcd(content, c);
    }
  if (p[2].leading().sign() < 0) content = -content;
  for (auto& pi : p) pi = pi / content;

  long lo = 0, hi = 0;
  bool first = true;
  for (int i = 0; i < 3; ++i) {
    if (p[i].is_zero()) continue;
    long jlo = 0;
    while (p[i].coeff(static_cast<std::size_t>(jlo)).is_zero()) ++jlo;
    long rmin = i - p[i].degree();
    long rmax = i - jlo;
    if (first) {
      lo = rmin;
      hi = rmax;
      first = false;
    } else {
      lo = std::min(lo, rmin);
      hi = std::max(hi, rmax);
    }
  }

  Recurrence rec;
  rec.lo = lo;
  rec.hi = hi;
  for (long r = lo; r <= hi; ++r) {
    Polynomial Qr;
    for (int i = 0; i < 3; ++i) {
      const long j = i - r;
      if (j < 0 || j > p[i].degree()) continue;
      const Rational& pij = p[i].coeff(static_cast<std::size_t>(j));
      if (pij.is_zero()) continue;
      Qr = Qr + falling_factorial_poly(r, i) * pij;
    }
    rec.coeff.push_back(Qr);
  }
  while (!rec.coeff.empty() && rec.coeff.front().is_zero()) {
    rec.coeff.erase(rec.coeff.begin());
    ++rec.lo;
  }
  while (!rec.coeff.empty() && rec.coeff.back().is_zero()) {
    rec.coeff.pop_back();
    --rec.hi;
  }
  return rec;
}

std::string Recurrence::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    long r = lo + static_cast<long>(i);
    if (!s.empty()) s += " + ";
    s += "[" + coeff[i].to_string('n') + "]*c(n";
    if (r > 0) s += "+" + std::to_string(r);
    if (r < 0) s += std::to_string(r);
    s += ")";
  }
  return s + " = 0";
}

LaurentSeries run_recurrence(const Recurrence& rec, long order) {
  if (rec.coeff.empty()) throw std::domain_error("run_recurrence: empty recurrence");
  std::vector<Rational> c(static_cast<std::size_t>(order));
  if (order > 0) c[0] = Rational(1);
  auto get = [&](long k) -> Rational {
    return (k < 0 || k >= order) ? Rational(0) : c[static_cast<std::size_t>(k)];
  };
  for (long k = 1; k < order; ++k) {
    const long m = k - rec.hi;
    Rational top = rec.coeff.back().eval(Rational(m));
    if (top.is_zero())
      throw std::domain_error("run_recurrence: leading recurrence coefficient vanishes");
    Rational acc;
    for (long r = rec.lo; r < rec.hi; ++r)
      acc += rec.coeff[static_cast<std::size_t>(r - rec.lo)].eval(Rational(m)) * get(m + r);
    c[static_cast<std::size_t>(k)] = -acc / top;
  }
  return LaurentSeries::from_coeffs(std::move(c), 0, order);
}

FuchsianOperator weak_pullback(const FuchsianOperator& L, const Polynomial& xi_num,
                               const Polynomial& xi_den, const Rational& alpha) {
  RationalFunction xi(xi_num, xi_den);
  RationalFunction dxi = xi.derivative();
  if (dxi.is_zero()) throw std::domain_error("weak_pullback: constant map");
  RationalFunction ddxi = dxi.derivative();

  RationalFunction Alift = L.A.compose(xi) * dxi - ddxi / dxi;
  RationalFunction Blift = L.B.compose(xi) * dxi * dxi;

  // A constant denominator (or alpha = 0) makes the prefactor a constant,
  // which does not change the operator.
  if (alpha.is_zero() || xi_den.degree() < 1) return {Alift, Blift};
  RationalFunction g(xi_den.derivative() * alpha, xi_den);
  RationalFunction Atil = Alift + g * 2;
  RationalFunction Btil = Blift + Alift * g + g * g + g.derivative();
  return {Atil, Btil};
}

FuchsianOperator lifted_operator(int N) {
  const auto& rec = data::hauptmodul_for_level(N);
  if (!rec.has_covering)
    throw std::domain_error("lifted_operator: level " + std::to_string(N) +
                            " has no direct j covering");
  FuchsianOperator base =
      gauss_operator(Rational(1, 12), Rational(5, 12), Rational(1));
  return weak_pullback(base, rec.Q * Rational(1728), rec.P, Rational(1, 12));
}

FuchsianOperator chained_operator(int N) {
  if (N < 2 || N > 5)
    throw std::domain_error("chained_operator: N must be 2..5");
  const auto& td = data::transform(N);
  return weak_pullback(lifted_operator(N), td.R, Polynomial(Rational(1)), Rational(0));
}

std::vector<SingularPoint> exponent_survey(int N) {
  FuchsianOperator L = lifted_operator(N);

  Polynomial g = Polynomial::gcd(L.A.den(), L.B.den());
  Polynomial q;
  Polynomial::divides(g, L.B.den(), &q);
  Polynomial D = L.A.den() * q;

  std::vector<SingularPoint> out;
  auto push = [&](SingularLocation loc) {
    auto exps = local_exponents(L, loc);
    if (exps.first == Rational(0) && exps.second == Rational(1)) return;  // ordinary
    PointKind kind;
    if (loc.tag == SingularLocation::Tag::Infinity)
      kind = PointKind::Cusp;
    else if (exps == std::pair<Rational, Rational>{Rational(0), Rational(0)})
      kind = PointKind::Cusp;
    else if (exps == std::pair<Rational, Rational>{Rational(0), Rational(1, 2)})
      kind = PointKind::EllipticTwo;
    else if (exps == std::pair<Rational, Rational>{Rational(0), Rational(1, 3)})
      kind = PointKind::EllipticThree;
    else
      throw std::runtime_error("exponent_survey: unexpected exponent pair (" +
                               exps.first.to_string() + "," + exps.second.to_string() +
                               ") at " + loc.to_string());
    out.push_back({std::move(loc), exps, kind});
  };

  push(SingularLocation::infinity());

  Polynomial rest = D;
  for (const auto& [root, mult] : D.rational_roots()) {
    push(SingularLocation::finite(root));
    Polynomial lin{-root, Rational(1)};
    for (long i = 0; i < mult; ++i) {
      Polynomial qq;
      Polynomial::divides(lin, rest, &qq);
      rest = qq;
    }
  }
  // Squarefree part of what is left; the surveyed operators leave at most a
  // repeated irreducible quadratic here.
  if (rest.degree() > 0) {
    Polynomial sq = Polynomial::gcd(rest, rest.derivative());
    Polynomial qq;
    Polynomial::divides(sq, rest, &qq);
    rest = qq.monic();
  }
  if (rest.degree() == 2) {
    push(SingularLocation::quadratic(rest));
  } else if (rest.degree() > 0) {
    throw std::runtime_error("exponent_survey: unhandled irreducible factor of degree " +
                             std::to_string(rest.degree()));
  }

  // Internal consistency against the arithmetic of X_0(N).
  auto prof = modcurve::arithmetic_profile(N);
  long cusps = 0, e2 = 0, e3 = 0;
  for (const auto& sp : out) {
    const long n = sp.location.tag == SingularLocation::Tag::QuadraticPair ? 2 : 1;
    switch (sp.kind) {
      case PointKind::Cusp: cusps += n; break;
      case PointKind::EllipticTwo: e2 += n; break;
      case PointKind::EllipticThree: e3 += n; break;
      default: break;
    }
  }
  const Rational at_inf = Rational(prof.psi) / Rational(12);
  const auto exps_inf = local_exponents(L, SingularLocation::infinity());
  if (cusps != prof.sigma_infty || e2 != prof.eps_i || e3 != prof.eps_rho ||
      exps_inf != std::pair<Rational, Rational>{at_inf, at_inf})
    throw std::runtime_error("exponent_survey: classification disagrees with X_0(" +
                             std::to_string(N) + ") arithmetic");
  return out;
}

LaurentSeries gauss_series(const Rational& a, const Rational& b, const Rational& c,
                           long order) {
  if (c.is_integer() && c.sign() <= 0)
    throw std::domain_error("gauss_series: c must not be a non-positive integer");
  std::vector<Rational> v(static_cast<std::size_t>(order));
  if (order > 0) v[0] = Rational(1);
  for (long n = 0; n + 1 < order; ++n) {
    Rational num = (a + Rational(n)) * (b + Rational(n));
    Rational den = (c + Rational(n)) * Rational(n + 1);
    v[static_cast<std::size_t>(n + 1)] = v[static_cast<std::size_t>(n)] * num / den;
  }
  return LaurentSeries::from_coeffs(std::move(v), 0, order);
}

LaurentSeries heun_series(const HeunParams& p, long order) {
  if (p.gamma.is_integer() && p.gamma.sign() <= 0)
    throw std::domain_error("heun_series: gamma must not be a non-positive integer");
  return frobenius_series(heun_operator(p), order);
}

IdentityReport verify_hN_closed_form(int N, long order) {
  if (N < 2 || N > 4)
    throw std::domain_error("verify_hN_closed_form: N must be 2, 3 or 4");
  struct Case {
    Rational a, b;
    long scale;
  };
  const Case cases[3] = {{Rational(1, 4), Rational(1, 4), -64},
                         {Rational(1, 3), Rational(1, 3), -27},
                         {Rational(1, 2), Rational(1, 2), -16}};
  const Case& cs = cases[N - 2];
  LaurentSeries lhs = frobenius_series(lifted_operator(N), order);
  LaurentSeries g = gauss_series(cs.a, cs.b, Rational(1), order);
  LaurentSeries rhs =
      series_compose(g, LaurentSeries::monomial(Rational(1, cs.scale), 1, order));
  return IdentityReport::from_series("closed_form_" + std::to_string(N), order, lhs, rhs);
}

IdentityReport verify_h6_heun(long order) {
  LaurentSeries lhs = frobenius_series(lifted_operator(6), order);
  HeunParams p{Rational(9, 8), Rational(3, 4), Rational(1), Rational(1), Rational(1),
               Rational(1)};
  LaurentSeries hl = heun_series(p, order);
  LaurentSeries rhs =
      series_compose(hl, LaurentSeries::monomial(Rational(-1, 8), 1, order));
  return IdentityReport::from_series("heun_h6", order, lhs, rhs);
}

}  // namespace qmod::fuchsian
