#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmod/laurent_series.hpp"
#include "qmod/rational_function.hpp"
#include "qmod/report.hpp"

namespace qmod::fuchsian {

/// Monic second-order operator D^2 + A D + B with rational-function
/// coefficients.  Regularity of singular points is checked where it matters
/// (local_exponents), not on construction.
struct FuchsianOperator {
  RationalFunction A, B;
  friend bool operator==(const FuchsianOperator& a, const FuchsianOperator& b) {
    return a.A == b.A && a.B == b.B;
  }
};

/// Where an exponent pair lives: a rational point, the point at infinity, or
/// a conjugate pair of points cut out by a monic irreducible quadratic (the
/// elliptic points of levels 5 and 7 are quadratic irrationalities).
struct SingularLocation {
  enum class Tag { Finite, Infinity, QuadraticPair } tag = Tag::Finite;
  Rational point;      // Tag::Finite
  Polynomial minpoly;  // Tag::QuadraticPair, monic quadratic

  static SingularLocation finite(Rational p);
  static SingularLocation infinity();
  static SingularLocation quadratic(Polynomial m);
  std::string to_string(char var = 'x') const;
};

enum class PointKind { Cusp, EllipticTwo, EllipticThree, OrdinaryDegenerate };

struct SingularPoint {
  SingularLocation location;
  std::pair<Rational, Rational> exponents;  // sorted ascending
  PointKind kind = PointKind::Cusp;
};

/// Gauss operator of 2F1(a,b;c;x) in monic form.
FuchsianOperator gauss_operator(const Rational& a, const Rational& b, const Rational& c);

/// Heun parameters (a, q; alpha, beta, gamma, delta) with
/// epsilon = alpha+beta+1-gamma-delta; q is the accessory parameter.
struct HeunParams {
  Rational a, q, alpha, beta, gamma, delta;
};
FuchsianOperator heun_operator(const HeunParams& p);

/// Characteristic exponents at a regular singular or ordinary point; throws
/// std::domain_error on an irregular point or irrational exponents.
std::pair<Rational, Rational> local_exponents(const FuchsianOperator& L,
                                              const SingularLocation& p);

/// The unique analytic solution with value 1 at 0, exact to `order` terms.
/// Requires a zero exponent at 0 whose partner is not a positive integer.
LaurentSeries frobenius_series(const FuchsianOperator& L, long order);

/// L applied to a series: u'' + A u' + B u (for residual checks).
LaurentSeries apply(const FuchsianOperator& L, const LaurentSeries& u);

/// Coefficient recurrence sum_r Q_r(n) c_{n+r} = 0 obtained by clearing the
/// operator to primitive polynomial form.  coeff[r - lo] multiplies c_{n+r}.
struct Recurrence {
  long lo = 0, hi = 0;
  std::vector<Polynomial> coeff;
  std::string to_string() const;
};
Recurrence extract_recurrence(const FuchsianOperator& L);
/// Runs the recurrence from c_0 = 1 (indices below 0 vanish).
LaurentSeries run_recurrence(const Recurrence& rec, long order);

/// Weak lifting along xi = xi_num/xi_den with prefactor xi_den^{-alpha}:
/// solutions are xi_den^{-alpha} * u(xi(.)) for solutions u of L.
FuchsianOperator weak_pullback(const FuchsianOperator& L, const Polynomial& xi_num,
                               const Polynomial& xi_den, const Rational& alpha);

/// Normal-form weak lifting of the degree-3 hypergeometric operator to
/// X_0(N) along j = P_N/Q_N, with prefactor P_N^{-1/12} (N = 2..7).
FuchsianOperator lifted_operator(int N);
/// Further lifting to X_0(N^2) along x_N = R(x_{N^2}) (N = 2..5).
FuchsianOperator chained_operator(int N);

/// Complete singular-point list of lifted_operator(N), classified and
/// cross-checked against the arithmetic of X_0(N).
std::vector<SingularPoint> exponent_survey(int N);

LaurentSeries gauss_series(const Rational& a, const Rational& b, const Rational& c,
                           long order);
LaurentSeries heun_series(const HeunParams& p, long order);

/// h_N against its closed form: 2F1 composed with the linear scaling
/// (-z/64, -z/27, -z/16) for N = 2,3,4.
IdentityReport verify_hN_closed_form(int N, long order);
/// h_6 against Hl(9/8, 3/4; 1,1,1,1; -z/8).
IdentityReport verify_h6_heun(long order);

}  // namespace qmod::fuchsian
