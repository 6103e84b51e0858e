#include <stdexcept>
#include "doctest.h"
#include "qmod/appendix_data.hpp"
#include "qmod/fuchsian.hpp"
#include "test_util.hpp"

using namespace qmod;
using namespace qmod::fuchsian;
using testutil::Rng;

namespace {

FuchsianOperator base_gauss() {
  return gauss_operator(Rational(1, 12), Rational(5, 12), Rational(1));
}

}  // namespace

TEST_CASE("local exponents of the base hypergeometric operator") {
  FuchsianOperator L = base_gauss();
  auto inf = local_exponents(L, SingularLocation::infinity());
  CHECK(inf.first == Rational(1, 12));
  CHECK(inf.second == Rational(5, 12));
  auto zero = local_exponents(L, SingularLocation::finite(Rational(0)));
  CHECK(zero == std::pair<Rational, Rational>{Rational(0), Rational(0)});
  auto one = local_exponents(L, SingularLocation::finite(Rational(1)));
  CHECK(one == std::pair<Rational, Rational>{Rational(0), Rational(1, 2)});
  // ordinary point
  auto ord = local_exponents(L, SingularLocation::finite(Rational(3)));
  CHECK(ord == std::pair<Rational, Rational>{Rational(0), Rational(1)});
}

TEST_CASE("local exponents at the quintic operator's points") {
  FuchsianOperator L = lifted_operator(5);
  auto zero = local_exponents(L, SingularLocation::finite(Rational(0)));
  CHECK(zero == std::pair<Rational, Rational>{Rational(0), Rational(0)});
  auto quad = local_exponents(
      L, SingularLocation::quadratic(Polynomial::parse("x^2+22*x+125")));
  CHECK(quad == std::pair<Rational, Rational>{Rational(0), Rational(1, 2)});
  auto inf = local_exponents(L, SingularLocation::infinity());
  CHECK(inf == std::pair<Rational, Rational>{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("frobenius series of the quintic operator (reference values)") {
  LaurentSeries h5 = frobenius_series(lifted_operator(5), 8);
  const long expected[] = {1, -10, 230, -6500, 199750, -6366060, 204990300};
  Rational scale(1);
  for (long i = 0; i < 7; ++i) {
    CHECK(h5.coeff(i) * scale == Rational(expected[i]));
    scale *= Rational(500);
  }
}

TEST_CASE("frobenius residual vanishes") {
  for (int N : {2, 3, 4, 5, 6, 7}) {
    FuchsianOperator L = lifted_operator(N);
    LaurentSeries u = frobenius_series(L, 16);
    LaurentSeries res = apply(L, u);
    CHECK(res.is_zero_to_order());
    CHECK(res.truncation_order() >= 14);
  }
}

TEST_CASE("irregular singularities are detected") {
  // A with a double pole at 0
  Polynomial x = Polynomial::variable();
  RationalFunction A(Polynomial(Rational(1)), x * x);
  FuchsianOperator L{A, RationalFunction()};
  CHECK_THROWS_AS(local_exponents(L, SingularLocation::finite(Rational(0))),
                  std::domain_error);
  CHECK_THROWS_AS(frobenius_series(L, 5), std::domain_error);
  // B with a triple pole
  RationalFunction B(Polynomial(Rational(1)), x * x * x);
  FuchsianOperator M{RationalFunction(), B};
  CHECK_THROWS_AS(local_exponents(M, SingularLocation::finite(Rational(0))),
                  std::domain_error);
}

TEST_CASE("frobenius rejects resonant and non-zero-exponent points") {
  // exponents (0, 2) at 0: resonant
  RationalFunction A(Polynomial(Rational(-1)), Polynomial::variable());
  FuchsianOperator res{A, RationalFunction()};
  CHECK_THROWS_AS(frobenius_series(res, 5), std::domain_error);
  // no zero exponent: B with double pole
  RationalFunction B(Polynomial(Rational(1)),
                     Polynomial::variable() * Polynomial::variable());
  FuchsianOperator nz{RationalFunction(), B};
  CHECK_THROWS_AS(frobenius_series(nz, 5), std::domain_error);
}

TEST_CASE("gauss series") {
  LaurentSeries g = gauss_series(Rational(1, 12), Rational(5, 12), Rational(1), 4);
  CHECK(g.coeff(0) == Rational(1));
  CHECK(g.coeff(1) == Rational(5, 144));

  // term ratio oracle for 2F1(1/4,1/4;1;w)
  LaurentSeries f = gauss_series(Rational(1, 4), Rational(1, 4), Rational(1), 6);
  Rational c(1);
  for (long n = 0; n < 6; ++n) {
    CHECK(f.coeff(n) == c);
    c = c * (Rational(1, 4) + Rational(n)) * (Rational(1, 4) + Rational(n)) /
        ((Rational(1) + Rational(n)) * Rational(n + 1));
  }
  CHECK(f.coeff(1) == Rational(1, 16));
  CHECK(f.coeff(2) == Rational(25, 1024));

  CHECK(gauss_series(Rational(1, 2), Rational(1, 2), Rational(1), 3).coeff(0) ==
        Rational(1));
  CHECK_THROWS_AS(gauss_series(Rational(1), Rational(1), Rational(0), 3),
                  std::domain_error);
}

TEST_CASE("extract_recurrence reproduces the reference three-term recurrences") {
  auto rec5 = extract_recurrence(lifted_operator(5));
  REQUIRE(rec5.coeff.size() == 3);
  CHECK(rec5.lo == -1);
  CHECK(rec5.coeff[0] == Polynomial::parse("4*n^2-4*n+1"));
  CHECK(rec5.coeff[1] == Polynomial::parse("88*n^2+44*n+10"));
  CHECK(rec5.coeff[2] == Polynomial::parse("500*n^2+1000*n+500"));

  auto rec6 = extract_recurrence(lifted_operator(6));
  CHECK(rec6.coeff[0] == Polynomial::parse("n^2"));
  CHECK(rec6.coeff[1] == Polynomial::parse("17*n^2+17*n+6"));
  CHECK(rec6.coeff[2] == Polynomial::parse("72*n^2+144*n+72"));

  auto rec7 = extract_recurrence(lifted_operator(7));
  CHECK(rec7.coeff[0] == Polynomial::parse("9*n^2-6*n+1"));
  CHECK(rec7.coeff[1] == Polynomial::parse("117*n^2+78*n+21"));
  CHECK(rec7.coeff[2] == Polynomial::parse("441*n^2+882*n+441"));
}

TEST_CASE("recurrence and frobenius agree") {
  for (int N : {2, 3, 4, 5, 6, 7}) {
    FuchsianOperator L = lifted_operator(N);
    LaurentSeries a = run_recurrence(extract_recurrence(L), 30);
    LaurentSeries b = frobenius_series(L, 30);
    CHECK(!first_mismatch(a, b, 30).has_value());
  }
}

TEST_CASE("weak_pullback along the identity with alpha 0 is the identity") {
  FuchsianOperator L = lifted_operator(3);
  FuchsianOperator M = weak_pullback(L, Polynomial::variable(),
                                     Polynomial(Rational(1)), Rational(0));
  CHECK(M == L);
}

TEST_CASE("pullback of the base operator is the explicit level-2 operator") {
  FuchsianOperator L2 = lifted_operator(2);
  Polynomial z = Polynomial::variable();
  RationalFunction A = RationalFunction(Polynomial(Rational(1)), z) +
                       RationalFunction(Polynomial(Rational(1)),
                                        Polynomial::parse("x+64") * Rational(2));
  RationalFunction B(Polynomial(Rational(1)),
                     z * Polynomial::parse("x+64") * Rational(16));
  CHECK(L2.A == A);
  CHECK(L2.B == B);
}

TEST_CASE("exponent surveys match the known singular data") {
  auto s2 = exponent_survey(2);
  REQUIRE(s2.size() == 3);
  CHECK(s2[0].location.tag == SingularLocation::Tag::Infinity);
  CHECK(s2[0].exponents == std::pair<Rational, Rational>{Rational(1, 4), Rational(1, 4)});
  bool saw_minus64 = false;
  for (const auto& sp : s2)
    if (sp.location.tag == SingularLocation::Tag::Finite &&
        sp.location.point == Rational(-64)) {
      saw_minus64 = true;
      CHECK(sp.kind == PointKind::EllipticTwo);
    }
  CHECK(saw_minus64);

  auto s6 = exponent_survey(6);
  REQUIRE(s6.size() == 4);
  CHECK(s6[0].exponents == std::pair<Rational, Rational>{Rational(1), Rational(1)});
  for (std::size_t i = 1; i < 4; ++i) CHECK(s6[i].kind == PointKind::Cusp);

  auto s7 = exponent_survey(7);
  bool saw_quad = false;
  for (const auto& sp : s7)
    if (sp.location.tag == SingularLocation::Tag::QuadraticPair) {
      saw_quad = true;
      CHECK(sp.location.minpoly == Polynomial::parse("x^2+13*x+49"));
      CHECK(sp.kind == PointKind::EllipticThree);
    }
  CHECK(saw_quad);

  for (int N = 2; N <= 7; ++N) CHECK_NOTHROW(exponent_survey(N));
}

TEST_CASE("pullback multiplies exponents by the ramification index") {
  // xi = x^3 ramifies with index 3 at 0 and at infinity; without a
  // prefactor the lifted exponents are 3 times the originals.
  FuchsianOperator L = base_gauss();
  FuchsianOperator M = weak_pullback(L, Polynomial::variable().pow(3),
                                     Polynomial(Rational(1)), Rational(0));
  auto zero = local_exponents(M, SingularLocation::finite(Rational(0)));
  CHECK(zero == std::pair<Rational, Rational>{Rational(0), Rational(0)});
  auto inf = local_exponents(M, SingularLocation::infinity());
  CHECK(inf == std::pair<Rational, Rational>{Rational(1, 4), Rational(5, 4)});
  // and the prefactor shifts them by alpha at each denominator root:
  // xi = x^3/(x-1)^3 sends x=1 to infinity with index 3; the weak lifting
  // with prefactor (x-1)^{-3 alpha}, alpha = 1/12, shifts (1/4, 5/4) down
  // to (0, 1).
  FuchsianOperator W = weak_pullback(L, Polynomial::variable().pow(3),
                                     Polynomial::parse("x-1").pow(3), Rational(1, 12));
  auto shifted = local_exponents(W, SingularLocation::finite(Rational(1)));
  CHECK(shifted == std::pair<Rational, Rational>{Rational(0), Rational(1)});
}

TEST_CASE("h2, h3, h4 closed forms and the h6 Heun form") {
  for (int N : {2, 3, 4}) {
    auto r = verify_hN_closed_form(N, 30);
    CHECK(r.passed);
  }
  auto r6 = verify_h6_heun(30);
  CHECK(r6.passed);
}

TEST_CASE("heun series solves the heun operator") {
  HeunParams p{Rational(9, 8), Rational(3, 4), Rational(1), Rational(1), Rational(1),
               Rational(1)};
  LaurentSeries s = heun_series(p, 12);
  CHECK(s.coeff(0) == Rational(1));
  LaurentSeries res = apply(heun_operator(p), s);
  CHECK(res.is_zero_to_order());
  HeunParams bad = p;
  bad.gamma = Rational(0);
  CHECK_THROWS_AS(heun_series(bad, 5), std::domain_error);
}
