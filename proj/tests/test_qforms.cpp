#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qmod/appendix_data.hpp"
#include "qmod/qforms.hpp"

using namespace qmod;
using namespace qmod::qforms;

namespace {

// Independent oracle for prod_{n>=1} (1 - q^{kn})^e with integer e, by plain
// binomial convolution on raw coefficient vectors.
std::vector<Rational> eta_power_oracle(long k, long e, long order) {
  std::vector<Rational> acc(static_cast<std::size_t>(order));
  acc[0] = Rational(1);
  for (long m = k; m < order; m += k) {
    // (1 - q^m)^e = sum_j C(e, j) (-1)^j q^{mj}
    std::vector<Rational> factor(static_cast<std::size_t>(order));
    Rational binom(1);
    for (long j = 0; m * j < order; ++j) {
      factor[static_cast<std::size_t>(m * j)] = binom * (j % 2 ? Rational(-1) : Rational(1));
      binom = binom * (Rational(e) - Rational(j)) / Rational(j + 1);
    }
    std::vector<Rational> next(static_cast<std::size_t>(order));
    for (long i = 0; i < order; ++i) {
      if (acc[static_cast<std::size_t>(i)].is_zero()) continue;
      for (long j = 0; i + j < order; ++j) {
        if (factor[static_cast<std::size_t>(j)].is_zero()) continue;
        next[static_cast<std::size_t>(i + j)] +=
            acc[static_cast<std::size_t>(i)] * factor[static_cast<std::size_t>(j)];
      }
    }
    acc = std::move(next);
  }
  return acc;
}

long pentagonal(long k) { return k * (3 * k - 1) / 2; }

}  // namespace

TEST_CASE("eta unit against the pentagonal-number oracle") {
  const long n = 60;
  LaurentSeries e1 = eta_unit(1, n);
  std::vector<Rational> expect(static_cast<std::size_t>(n));
  for (long k = -7; k <= 7; ++k) {
    const long p = pentagonal(k);
    if (p >= 0 && p < n)
      expect[static_cast<std::size_t>(p)] = (k % 2 == 0) ? Rational(1) : Rational(-1);
  }
  for (long i = 0; i < n; ++i) CHECK(e1.coeff(i) == expect[static_cast<std::size_t>(i)]);

  // k = 36 below order 20 is trivial
  LaurentSeries e36 = eta_unit(36, 20);
  CHECK(!first_mismatch(e36, LaurentSeries::one(20), 20).has_value());

  // k = 2 is k = 1 with q -> q^2
  LaurentSeries e2 = eta_unit(2, 40);
  for (long i = 0; i < 40; ++i)
    CHECK(e2.coeff(i) == (i % 2 ? Rational(0) : e1.coeff(i / 2)));
}

TEST_CASE("eta products against the binomial-convolution oracle") {
  const long n = 25;
  // x2 unit = 4096 * [2]^24 / [1]^24
  QExpansion x2 = hauptmodul_qexp("x2", n);
  CHECK(x2.q_exponent() == Rational(1));
  auto a = eta_power_oracle(2, 24, n);
  auto b = eta_power_oracle(1, -24, n);
  for (long i = 0; i < 12; ++i) {
    Rational expect;
    for (long j = 0; j <= i; ++j)
      expect += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i - j)];
    CHECK(x2.unit().coeff(i) == expect * Rational(4096));
  }
  CHECK(x2.unit().coeff(0) == Rational(4096));
  CHECK(x2.unit().coeff(1) == Rational(4096) * Rational(24));

  // x5 = 125 q (1 + 6q + 27q^2 + ...)
  QExpansion x5 = hauptmodul_qexp("x5", n);
  CHECK(x5.q_exponent() == Rational(1));
  CHECK(x5.unit().coeff(0) == Rational(125));
  CHECK(x5.unit().coeff(1) == Rational(125) * Rational(6));
  CHECK(x5.unit().coeff(2) == Rational(125) * Rational(27));

  // x6 = 72 q (1 + 5q + ...)
  QExpansion x6 = hauptmodul_qexp("x6", n);
  CHECK(x6.unit().coeff(0) == Rational(72));
  CHECK(x6.unit().coeff(1) == Rational(72) * Rational(5));

  // h2 = [1]^4/[2]^2 = 1 - 4q + 4q^2 + ...
  QExpansion h2 = eta_product_qexp(data::weight1_form_eta(2), n);
  CHECK(h2.q_exponent() == Rational(0));
  CHECK(h2.unit().coeff(0) == Rational(1));
  CHECK(h2.unit().coeff(1) == Rational(-4));
  CHECK(h2.unit().coeff(2) == Rational(4));

  // h5 exercises the rational-exponent path
  QExpansion h5 = eta_product_qexp(data::weight1_form_eta(5), n);
  CHECK(h5.q_exponent() == Rational(0));
  CHECK(h5.unit().coeff(0) == Rational(1));
}

TEST_CASE("every Hauptmodul has q-exponent matching its divisor and integral unit") {
  for (const auto& rec : data::hauptmoduln()) {
    QExpansion q = hauptmodul_qexp(rec.name, 30);
    if (rec.name == "t36") {
      CHECK(q.q_exponent() == Rational(-1));
      continue;
    }
    CHECK(q.q_exponent() == Rational(1));
    CHECK(q.unit().coeff(0) == rec.kappa);
    // integral coefficients after dividing by the leading constant
    LaurentSeries norm = q.unit() * rec.kappa.inverse();
    for (long i = 0; i < 30; ++i) CHECK(norm.coeff(i).is_integer());
  }
}

TEST_CASE("hauptmodul data invariants: degrees and normalizations") {
  for (int N = 2; N <= 7; ++N) {
    const auto& rec = data::hauptmodul_for_level(N);
    REQUIRE(rec.has_covering);
    const long psi = [&] {
      long r = N;
      for (long p = 2; p <= N; ++p)
        if (N % p == 0) {
          bool prime = true;
          for (long q = 2; q * q <= p; ++q) prime = prime && (p % q != 0);
          if (prime) r = r / p * (p + 1);
        }
      return r;
    }();
    CHECK(rec.P.degree() == psi);
    CHECK(rec.P.degree() - rec.Q.degree() == N);
    CHECK(rec.P.is_monic());
    CHECK(rec.Q.is_monic());
    CHECK(rec.Q.coeff(0).is_zero());  // x | Q
  }
}

TEST_CASE("unknown hauptmodul name is rejected") {
  CHECK_THROWS_AS(hauptmodul_qexp("x11", 10), std::domain_error);
}

TEST_CASE("j-invariant against the Eisenstein/discriminant oracle") {
  const long n = 30;
  LaurentSeries j = j_qexp(n);
  CHECK(j.valuation() == -1);
  CHECK(j.coeff(-1) == Rational(1));
  CHECK(j.coeff(0) == Rational(744));
  CHECK(j.coeff(1) == Rational(196884));

  // E4^3 / Delta with E4 = 1 + 240 sum sigma_3(m) q^m, Delta = q prod(1-q^m)^24
  std::vector<Rational> e4(static_cast<std::size_t>(n + 2));
  e4[0] = Rational(1);
  for (long m = 1; m < n + 2; ++m) {
    long s3 = 0;
    for (long d = 1; d <= m; ++d)
      if (m % d == 0) s3 += d * d * d;
    e4[static_cast<std::size_t>(m)] = Rational(240) * Rational(s3);
  }
  LaurentSeries E4 = LaurentSeries::from_coeffs(std::move(e4), 0, n + 2);
  LaurentSeries delta = series_pow_int(eta_unit(1, n + 2), 24).shifted(1);
  LaurentSeries oracle = series_div(E4 * E4 * E4, delta);
  CHECK(!first_mismatch(j, oracle, n).has_value());
}

TEST_CASE("coverings verify at order 40") {
  for (int N = 2; N <= 7; ++N) {
    auto r = verify_covering(N, 40);
    CHECK(r.passed);
    CHECK(r.order_checked == 40);
  }
}

TEST_CASE("registered eta identities verify at order 40") {
  for (const auto& id : eta_identity_ids()) {
    auto r = verify_eta_identity(id, 40);
    CHECK_MESSAGE(r.passed, id);
  }
  CHECK_THROWS_AS(verify_eta_identity("nope", 10), std::domain_error);
}

TEST_CASE("weight-1 forms equal their eta products (Table rows + eta^2 form)") {
  for (int N = 2; N <= 7; ++N) {
    auto r = verify_form_equals_eta(N, 30);
    CHECK_MESSAGE(r.passed, "N=" << N);
  }
}

TEST_CASE("h4 and h2 give the same modular form") {
  CHECK(verify_h4_equals_h2(30).passed);
}

TEST_CASE("rationalized Dedekind identity") {
  // left side starts 1 - 2q - q^2
  LaurentSeries lhs = series_pow_int(eta_unit(1, 10), 2);
  CHECK(lhs.coeff(0) == Rational(1));
  CHECK(lhs.coeff(1) == Rational(-2));
  CHECK(lhs.coeff(2) == Rational(-1));
  CHECK(verify_dedekind_stiller(30).passed);
}

TEST_CASE("j at doubled argument: j(2tau) = (x2+256)^3/x2^2") {
  const long n = 26;
  LaurentSeries j = j_qexp(n);
  // substitute q -> q^2
  LaurentSeries j2 = series_compose(j.shifted(1),
                                    LaurentSeries::monomial(Rational(1), 2, 2 * n))
                         .shifted(-2);
  LaurentSeries x2 = hauptmodul_qexp("x2", 2 * n).to_laurent();
  LaurentSeries rhs = series_div(
      poly_at_series(Polynomial::parse("x+256").pow(3), x2), x2 * x2);
  CHECK(!first_mismatch(j2, rhs, n).has_value());
}

TEST_CASE("conjugate Hauptmoduln as q-series: x_N(N tau) = x^N / S'(x)") {
  // the rational expressions for x_N' evaluated on x_{N^2}(q) must equal
  // the x_N series with q replaced by q^N
  struct Case {
    int N;
    const char* upper;
    const char* sprime;
  };
  const Case cases[] = {{2, "x4", "x+16"},
                        {3, "x9", "x^2+9*x+27"},
                        {4, "x16", "x^3+6*x^2+16*x+16"},
                        {5, "x25", "x^4+5*x^3+15*x^2+25*x+25"}};
  const long n = 30;
  for (const auto& cs : cases) {
    LaurentSeries upper = hauptmodul_qexp(cs.upper, n).to_laurent();
    LaurentSeries lhs = series_div(
        series_pow_int(upper, cs.N),
        poly_at_series(Polynomial::parse(cs.sprime), upper));
    LaurentSeries base =
        hauptmodul_qexp(data::hauptmodul_for_level(cs.N).name, n).to_laurent();
    LaurentSeries rhs =
        series_compose(base, LaurentSeries::monomial(Rational(1), cs.N, n));
    long upto = std::min(lhs.truncation_order(), rhs.truncation_order());
    CHECK_MESSAGE(!first_mismatch(lhs, rhs, upto).has_value(), cs.upper);
    CHECK(upto >= n - 2);
  }
}

TEST_CASE("conjugates behind the degree-(2,3) extensions, as q-series") {
  const long n = 30;
  // x2(3 tau) = x^3 (x+8) / (x+9)^3 with x = x6(q)
  {
    LaurentSeries x6 = hauptmodul_qexp("x6", n).to_laurent();
    LaurentSeries lhs = series_div(
        series_pow_int(x6, 3) * poly_at_series(Polynomial::parse("x+8"), x6),
        poly_at_series(Polynomial::parse("x+9").pow(3), x6));
    LaurentSeries x2 = hauptmodul_qexp("x2", n).to_laurent();
    LaurentSeries rhs = series_compose(x2, LaurentSeries::monomial(Rational(1), 3, n));
    long upto = std::min(lhs.truncation_order(), rhs.truncation_order());
    CHECK(!first_mismatch(lhs, rhs, upto).has_value());
  }
  // x5(2 tau) = x^2 (x+5) / (x+4)^2 with x = x10(q)
  {
    LaurentSeries x10 = hauptmodul_qexp("x10", n).to_laurent();
    LaurentSeries lhs = series_div(
        series_pow_int(x10, 2) * poly_at_series(Polynomial::parse("x+5"), x10),
        poly_at_series(Polynomial::parse("x+4").pow(2), x10));
    LaurentSeries x5 = hauptmodul_qexp("x5", n).to_laurent();
    LaurentSeries rhs = series_compose(x5, LaurentSeries::monomial(Rational(1), 2, n));
    long upto = std::min(lhs.truncation_order(), rhs.truncation_order());
    CHECK(!first_mismatch(lhs, rhs, upto).has_value());
  }
  // the Moebius-transformed Hauptmodul x6/(x6+8) = 9 [1]^4[6]^8 / [2]^8[3]^4
  {
    LaurentSeries x6 = hauptmodul_qexp("x6", n).to_laurent();
    LaurentSeries lhs = series_div(x6, x6 + Rational(8));
    EtaProduct p;
    p.constant = Rational(9);
    p.factors = {{1, 4}, {2, -8}, {3, -4}, {6, 8}};
    QExpansion rhs = eta_product_qexp(p, n);
    CHECK(rhs.q_exponent() == Rational(1));
    long upto = std::min(lhs.truncation_order() - 1, n - 1);
    CHECK(!qexp_first_mismatch(QExpansion::from_laurent(lhs), rhs, upto).has_value());
  }
}

TEST_CASE("level-36 quartic consistency in q") {
  // P36(t36(q)) must be an even-valuation series with square leading
  // coefficient, so the hyperelliptic s36 exists as a q-series.
  const long n = 40;
  LaurentSeries t36 = hauptmodul_qexp("t36", n).to_laurent();
  LaurentSeries quartic = poly_at_series(data::sum_product(6).curve_quartic, t36);
  CHECK(quartic.valuation() % 2 == 0);
  CHECK_NOTHROW(laurent_sqrt(quartic));
}

TEST_CASE("expansions are deterministic") {
  auto a = hauptmodul_qexp("x6", 25);
  auto b = hauptmodul_qexp("x6", 25);
  CHECK(a.q_exponent() == b.q_exponent());
  CHECK(!first_mismatch(a.unit(), b.unit(), 25).has_value());
  CHECK(!first_mismatch(j_qexp(20), j_qexp(20), 19).has_value());
}

TEST_CASE("qexp_object handles the CLI-facing names") {
  CHECK(qexp_object("eta:2", 10).q_exponent() == Rational(1, 12));
  CHECK(qexp_object("x2", 10).q_exponent() == Rational(1));
  CHECK(qexp_object("j", 10).q_exponent() == Rational(-1));
  CHECK(qexp_object("h5", 10).q_exponent() == Rational(0));
  CHECK_THROWS(qexp_object("bogus", 10));
}
