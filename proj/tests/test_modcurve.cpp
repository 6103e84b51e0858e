#include <stdexcept>
#include <numeric>

#include "doctest.h"
#include "qmod/modcurve.hpp"
#include "test_util.hpp"

using namespace qmod;
using namespace qmod::modcurve;
using testutil::Rng;

TEST_CASE("arithmetic profiles") {
  auto p1 = arithmetic_profile(1);
  CHECK(p1.psi == 1);
  CHECK(p1.genus == 0);

  auto p6 = arithmetic_profile(6);
  CHECK(p6.psi == 12);
  CHECK(p6.sigma_infty == 4);
  CHECK(p6.eps_rho == 0);
  CHECK(p6.eps_i == 0);
  CHECK(p6.genus == 0);

  auto p36 = arithmetic_profile(36);
  CHECK(p36.psi == 72);
  CHECK(p36.sigma_infty == 12);
  CHECK(p36.genus == 1);

  auto p49 = arithmetic_profile(49);
  CHECK(p49.genus == 1);

  auto p5 = arithmetic_profile(5);
  CHECK(p5.eps_i == 2);
  auto p7 = arithmetic_profile(7);
  CHECK(p7.eps_rho == 2);
}

TEST_CASE("genus-zero levels and singular point counts") {
  std::vector<long> expect = {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25};
  CHECK(genus_zero_levels(25) == expect);
  CHECK(genus_zero_levels(100) == expect);
  CHECK(genus_zero_levels(7) == std::vector<long>{2, 3, 4, 5, 6, 7});

  std::vector<long> m;
  for (long N : expect) m.push_back(singular_point_count(N));
  CHECK(m == std::vector<long>{3, 3, 3, 4, 4, 4, 4, 4, 6, 6, 6, 6, 8, 8});
}

TEST_CASE("cusp tables") {
  auto c6 = cusp_table(6);
  REQUIRE(c6.size() == 4);
  std::vector<long> widths;
  for (const auto& c : c6) widths.push_back(c.width);
  CHECK(widths == std::vector<long>{6, 3, 2, 1});

  auto c7 = cusp_table(7);
  REQUIRE(c7.size() == 2);
  CHECK(c7[0].d == 1);
  CHECK(c7[0].width == 7);
  CHECK(c7[1].d == 7);
  CHECK(c7[1].width == 1);

  auto c36 = cusp_table(36);
  CHECK(c36.size() == 12);
  long rational = 0;
  for (const auto& c : c36) rational += c.is_rational ? 1 : 0;
  CHECK(rational == 6);
}

TEST_CASE("cusp widths sum to the index for N <= 200") {
  for (long N = 1; N <= 200; ++N) {
    long total = 0;
    for (const auto& c : cusp_table(N)) total += c.width;
    CHECK(total == arithmetic_profile(N).psi);
  }
}

TEST_CASE("cusp canonicalization is Gamma_0(N)-invariant (randomized)") {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const long N = rng.range(2, 40);
    // random primitive cusp vector
    long p = rng.range(-30, 30), q = rng.range(0, 30);
    if (p == 0 && q == 0) continue;
    const long g = std::gcd(std::abs(p), std::abs(q));
    p /= g;
    q /= g;
    // random element of Gamma_0(N): bottom-left divisible by N
    long c = N * rng.range(-3, 3);
    long d = 1;
    if (c != 0) {
      d = rng.range(-15, 15);
      while (std::gcd(std::abs(c), std::abs(d)) != 1) ++d;
    }
    // complete (c d) to a unimodular matrix: a*d - b*c = 1
    long a = 0, b = 0;
    {
      long x = 0, y = 1, r = d, nr = c;
      // extended euclid on (d, c)
      long s = 1, t = 0;
      while (nr != 0) {
        long qu = r / nr;
        long tmp = r - qu * nr; r = nr; nr = tmp;
        tmp = s - qu * x; s = x; x = tmp;
        tmp = t - qu * y; t = y; y = tmp;
      }
      // r = gcd = ±1 = s*d + t*c
      a = s * r;  // a*d + (t*r)*c = 1 => b = -t*r
      b = -t * r;
    }
    REQUIRE(a * d - b * c == 1);
    const long p2 = a * p + b * q;
    const long q2 = c * p + d * q;
    Cusp lhs = canonicalize_cusp(p, q, N);
    Cusp rhs = canonicalize_cusp(p2, q2, N);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("distinct representatives stay distinct under canonicalization") {
  for (long N : {4L, 6L, 7L, 12L, 36L, 49L}) {
    auto cusps = cusp_table(N);
    for (const auto& c : cusps) {
      Cusp again = canonicalize_cusp(c.a, c.d, N);
      CHECK(again == c);
    }
    for (std::size_t i = 0; i < cusps.size(); ++i)
      for (std::size_t j = i + 1; j < cusps.size(); ++j)
        CHECK(!(cusps[i] == cusps[j]));
  }
}

TEST_CASE("distinguished cusp liftings (known cases)") {
  // phi: [1/1]_N lifts to N*[1/1]_{N^2}
  for (long N = 2; N <= 7; ++N) {
    auto s = lift_distinguished(N, LiftMap::Phi, true);
    REQUIRE(s.terms.size() == 1);
    CHECK(s.terms[0].first.d == 1);
    CHECK(s.terms[0].second == N);
  }
  // phi' mirrors it on [1/N]/N -> N*[1/N^2]
  for (long N = 2; N <= 7; ++N) {
    auto s = lift_distinguished(N, LiftMap::PhiPrime, false);
    REQUIRE(s.terms.size() == 1);
    CHECK(s.terms[0].first.d == N * N);
    CHECK(s.terms[0].second == N);
  }
  // phi^{-1}([1/2]_2) = [1/2]_4 + [1/4]_4
  auto s2 = lift_distinguished(2, LiftMap::Phi, false);
  REQUIRE(s2.terms.size() == 2);
  CHECK(s2.terms[0].first.d == 2);
  CHECK(s2.terms[1].first.d == 4);
  CHECK(s2.terms[0].second == 1);
  CHECK(s2.terms[1].second == 1);
  // totals equal the covering degree
  for (long N = 2; N <= 7; ++N)
    for (auto map : {LiftMap::Phi, LiftMap::PhiPrime})
      for (bool zero : {true, false})
        CHECK(lift_distinguished(N, map, zero).total() == N);
}

TEST_CASE("every cusp class lifts with total multiplicity N under both maps") {
  // Degree bookkeeping for the covers: preimages of *all* classes, not just
  // the distinguished ones, must account for the N sheets.
  for (long N = 2; N <= 12; ++N) {
    long phi_cusps = 0, phip_cusps = 0;
    for (const auto& base : cusp_table(N)) {
      auto up = lift_cusp(N, LiftMap::Phi, base);
      CHECK(up.total() == N);
      phi_cusps += static_cast<long>(up.terms.size());
      auto up2 = lift_cusp(N, LiftMap::PhiPrime, base);
      CHECK(up2.total() == N);
      phip_cusps += static_cast<long>(up2.terms.size());
    }
    // the fibres partition the cusps of X_0(N^2)
    const long all = arithmetic_profile(N * N).sigma_infty;
    CHECK(phi_cusps == all);
    CHECK(phip_cusps == all);
  }
}

TEST_CASE("cusp fibres (known cases and totals)") {
  auto f = cusp_fibre(6, 2);
  REQUIRE(f.points.size() == 2);
  for (const auto& [c, m] : f.points) CHECK(m == 3);
  CHECK(f.total() == 6);

  auto f7 = cusp_fibre(7, 7);
  CHECK(f7.points.size() == 7);
  CHECK(f7.total() == 7);

  for (long N = 2; N <= 7; ++N) {
    auto f1 = cusp_fibre(N, 1);
    CHECK(f1.points.size() == 1);
    CHECK(f1.points[0].second == N);
    for (long d = 1; d <= N; ++d)
      if (N % d == 0) CHECK(cusp_fibre(N, d).total() == N);
  }
}

TEST_CASE("class numbers by form enumeration") {
  CHECK(class_number(-3) == 1);
  CHECK(class_number(-4) == 1);
  CHECK(class_number(-7) == 1);
  CHECK(class_number(-20) == 2);
  CHECK(class_number(-23) == 3);
  CHECK(class_number(-28) == 1);
  CHECK(class_number(-144) == 4);
  CHECK(class_number(-196) == 4);
  CHECK_THROWS_AS(class_number(-5), std::domain_error);
  CHECK_THROWS_AS(class_number(4), std::domain_error);

  // independent oracle: raw enumeration over all (a,b,c) in range
  auto oracle = [](long D) {
    long count = 0;
    for (long aa = 1; aa * aa <= -D; ++aa)
      for (long bb = -aa; bb <= aa; ++bb)
        for (long cc = aa; 4 * aa * cc <= aa * aa - D; ++cc) {
          if (bb * bb - 4 * aa * cc != D) continue;
          if (!(std::abs(bb) <= aa && aa <= cc)) continue;
          if (bb < 0 && (std::abs(bb) == aa || aa == cc)) continue;
          if (std::gcd(std::gcd(aa, std::abs(bb)), cc) != 1) continue;
          ++count;
        }
    return count;
  };
  for (long D : {-3, -4, -8, -11, -15, -20, -24, -47, -71, -144, -163, -196})
    CHECK(class_number(D) == oracle(D));
}

TEST_CASE("Fricke fixed points and the plus-quotient genus") {
  auto f36 = fricke_genus_plus(36);
  CHECK(f36.fixed_points == 4);
  CHECK(f36.genus_plus == 0);
  CHECK(f36.readings_agree);

  auto f49 = fricke_genus_plus(49);
  CHECK(f49.fixed_points == 4);
  CHECK(f49.genus_plus == 0);

  auto f5 = fricke_genus_plus(5);
  CHECK(f5.fixed_points == 2);
  CHECK(f5.genus_plus == 0);

  // N = 7: the two readings differ and integrality arbitrates
  auto f7 = fricke_genus_plus(7);
  CHECK(!f7.readings_agree);
  CHECK(f7.fixed_points == 2);
  CHECK(f7.genus_plus == 0);
  CHECK(!f7.note.empty());
}
