// Acceptance suite: runs each shipping criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion.  Exit status is nonzero when any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "qmod/appendix_data.hpp"
#include "qmod/fuchsian.hpp"
#include "qmod/identities.hpp"
#include "qmod/modcurve.hpp"
#include "qmod/qforms.hpp"

using namespace qmod;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const char* name, bool ok, const std::string& detail = "") {
  std::printf("%s %s%s%s\n", ok ? "PASS" : "FAIL", name, detail.empty() ? "" : ": ",
              detail.c_str());
  if (!ok) ++failures;
}

template <typename F>
void criterion(const char* name, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(name, false, e.what());
  }
}

bool expect(bool cond, std::string* why, const std::string& msg) {
  if (!cond && why->empty()) *why = msg;
  return cond;
}

// ---------------------------------------------------------------------------

void criterion1_sequences() {
  std::string why;
  bool ok = true;
  auto t0 = Clock::now();

  auto d5 = identities::coefficient_sequence(5, 8);
  auto d6 = identities::coefficient_sequence(6, 8);
  auto d7 = identities::coefficient_sequence(7, 8);
  const std::vector<long> e5 = {1, -10, 230, -6500, 199750, -6366060, 204990300,
                                -6539387400};
  const std::vector<long> e6 = {1, -6, 42, -312, 2394, -18756, 149136, -1199232};
  for (int i = 0; i < 8; ++i) {
    ok &= expect(d5[i] == Rational(e5[i]), &why, "d5[" + std::to_string(i) + "]");
    ok &= expect(d6[i] == Rational(e6[i]), &why, "d6[" + std::to_string(i) + "]");
  }
  // N = 7: first six pinned; the reference 7th and 8th are compared and
  // any discrepancy is reported without failing the criterion.
  const auto& p7 = identities::reference_sequence(7);
  for (int i = 0; i < 6; ++i)
    ok &= expect(d7[i] == Rational(p7[i]), &why, "d7[" + std::to_string(i) + "]");
  std::string note;
  for (int i = 6; i < 8; ++i) {
    if (d7[i] != Rational(p7[i]))
      note += " d7[" + std::to_string(i) + "] recurrence=" + d7[i].to_string() +
              " reference=" + Rational(p7[i]).to_string();
  }
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  ok &= expect(ms < 1000.0, &why, "runtime " + std::to_string(ms) + " ms");
  report("criterion-1 integral sequences", ok,
         why.empty() ? (note.empty() ? "reference N=7 values confirmed by recurrence"
                                     : "discrepancy:" + note)
                     : why);
}

void criterion2_functional_equations() {
  std::string why;
  bool ok = true;
  auto t0 = Clock::now();
  auto reports = identities::run_full_suite(40);
  double sec = std::chrono::duration<double>(Clock::now() - t0).count();
  // the named identities of the criterion, all inside the full suite
  const std::vector<std::string> must = {
      "quadratic",  "cubic",       "quartic", "quintic", "agm_quadratic",
      "agm_cubic",  "agm_quartic", "sextic",  "septic",  "ext_n2m3",
      "ext_sig4_modular", "ext_n5m2"};
  for (const auto& name : must) {
    bool found = false;
    for (const auto& r : reports)
      if (r.name == name) {
        found = true;
        ok &= expect(r.passed, &why, name + " failed");
      }
    ok &= expect(found, &why, name + " missing from registry");
  }
  for (const auto& r : reports) ok &= expect(r.passed, &why, r.name + " failed");
  ok &= expect(sec < 60.0, &why, "verify --all took " + std::to_string(sec) + " s");
  report("criterion-2 functional equations (order 40)", ok,
         why.empty() ? std::to_string(reports.size()) + " reports in " +
                           std::to_string(sec) + " s"
                     : why);
}

void criterion3_operators() {
  std::string why;
  bool ok = true;
  for (const char* name : {"operator_h2", "operator_h5", "operator_h6",
                           "operator_h7", "operator_h5_two_routes"})
    ok &= expect(identities::run_identity(name, 1).passed, &why, std::string(name));
  report("criterion-3 operator reconstruction", ok, why);
}

void criterion4_recurrences() {
  std::string why;
  bool ok = true;
  for (const char* name : {"recurrence_h5", "recurrence_h6", "recurrence_h7"})
    ok &= expect(identities::run_identity(name, 1).passed, &why, std::string(name));
  for (int N : {5, 6, 7}) {
    auto L = fuchsian::lifted_operator(N);
    auto a = fuchsian::run_recurrence(fuchsian::extract_recurrence(L), 61);
    auto b = fuchsian::frobenius_series(L, 61);
    ok &= expect(!first_mismatch(a, b, 61).has_value(), &why,
                 "recurrence vs frobenius N=" + std::to_string(N));
  }
  report("criterion-4 recurrences to index 60", ok, why);
}

void criterion5_q_expansions() {
  std::string why;
  bool ok = true;
  for (int N = 2; N <= 7; ++N)
    ok &= expect(qforms::verify_covering(N, 40).passed, &why,
                 "covering_" + std::to_string(N));

  LaurentSeries j = qforms::j_qexp(4);
  ok &= expect(j.coeff(-1) == Rational(1), &why, "j q^-1");
  ok &= expect(j.coeff(0) == Rational(744), &why, "j q^0");
  ok &= expect(j.coeff(1) == Rational(196884), &why, "j q^1");
  {
    // independent oracle: E4^3 / Delta
    const long n = 8;
    std::vector<Rational> e4(static_cast<std::size_t>(n));
    e4[0] = Rational(1);
    for (long m = 1; m < n; ++m) {
      long s3 = 0;
      for (long d = 1; d <= m; ++d)
        if (m % d == 0) s3 += d * d * d;
      e4[static_cast<std::size_t>(m)] = Rational(240 * s3);
    }
    LaurentSeries E4 = LaurentSeries::from_coeffs(std::move(e4), 0, n);
    LaurentSeries delta = series_pow_int(qforms::eta_unit(1, n), 24).shifted(1);
    LaurentSeries oracle = series_div(E4 * E4 * E4, delta);
    ok &= expect(!first_mismatch(qforms::j_qexp(5), oracle, 4).has_value(), &why,
                 "j vs E4^3/Delta");
  }

  for (int N = 2; N <= 7; ++N)
    ok &= expect(qforms::verify_form_equals_eta(N, 40).passed, &why,
                 "form_eta_" + std::to_string(N));
  ok &= expect(qforms::verify_dedekind_stiller(40).passed, &why, "dedekind_stiller");
  for (const auto& id : qforms::eta_identity_ids())
    ok &= expect(qforms::verify_eta_identity(id, 40).passed, &why, id);
  ok &= expect(qforms::verify_h4_equals_h2(40).passed, &why, "h4_equals_h2");
  report("criterion-5 q-expansion consistency (order 40)", ok, why);
}

void criterion6_combinatorics() {
  std::string why;
  bool ok = true;
  const std::vector<long> levels = {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25};
  ok &= expect(modcurve::genus_zero_levels(100) == levels, &why, "genus-zero levels");
  std::vector<long> m;
  for (long N : levels) m.push_back(modcurve::singular_point_count(N));
  ok &= expect(m == std::vector<long>{3, 3, 3, 4, 4, 4, 4, 4, 6, 6, 6, 6, 8, 8}, &why,
               "m(N) sequence");
  for (long N = 1; N <= 200 && ok; ++N) {
    long widths = 0;
    for (const auto& c : modcurve::cusp_table(N)) widths += c.width;
    ok &= expect(widths == modcurve::arithmetic_profile(N).psi, &why,
                 "width sum N=" + std::to_string(N));
  }
  for (long N = 2; N <= 7; ++N) {
    for (auto map : {modcurve::LiftMap::Phi, modcurve::LiftMap::PhiPrime})
      for (bool zero : {true, false})
        ok &= expect(modcurve::lift_distinguished(N, map, zero).total() == N, &why,
                     "lift total N=" + std::to_string(N));
    for (long d = 1; d <= N; ++d)
      if (N % d == 0)
        ok &= expect(modcurve::cusp_fibre(N, d).total() == N, &why,
                     "fibre total N=" + std::to_string(N) + " d=" + std::to_string(d));
  }
  auto c36 = modcurve::cusp_table(36);
  long rational = 0;
  for (const auto& c : c36) rational += c.is_rational ? 1 : 0;
  ok &= expect(c36.size() == 12, &why, "X_0(36) cusp count");
  ok &= expect(rational == 6, &why, "X_0(36) rational cusps");
  ok &= expect(modcurve::fricke_genus_plus(36).genus_plus == 0, &why, "g+(36)");
  ok &= expect(modcurve::fricke_genus_plus(49).genus_plus == 0, &why, "g+(49)");
  report("criterion-6 combinatorics", ok, why);
}

void criterion7_property_suites() {
  std::string why;
  bool ok = true;
  // Deterministic pseudo-random small instances.
  std::uint64_t state = 99;
  auto next = [&] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
  };
  auto rnd = [&](long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  auto rand_series = [&](long vlo, long vhi, long trunc) {
    const long val = rnd(vlo, vhi);
    std::vector<Rational> c;
    for (long e = val; e < trunc; ++e) c.emplace_back(rnd(-9, 9), rnd(1, 7));
    if (!c.empty() && c.front().is_zero()) c.front() = Rational(1);
    return LaurentSeries::from_coeffs(std::move(c), val, trunc);
  };

  for (int i = 0; i < 30 && ok; ++i) {
    LaurentSeries a = rand_series(-2, 2, 8);
    LaurentSeries b = rand_series(-2, 2, 8);
    LaurentSeries c = rand_series(-2, 2, 8);
    auto lhs = (a * b) * c, rhs = a * (b * c);
    ok &= expect(!first_mismatch(lhs, rhs,
                                 std::min(lhs.truncation_order(), rhs.truncation_order()))
                      .has_value(),
                 &why, "mul associativity");
    auto dl = a * (b + c), dr = a * b + a * c;
    ok &= expect(!first_mismatch(dl, dr,
                                 std::min(dl.truncation_order(), dr.truncation_order()))
                      .has_value(),
                 &why, "distributivity");
    if (!a.is_zero_to_order()) {
      LaurentSeries sq = a * a;
      LaurentSeries r = laurent_sqrt(sq);
      LaurentSeries back = r * r;
      ok &= expect(!first_mismatch(back, sq, back.truncation_order()).has_value(), &why,
                   "sqrt round trip");
    }
  }
  // pullback along the identity map
  auto L = fuchsian::lifted_operator(6);
  ok &= expect(fuchsian::weak_pullback(L, Polynomial::variable(),
                                       Polynomial(Rational(1)), Rational(0)) == L,
               &why, "pullback identity");
  // branch defining relations
  ok &= expect(identities::verify_branch_roundtrip(6, 40).passed, &why,
               "branch round trip 6");
  ok &= expect(identities::verify_branch_roundtrip(7, 40).passed, &why,
               "branch round trip 7");
  report("criterion-7 property suites", ok, why);
}

}  // namespace

int main() {
  criterion1_sequences();
  criterion2_functional_equations();
  criterion3_operators();
  criterion4_recurrences();
  criterion5_q_expansions();
  criterion6_combinatorics();
  criterion7_property_suites();
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all acceptance criteria passed\n");
  return failures ? 1 : 0;
}
