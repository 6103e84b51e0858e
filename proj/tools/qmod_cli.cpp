#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmod/appendix_data.hpp"
#include "qmod/fuchsian.hpp"
#include "qmod/identities.hpp"
#include "qmod/modcurve.hpp"
#include "qmod/qforms.hpp"
#include "qmod/report.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace qmod;

namespace {

constexpr long kMaxTerms = 128;

int check_terms(long terms) {
  if (terms < 1 || terms > kMaxTerms) {
    std::cerr << "error: --terms/--count must be between 1 and " << kMaxTerms << "\n";
    return 2;
  }
  return 0;
}

ordered_json qexp_json(const std::string& name, const QExpansion& q) {
  ordered_json j;
  j["version"] = kVersion;
  j["name"] = name;
  j["q_exponent"] = q.q_exponent().to_string();
  j["valuation"] = q.unit().is_zero_to_order() ? q.unit().truncation_order()
                                               : q.unit().valuation();
  ordered_json coeffs = ordered_json::array();
  for (long e = q.unit().valuation(); e < q.unit().truncation_order(); ++e)
    coeffs.push_back(q.unit().coeff(e).to_string());
  j["coeffs"] = coeffs;
  return j;
}

int cmd_verify(bool all, const std::string& id, long terms, bool json) {
  if (int rc = check_terms(terms)) return rc;
  std::vector<IdentityReport> reports;
  if (all) {
    reports = identities::run_full_suite(terms);
  } else {
    try {
      reports.push_back(identities::run_identity(id, terms));
    } catch (const std::domain_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed;
  if (json) {
    std::cout << render_json_envelope(reports) << "\n";
  } else {
    for (const auto& r : reports) std::cout << render_line(r) << "\n";
    std::cout << (ok ? "all passed" : "FAILURES present") << " (" << reports.size()
              << " reports, order " << terms << ")\n";
  }
  return ok ? 0 : 1;
}

int cmd_qexp(const std::string& name, long terms, bool json) {
  if (int rc = check_terms(terms)) return rc;
  QExpansion q;
  try {
    q = qforms::qexp_object(name, terms);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (json) {
    std::cout << qexp_json(name, q).dump(2) << "\n";
  } else {
    std::cout << name << " = q^(" << q.q_exponent().to_string() << ") * ("
              << q.unit().to_string('q') << ")\n";
  }
  return 0;
}

int cmd_series(const std::string& target, long count, bool scaled, bool json) {
  if (int rc = check_terms(count)) return rc;
  if (target.size() != 2 || target[0] != 'h' || target[1] < '2' || target[1] > '7') {
    std::cerr << "error: series target must be h2..h7\n";
    return 2;
  }
  const int N = target[1] - '0';
  try {
    LaurentSeries h =
        fuchsian::frobenius_series(fuchsian::lifted_operator(N), count);
    std::vector<std::string> values;
    if (scaled) {
      if (N < 5) {
        std::cerr << "error: --scaled is defined for h5, h6, h7\n";
        return 2;
      }
      for (const auto& d : identities::coefficient_sequence(N, count))
        values.push_back(d.to_string());
    } else {
      for (long i = 0; i < count; ++i) values.push_back(h.coeff(i).to_string());
    }
    if (json) {
      ordered_json j;
      j["version"] = kVersion;
      j["name"] = target;
      j["scaled"] = scaled;
      j["values"] = values;
      std::cout << j.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < values.size(); ++i)
        std::cout << i << " " << values[i] << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_cusps(long N, bool json) {
  auto cusps = modcurve::cusp_table(N);
  if (json) {
    ordered_json j;
    j["version"] = kVersion;
    j["N"] = N;
    ordered_json arr = ordered_json::array();
    for (const auto& c : cusps) {
      ordered_json e;
      e["a"] = c.a;
      e["d"] = c.d;
      e["width"] = c.width;
      e["zero_class"] = c.is_zero_class;
      e["infinity_class"] = c.is_infinity_class;
      e["rational"] = c.is_rational;
      arr.push_back(e);
    }
    j["cusps"] = arr;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "cusps of X_0(" << N << "):\n";
    for (const auto& c : cusps) {
      std::cout << "  [" << c.a << "/" << c.d << "]  width " << c.width;
      if (c.is_zero_class) std::cout << "  (tau=0)";
      if (c.is_infinity_class) std::cout << "  (tau=i*inf)";
      if (c.is_rational) std::cout << "  rational";
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_profile(long N, bool json) {
  auto p = modcurve::arithmetic_profile(N);
  if (json) {
    ordered_json j;
    j["version"] = kVersion;
    j["N"] = p.N;
    j["psi"] = p.psi;
    j["sigma_infty"] = p.sigma_infty;
    j["eps_rho"] = p.eps_rho;
    j["eps_i"] = p.eps_i;
    j["genus"] = p.genus;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "X_0(" << p.N << "): psi=" << p.psi << " sigma_inf=" << p.sigma_infty
              << " eps_rho=" << p.eps_rho << " eps_i=" << p.eps_i
              << " genus=" << p.genus << "\n";
  }
  return 0;
}

int cmd_lift(int N) {
  if (N < 2 || N > 7) {
    std::cerr << "error: lift is defined for N = 2..7\n";
    return 2;
  }
  auto L = fuchsian::lifted_operator(N);
  std::cout << "normal-form weak lifting to X_0(" << N << "), variable z:\n";
  std::cout << "  { D^2 + [" << L.A.to_string('z') << "] D + [" << L.B.to_string('z')
            << "] } u = 0\n";
  std::cout << "singular points:\n";
  for (const auto& sp : fuchsian::exponent_survey(N)) {
    const char* kind = "";
    switch (sp.kind) {
      case fuchsian::PointKind::Cusp: kind = "cusp"; break;
      case fuchsian::PointKind::EllipticTwo: kind = "elliptic-2"; break;
      case fuchsian::PointKind::EllipticThree: kind = "elliptic-3"; break;
      case fuchsian::PointKind::OrdinaryDegenerate: kind = "ordinary"; break;
    }
    std::cout << "  " << sp.location.to_string('z') << "  exponents ("
              << sp.exponents.first.to_string() << ", "
              << sp.exponents.second.to_string() << ")  " << kind << "\n";
  }
  return 0;
}

int cmd_lift_cusps(long N, const std::string& map, bool json) {
  if (N < 2) {
    std::cerr << "error: N must be >= 2\n";
    return 2;
  }
  modcurve::LiftMap m;
  if (map == "phi")
    m = modcurve::LiftMap::Phi;
  else if (map == "phi-prime")
    m = modcurve::LiftMap::PhiPrime;
  else {
    std::cerr << "error: --map must be phi or phi-prime\n";
    return 2;
  }
  auto zero = modcurve::lift_distinguished(N, m, true);
  auto inf = modcurve::lift_distinguished(N, m, false);
  const std::string tag = map == "phi" ? "phi" : "phi'";
  const std::string suffix = map == "phi" ? "" : "/" + std::to_string(N);
  if (json) {
    ordered_json j;
    j["version"] = kVersion;
    j["N"] = N;
    j["map"] = map;
    auto sum_json = [](const modcurve::FormalCuspSum& s) {
      ordered_json arr = ordered_json::array();
      for (const auto& [c, mult] : s.terms) {
        ordered_json e;
        e["a"] = c.a;
        e["d"] = c.d;
        e["multiplicity"] = mult;
        arr.push_back(e);
      }
      return arr;
    };
    j["preimage_zero_class"] = sum_json(zero);
    j["preimage_infinity_class"] = sum_json(inf);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << tag << "^-1([1/1]_" << N << suffix << ") = " << zero.to_string()
              << "   (total " << zero.total() << ")\n";
    std::cout << tag << "^-1([1/" << N << "]_" << N << suffix
              << ") = " << inf.to_string() << "   (total " << inf.total() << ")\n";
  }
  return 0;
}

int cmd_recurrence(int N) {
  if (N < 2 || N > 7) {
    std::cerr << "error: recurrence is defined for N = 2..7\n";
    return 2;
  }
  auto rec = fuchsian::extract_recurrence(fuchsian::lifted_operator(N));
  std::cout << "coefficient recurrence of h_" << N << ":\n  " << rec.to_string()
            << "\n";
  return 0;
}

int cmd_sequence(int N, long count, bool json) {
  if (int rc = check_terms(count)) return rc;
  if (N != 5 && N != 6 && N != 7) {
    std::cerr << "error: sequence is defined for N = 5, 6, 7\n";
    return 2;
  }
  auto d = identities::coefficient_sequence(N, count);
  if (json) {
    ordered_json j;
    j["version"] = kVersion;
    j["N"] = N;
    j["scale"] = identities::sequence_scale(N);
    ordered_json values = ordered_json::array();
    for (const auto& v : d) values.push_back(v.to_string());
    j["values"] = values;
    std::cout << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < d.size(); ++i)
      std::cout << i << " " << d[i].to_string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the modular hypergeometric transformations"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run exact identity verifications");
  bool all = false;
  std::string id;
  long terms = 40;
  bool vjson = false;
  verify->add_flag("--all", all, "run every registered identity");
  verify->add_option("--id", id, "run one identity by name");
  verify->add_option("--terms", terms, "series order to check (1..128)");
  verify->add_flag("--json", vjson, "JSON report envelope");

  // series
  auto* series = app.add_subcommand("series", "Maclaurin coefficients of h_N");
  std::string series_target;
  long count = 8;
  bool scaled = false, sjson = false;
  series->add_option("target", series_target, "h2..h7")->required();
  series->add_option("--count", count, "number of coefficients");
  series->add_flag("--scaled", scaled, "print the integer sequence d_n");
  series->add_flag("--json", sjson, "JSON output");

  // qexp
  auto* qexp = app.add_subcommand("qexp", "q-expansion of a named object");
  std::string qname;
  long qterms = 40;
  bool qjson = false;
  qexp->add_option("name", qname, "eta:k, x2..x25, t36, j, h2..h7")->required();
  qexp->add_option("--terms", qterms, "number of unit coefficients");
  qexp->add_flag("--json", qjson, "JSON output");

  // cusps
  auto* cusps = app.add_subcommand("cusps", "cusp table of X_0(N)");
  long cusps_N = 0;
  bool cjson = false;
  cusps->add_option("N", cusps_N, "level")->required();
  cusps->add_flag("--json", cjson, "JSON output");

  // profile
  auto* profile = app.add_subcommand("profile", "index, cusps, elliptic points, genus");
  long prof_N = 0;
  bool pjson = false;
  profile->add_option("N", prof_N, "level")->required();
  profile->add_flag("--json", pjson, "JSON output");

  // lift
  auto* lift = app.add_subcommand("lift", "lifted operator on X_0(N)");
  int lift_N = 0;
  lift->add_option("--N", lift_N, "level 2..7")->required();

  // lift-cusps
  auto* lc = app.add_subcommand("lift-cusps", "cusp liftings under phi / phi'");
  long lc_N = 0;
  std::string lc_map = "phi";
  bool lcjson = false;
  lc->add_option("N", lc_N, "level")->required();
  lc->add_option("--map", lc_map, "phi or phi-prime");
  lc->add_flag("--json", lcjson, "JSON output");

  // recurrence
  auto* rec = app.add_subcommand("recurrence", "coefficient recurrence of h_N");
  int rec_N = 0;
  rec->add_option("--N", rec_N, "level 2..7")->required();

  // sequence
  auto* seq = app.add_subcommand("sequence", "integer sequence d_n of h_N");
  int seq_N = 0;
  long seq_count = 8;
  bool seqjson = false;
  seq->add_option("N", seq_N, "5, 6 or 7")->required();
  seq->add_option("--count", seq_count, "number of terms");
  seq->add_flag("--json", seqjson, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) {
      if (!all && id.empty()) {
        std::cerr << "error: pass --all or --id NAME\n";
        return 2;
      }
      return cmd_verify(all, id, terms, vjson);
    }
    if (series->parsed()) return cmd_series(series_target, count, scaled, sjson);
    if (qexp->parsed()) return cmd_qexp(qname, qterms, qjson);
    if (cusps->parsed()) return cmd_cusps(cusps_N, cjson);
    if (profile->parsed()) return cmd_profile(prof_N, pjson);
    if (lift->parsed()) return cmd_lift(lift_N);
    if (lc->parsed()) return cmd_lift_cusps(lc_N, lc_map, lcjson);
    if (rec->parsed()) return cmd_recurrence(rec_N);
    if (seq->parsed()) return cmd_sequence(seq_N, seq_count, seqjson);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
