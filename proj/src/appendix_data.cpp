#include "qmod/appendix_data.hpp"

#include <stdexcept>

namespace qmod::data {

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }

EtaProduct eta(long constant, std::vector<std::pair<long, Rational>> factors) {
  EtaProduct e;
  e.constant = Rational(constant);
  e.factors = std::move(factors);
  return e;
}

HauptmodulRecord covering_record(const char* name, int level, EtaProduct e, long kappa,
                                 Polynomial p, Polynomial q) {
  HauptmodulRecord r;
  r.name = name;
  r.level = level;
  r.eta = std::move(e);
  r.kappa = Rational(kappa);
  r.has_covering = true;
  r.P = std::move(p);
  r.Q = std::move(q);
  return r;
}

HauptmodulRecord chain_record(const char* name, int level, EtaProduct e, long kappa,
                              const char* target, RationalFunction map) {
  HauptmodulRecord r;
  r.name = name;
  r.level = level;
  r.eta = std::move(e);
  r.kappa = Rational(kappa);
  r.chain_target = target;
  r.chain_map = std::move(map);
  return r;
}

std::vector<HauptmodulRecord> build_hauptmoduln() {
  std::vector<HauptmodulRecord> v;

  // x2 = 2^12 [2]^24 / [1]^24,  j = (x2+16)^3 / x2
  v.push_back(covering_record("x2", 2, eta(4096, {{1, -24}, {2, 24}}), 4096,
                              P("x+16").pow(3), P("x")));
  // x3 = 3^6 [3]^12 / [1]^12,  j = (x3+3)^3 (x3+27) / x3
  v.push_back(covering_record("x3", 3, eta(729, {{1, -12}, {3, 12}}), 729,
                              P("x+3").pow(3) * P("x+27"), P("x")));
  // x4 = 2^8 [4]^8 / [1]^8,  j = (x4^2+16x4+16)^3 / (x4 (x4+16)),
  // and x2 = x4 (x4+16)
  {
    HauptmodulRecord r = covering_record("x4", 4, eta(256, {{1, -8}, {4, 8}}), 256,
                                         P("x^2+16*x+16").pow(3), P("x") * P("x+16"));
    r.chain_target = "x2";
    r.chain_map = RationalFunction(P("x") * P("x+16"));
    v.push_back(std::move(r));
  }
  // x5 = 5^3 [5]^6 / [1]^6,  j = (x5^2+10x5+5)^3 / x5
  v.push_back(covering_record("x5", 5, eta(125, {{1, -6}, {5, 6}}), 125,
                              P("x^2+10*x+5").pow(3), P("x")));
  // x6 = 72 [2][6]^5 / [1]^5[3],
  // j = (x6+6)^3 (x6^3+18x6^2+84x6+24)^3 / (x6 (x6+9)^2 (x6+8)^3)
  v.push_back(covering_record(
      "x6", 6, eta(72, {{1, -5}, {2, 1}, {3, -1}, {6, 5}}), 72,
      P("x+6").pow(3) * P("x^3+18*x^2+84*x+24").pow(3),
      P("x") * P("x+9").pow(2) * P("x+8").pow(3)));
  // x7 = 7^2 [7]^4 / [1]^4,  j = (x7^2+5x7+1)^3 (x7^2+13x7+49) / x7
  v.push_back(covering_record("x7", 7, eta(49, {{1, -4}, {7, 4}}), 49,
                              P("x^2+5*x+1").pow(3) * P("x^2+13*x+49"), P("x")));

  // Chained levels: j is reached through the recorded lower level.
  // x3 = x9 (x9^2 + 9 x9 + 27)
  v.push_back(chain_record("x9", 9, eta(27, {{1, -3}, {9, 3}}), 27, "x3",
                           RationalFunction(P("x") * P("x^2+9*x+27"))));
  // x5 = x10 (x10+5)^2 / (x10+4)
  v.push_back(chain_record("x10", 10, eta(20, {{1, -3}, {2, 1}, {5, -1}, {10, 3}}), 20,
                           "x5",
                           RationalFunction(P("x") * P("x+5").pow(2), P("x+4"))));
  // x4 = x16 (x16+4) (x16^2+4x16+8)
  v.push_back(chain_record("x16", 16, eta(8, {{1, -2}, {2, 1}, {8, -1}, {16, 2}}), 8,
                           "x4",
                           RationalFunction(P("x") * P("x+4") * P("x^2+4*x+8"))));
  // x6 = x18 (x18^2 + 6 x18 + 12)
  v.push_back(chain_record("x18", 18,
                           eta(6, {{1, -2}, {2, 1}, {3, 1}, {6, -1}, {9, -1}, {18, 2}}),
                           6, "x6", RationalFunction(P("x") * P("x^2+6*x+12"))));
  // x5 = x25 (x25^4 + 5 x25^3 + 15 x25^2 + 25 x25 + 25)
  v.push_back(chain_record("x25", 25, eta(5, {{1, -1}, {25, 1}}), 5, "x5",
                           RationalFunction(P("x") * P("x^4+5*x^3+15*x^2+25*x+25"))));

  // t36: [2]^3 [3] [12] [18]^3 / [1]^2 [4] [6]^2 [9] [36]^2
  {
    HauptmodulRecord r;
    r.name = "t36";
    r.level = 36;
    r.eta = eta(1, {{1, -2}, {2, 3}, {3, 1}, {4, -1}, {6, -2}, {9, -1}, {12, 1}, {18, 3}, {36, -2}});
    v.push_back(std::move(r));
  }
  return v;
}

}  // namespace

const std::vector<HauptmodulRecord>& hauptmoduln() {
  static const std::vector<HauptmodulRecord> v = build_hauptmoduln();
  return v;
}

const HauptmodulRecord& hauptmodul(const std::string& name) {
  for (const auto& r : hauptmoduln())
    if (r.name == name) return r;
  throw std::domain_error("unknown Hauptmodul '" + name + "'");
}

const HauptmodulRecord& hauptmodul_for_level(int level) {
  for (const auto& r : hauptmoduln())
    if (r.level == level && r.name[0] == 'x') return r;
  throw std::domain_error("no canonical Hauptmodul for level " + std::to_string(level));
}

const EtaProduct& weight1_form_eta(int N) {
  static const std::vector<EtaProduct> table = [] {
    std::vector<EtaProduct> t(8);
    t[2] = eta(1, {{1, 4}, {2, -2}});
    t[3] = eta(1, {{1, 3}, {3, -1}});
    t[4] = eta(1, {{1, 4}, {2, -2}});
    t[5] = eta(1, {{1, Rational(5, 2)}, {5, Rational(-1, 2)}});
    t[6] = eta(1, {{1, 6}, {2, -3}, {3, -2}, {6, 1}});
    t[7] = eta(1, {{1, Rational(7, 3)}, {7, Rational(-1, 3)}});
    return t;
  }();
  if (N < 2 || N > 7) throw std::domain_error("weight1_form_eta: N must be 2..7");
  return table[static_cast<std::size_t>(N)];
}

const TransformData& transform(int N) {
  static const std::vector<TransformData> table = [] {
    std::vector<TransformData> t(6);
    t[2] = {2, P("x") * P("x+16"), P("x+16"), Rational(256), Rational(2),
            Rational(-1, 4)};
    t[3] = {3, P("x") * P("x^2+9*x+27"), P("x^2+9*x+27"), Rational(27), Rational(3),
            Rational(-1, 3)};
    t[4] = {4, P("x") * P("x+4") * P("x^2+4*x+8"), P("x+2") * P("x^2+4*x+8"),
            Rational(8), Rational(4), Rational(-1, 2)};
    t[5] = {5, P("x") * P("x^4+5*x^3+15*x^2+25*x+25"), P("x^4+5*x^3+15*x^2+25*x+25"),
            Rational(5), Rational(5), Rational(-1, 2)};
    return t;
  }();
  if (N < 2 || N > 5) throw std::domain_error("transform: N must be 2..5");
  return table[static_cast<std::size_t>(N)];
}

const SumProductData& sum_product(int N) {
  static const std::vector<SumProductData> table = [] {
    std::vector<SumProductData> t(8);
    t[6] = {6,
            P("t-2") * P("t^5-10*t^4+28*t^3-26*t^2+20*t+4"),
            Rational(72) * (P("t") * P("t-2").pow(2) * P("t^2-t+1")),
            Rational(72),
            P("t^4-8*t^3+12*t^2-8*t+4"),
            P("t-2") * P("t^3-6*t^2+6*t-2")};
    t[7] = {7,
            P("t^3-7*t^2+14*t-7") * P("t^4-14*t^3+63*t^2-98*t+35"),
            Rational(49) * P("t^3-7*t^2+14*t-7").pow(2),
            Rational(49),
            P("t^4-14*t^3+63*t^2-98*t+21"),
            P("t^3-7*t^2+14*t-7") * P("t^2-7*t+7")};
    return t;
  }();
  if (N != 6 && N != 7) throw std::domain_error("sum_product: N must be 6 or 7");
  return table[static_cast<std::size_t>(N)];
}

const RationalFunction& x2_in_x6() {
  static const RationalFunction f(P("x") * P("x+8").pow(3), P("x+9"));
  return f;
}

const RationalFunction& x3_in_x6() {
  static const RationalFunction f(P("x") * P("x+9").pow(2), P("x+8"));
  return f;
}

}  // namespace qmod::data
