#pragma once

#include <string>
#include <vector>

#include "qmod/polynomial.hpp"
#include "qmod/qexpansion.hpp"
#include "qmod/rational_function.hpp"

namespace qmod::data {

/// One canonical Hauptmodul: its eta product, Fricke constant, and either a
/// direct j-covering j = P/Q or a recorded chain through a lower level.
/// Every entry is transcribed from the tables this library is built around;
/// the test suite re-derives each invariant it states.
struct HauptmodulRecord {
  std::string name;   // "x2".."x25", "t36"
  int level = 0;      // 2..25, 36
  EtaProduct eta;
  Rational kappa;     // Fricke normalization x(tau)x(-1/N tau); 0 when unused
  bool has_covering = false;
  Polynomial P, Q;    // j = P(x)/Q(x) when has_covering
  std::string chain_target;     // lower-level Hauptmodul name, e.g. "x3"
  RationalFunction chain_map;   // x_target = chain_map(x_this)
};

const std::vector<HauptmodulRecord>& hauptmoduln();
/// Lookup by CLI-facing name; throws std::domain_error for unknown names.
const HauptmodulRecord& hauptmodul(const std::string& name);
/// The canonical x_N record for a level with one.
const HauptmodulRecord& hauptmodul_for_level(int level);

/// Table of weight-1 forms h_N as eta products (N = 2..7).
const EtaProduct& weight1_form_eta(int N);

/// Rational-map data behind the N = 2..5 functional equations:
/// x_N = R(x_{N^2}) and x_N' = x_{N^2}^N / Sprime(x_{N^2}).
struct TransformData {
  int N = 0;
  Polynomial R;        // monic, degree N
  Polynomial Sprime;   // degree N-1, Sprime(0) != 0
  Rational kappa_upper;          // Fricke constant of x_{N^2}
  Rational multiplier_constant;  // integer multiplier of the identity (2,3,4,5)
  Rational prefactor_exponent;   // -psi(N)/12
};
const TransformData& transform(int N);

/// Sum-product uniformization data for N = 6, 7:
///   z + kappa/z' = S(t),  z * (kappa/z') = P(t),  s^2 = curve_quartic(t),
/// and S^2 - 4P = sqrt_factor^2 * curve_quartic.
struct SumProductData {
  int N = 0;
  Polynomial S_poly;         // degree 6 resp. 7
  Polynomial P_poly;         // leading coefficient kappa
  Rational kappa;
  Polynomial curve_quartic;  // degree 4
  Polynomial sqrt_factor;
};
const SumProductData& sum_product(int N);

/// x_2 and x_3 as elements of the function field of X_0(6).
const RationalFunction& x2_in_x6();
const RationalFunction& x3_in_x6();

}  // namespace qmod::data
