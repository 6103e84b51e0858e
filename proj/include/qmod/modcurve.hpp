#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmod/rational.hpp"

namespace qmod::modcurve {

/// Index, cusp count, elliptic-point counts and genus of X_0(N).
struct ArithmeticProfile {
  long N = 0;
  long psi = 0;          // [Gamma : Gamma_0(N)]
  long sigma_infty = 0;  // number of cusps
  long eps_rho = 0;      // order-3 elliptic points
  long eps_i = 0;        // order-2 elliptic points
  long genus = 0;
};
ArithmeticProfile arithmetic_profile(long N);

/// Levels N in (1, bound] with g(X_0(N)) = 0.
std::vector<long> genus_zero_levels(long bound);

/// Number of singular points of the lifted operator on a genus-zero X_0(N).
long singular_point_count(long N);

/// Cusp class [a/d] of X_0(N): d | N, gcd(a,d) = 1, a the least positive
/// representative of its residue class mod (d, N/d) that is coprime to d.
struct Cusp {
  long a = 1, d = 1;
  long width = 1;            // e_{d,N} = N / (d (d, N/d))
  bool is_zero_class = false;      // [1/1], i.e. tau = 0
  bool is_infinity_class = false;  // [1/N], i.e. tau = i*infinity
  bool is_rational = false;        // (d, N/d) <= 2
  friend bool operator==(const Cusp& x, const Cusp& y) {
    return x.a == y.a && x.d == y.d;
  }
};
/// All cusps of X_0(N), ordered by (d, a).
std::vector<Cusp> cusp_table(long N);

/// Canonical representative of the Gamma_0(N)-class of the cusp a/c
/// (c = 0 denotes i*infinity).
Cusp canonicalize_cusp(long a, long c, long N);

/// Formal sum of cusps of one modular curve with integer multiplicities.
struct FormalCuspSum {
  long level = 0;
  std::vector<std::pair<Cusp, long>> terms;  // sorted by (d, a)
  long total() const;
  std::string to_string() const;
};

enum class LiftMap { Phi, PhiPrime };

/// Inverse image, with ramification multiplicities, of a cusp class under
/// the N-sheeted cover by X_0(N^2).  For PhiPrime, `base` (a cusp class of
/// X_0(N)) labels the cusp [base]/N of X_0(N)'.
FormalCuspSum lift_cusp(long N, LiftMap map, const Cusp& base);

/// The distinguished classes: zero_class selects [1/1] (tau = 0); otherwise
/// [1/N] (tau = i*infinity).
FormalCuspSum lift_distinguished(long N, LiftMap map, bool zero_class);

/// Fibre of phi_N over the canonical cusp of X_0(N) with denominator d.
struct CuspFibre {
  Cusp base;
  std::vector<std::pair<Cusp, long>> points;  // (cusp of X_0(N^2), multiplicity)
  long total() const;
};
CuspFibre cusp_fibre(long N, long d);

/// Class number of reduced primitive binary quadratic forms of discriminant
/// D < 0 (D = 0, 1 mod 4), by direct enumeration.
long class_number(long D);
/// True when D is a valid negative discriminant.
bool valid_discriminant(long D);

/// Fricke fixed points and the genus of X_0^+(N).  Two readings of the
/// class-number recipe are evaluated; when they disagree, the one giving an
/// integral genus wins and both are reported.
struct FrickePlusData {
  long N = 0;
  long a_casing_1mod4 = 0;  // h(-4N) + h(-N) iff N = 1 mod 4 (invalid h := 0)
  long a_casing_3mod4 = 0;  // h(-4N) + h(-N) iff N = 3 mod 4
  bool readings_agree = false;
  long fixed_points = 0;  // the reading with integral genus
  long genus_plus = 0;
  std::string note;       // filled when the readings disagree
};
FrickePlusData fricke_genus_plus(long N);

}  // namespace qmod::modcurve
