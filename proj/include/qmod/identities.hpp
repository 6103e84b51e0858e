#pragma once

#include <string>
#include <vector>

#include "qmod/laurent_series.hpp"
#include "qmod/rational.hpp"
#include "qmod/report.hpp"

namespace qmod::identities {

/// Degree-N functional equation of h_N on the genus-zero towers: the three
/// routes to h_{N^2} (Frobenius on the chained operator, h_N(R(x)), and the
/// weak route with the S' prefactor) agree as exact series (N = 2..5).
IdentityReport verify_tower_transform(int N, long order);

enum class AgmKind { Quadratic, Cubic, Quartic };
IdentityReport verify_agm_corollary(AgmKind kind, long order);

/// The two-valued parametrization for N = 6, 7: z and z' as exact Laurent
/// series in u = 1/t on the branch with z, z' -> 0 at t = infinity.
struct BranchPair {
  LaurentSeries z, zprime;
};
BranchPair solve_branch(int N, long order);
/// Defining-relation round trip: z + kappa/z' = S(u) and z(kappa/z') = P(u).
IdentityReport verify_branch_roundtrip(int N, long order);

IdentityReport verify_sextic(long order);
IdentityReport verify_septic(long order);

/// The cusp-product prefactor: one factor per cusp of X_0(N) away from
/// [1/1], with width exponents on the two sides of the covering pair.
struct CuspPrefactor {
  struct Factor {
    long d = 0;           // cusp denominator on X_0(N)
    Rational x_coord;     // finite x_N-coordinate of the cusp (a Q_N root)
    long num_exponent = 0;  // e_{N/d,N}, on the z side
    long den_exponent = 0;  // e_{d,N}, on the z' side
  };
  int N = 0;
  std::vector<Factor> factors;
};
CuspPrefactor build_cusp_prefactor(int N);
/// Structural check of the prefactor against the explicit sextic/septic data.
IdentityReport verify_cusp_prefactor(int N, long order);

enum class ExtensionKind { N2M3, Sig4Modular, N5M2 };
IdentityReport verify_extension(ExtensionKind kind, long order);

/// d_n = scale^n c_n for h_N; throws on a non-integral value.
std::vector<Rational> coefficient_sequence(int N, long count);
long sequence_scale(int N);  // 500, 72, 441
/// Reference values (eight terms) for N = 5, 6, 7.
const std::vector<long>& reference_sequence(int N);
/// Compares the recurrence-generated sequence with the reference values.
IdentityReport verify_sequence(int N, long order);

/// Every registered verification, by name, in deterministic order.
const std::vector<std::string>& registry_names();
IdentityReport run_identity(const std::string& name, long order);
/// Runs the whole registry (independent entries may run in parallel);
/// results are ordered by registry position regardless of scheduling.
std::vector<IdentityReport> run_full_suite(long order);

}  // namespace qmod::identities
