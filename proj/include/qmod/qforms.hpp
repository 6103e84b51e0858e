#pragma once

#include <string>
#include <vector>

#include "qmod/qexpansion.hpp"
#include "qmod/rational_function.hpp"
#include "qmod/report.hpp"

namespace qmod::qforms {

/// prod_{n>=1} (1 - q^{kn}) truncated below `order` (the unit part of the
/// eta factor [k]; the q^{k/24} prefactor is bookkept by QExpansion).
LaurentSeries eta_unit(long k, long order);

/// Full eta factor [k] = q^{k/24} prod (1 - q^{kn}).
QExpansion eta_qexp(long k, long order);

/// Expansion of an eta product.
QExpansion eta_product_qexp(const EtaProduct& p, long order);

/// Canonical Hauptmodul expansions by name: "x2".."x25" and "t36".
QExpansion hauptmodul_qexp(const std::string& name, long order);

/// j as a Laurent q-series with valuation -1, coefficients known below
/// exponent `order` (defined through the level-2 route and certified once
/// against the Eisenstein/discriminant oracle in the tests).
LaurentSeries j_qexp(long order);
/// 1728/j, valuation +1.
LaurentSeries jhat_qexp(long order);

/// The weight-1 form h_N(x_N(q)) as a q-series, computed from the lifted
/// operator (N = 2..7).
LaurentSeries form_qseries(int N, long order);

/// Evaluate a polynomial / rational function on a q-series.
LaurentSeries poly_at_series(const Polynomial& p, const LaurentSeries& s);
LaurentSeries ratfun_at_series(const RationalFunction& f, const LaurentSeries& s);

/// P_N(x_N(q))/Q_N(x_N(q)) = j, exactly, below exponent `order` (N = 2..7).
IdentityReport verify_covering(int N, long order);

/// Registered eta-product identities (chains, the x6+8 / x6+9 products, the
/// Kluit t36 identities).
IdentityReport verify_eta_identity(const std::string& id, long order);
const std::vector<std::string>& eta_identity_ids();

/// h_N(x_N(q)) against the weight-1 eta product and against the
/// eta-squared form P_N(0)^{1/12} Q_N(x_N)^{-1/12} eta^2.
IdentityReport verify_form_equals_eta(int N, long order);

/// h_{N^2}(x_{N^2}(q)) = h_N(x_N(q)) as q-series, for N = 2.
IdentityReport verify_h4_equals_h2(long order);

/// Rationalized Dedekind eta identity: prod (1-q^n)^2 equals
/// F^{1/12} 2F1(1/12, 5/12; 1; Jhat) with F = Jhat/(1728 q).
IdentityReport verify_dedekind_stiller(long order);

/// CLI-facing expandable object: "eta:k", Hauptmodul names, "j", "h2".."h7".
QExpansion qexp_object(const std::string& name, long order);

}  // namespace qmod::qforms
