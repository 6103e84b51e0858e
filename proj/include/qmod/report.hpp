#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmod/laurent_series.hpp"
#include "qmod/qexpansion.hpp"

namespace qmod {

inline constexpr const char* kVersion = "1.0.0";

/// Outcome of one exact verification: which identity, how far it was
/// checked, and on failure the first coefficient where the sides differ.
struct IdentityReport {
  std::string name;
  long order_checked = 0;
  bool passed = false;
  struct Mismatch {
    long power = 0;
    std::string lhs, rhs;
  };
  std::optional<Mismatch> first_mismatch;

  static IdentityReport pass(std::string name, long order);
  static IdentityReport fail(std::string name, long order, long power,
                             std::string lhs, std::string rhs);
  /// Builds a report from a series comparison.
  static IdentityReport from_series(std::string name, long order,
                                    const LaurentSeries& lhs,
                                    const LaurentSeries& rhs);
  static IdentityReport from_qexp(std::string name, long order, const QExpansion& lhs,
                                  const QExpansion& rhs);
};

/// One line of text: "PASS name (order n)" or "FAIL name ...".
std::string render_line(const IdentityReport& r);
/// Report object in the documented JSON schema.
std::string render_json(const IdentityReport& r);
/// Envelope {"version": ..., "reports": [...]} with deterministic key order.
std::string render_json_envelope(const std::vector<IdentityReport>& reports);

}  // namespace qmod
