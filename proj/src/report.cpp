#include "qmod/report.hpp"

#include <stdexcept>

#include "json.hpp"

namespace qmod {

using ordered_json = nlohmann::ordered_json;

IdentityReport IdentityReport::pass(std::string name, long order) {
  IdentityReport r;
  r.name = std::move(name);
  r.order_checked = order;
  r.passed = true;
  return r;
}

IdentityReport IdentityReport::fail(std::string name, long order, long power,
                                    std::string lhs, std::string rhs) {
  IdentityReport r;
  r.name = std::move(name);
  r.order_checked = order;
  r.passed = false;
  r.first_mismatch = Mismatch{power, std::move(lhs), std::move(rhs)};
  return r;
}

IdentityReport IdentityReport::from_series(std::string name, long order,
                                           const LaurentSeries& lhs,
                                           const LaurentSeries& rhs) {
  // A pass must mean every coefficient below `order` was compared; guard
  // terms are sized so this never trips.
  if (lhs.truncation_order() < order || rhs.truncation_order() < order)
    throw std::logic_error("report '" + name + "': series only known to order " +
                           std::to_string(std::min(lhs.truncation_order(),
                                                   rhs.truncation_order())) +
                           " < requested " + std::to_string(order));
  auto m = ::qmod::first_mismatch(lhs, rhs, order);
  if (!m) return pass(std::move(name), order);
  return fail(std::move(name), order, m->power, m->lhs.to_string(), m->rhs.to_string());
}

IdentityReport IdentityReport::from_qexp(std::string name, long order,
                                         const QExpansion& lhs, const QExpansion& rhs) {
  if (lhs.q_exponent() == rhs.q_exponent() && lhs.q_exponent().is_integer()) {
    const long shift = lhs.q_exponent().to_long();
    if (lhs.unit().truncation_order() + shift < order ||
        rhs.unit().truncation_order() + shift < order)
      throw std::logic_error("report '" + name +
                             "': expansion not known to requested order " +
                             std::to_string(order));
  }
  auto m = qexp_first_mismatch(lhs, rhs, order);
  if (!m) return pass(std::move(name), order);
  return fail(std::move(name), order, m->power, m->lhs.to_string(), m->rhs.to_string());
}

std::string render_line(const IdentityReport& r) {
  std::string s = r.passed ? "PASS " : "FAIL ";
  s += r.name + " (order " + std::to_string(r.order_checked) + ")";
  if (r.first_mismatch) {
    s += " first mismatch at power " + std::to_string(r.first_mismatch->power) +
         ": lhs=" + r.first_mismatch->lhs + " rhs=" + r.first_mismatch->rhs;
  }
  return s;
}

namespace {
ordered_json report_json(const IdentityReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["order"] = r.order_checked;
  j["passed"] = r.passed;
  if (r.first_mismatch) {
    ordered_json m;
    m["power"] = r.first_mismatch->power;
    m["lhs"] = r.first_mismatch->lhs;
    m["rhs"] = r.first_mismatch->rhs;
    j["first_mismatch"] = m;
  } else {
    j["first_mismatch"] = nullptr;
  }
  return j;
}
}  // namespace

std::string render_json(const IdentityReport& r) { return report_json(r).dump(); }

std::string render_json_envelope(const std::vector<IdentityReport>& reports) {
  ordered_json j;
  j["version"] = kVersion;
  j["reports"] = ordered_json::array();
  for (const auto& r : reports) j["reports"].push_back(report_json(r));
  return j.dump(2);
}

}  // namespace qmod
