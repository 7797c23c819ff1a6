#include "delsarte/sandwich.hpp"

#include <iomanip>
#include <sstream>

namespace delsarte {

SchemeParameters family_parameters(const FamilySpec& family) {
  if (const auto* h = std::get_if<HammingFamily>(&family))
    return hamming_parameters(h->n, h->q);
  const auto& j = std::get<JohnsonFamily>(family);
  return johnson_parameters(j.n, j.a);
}

SandwichReport sandwich_check(const FamilySpec& family, int d, double oracle_budget) {
  SchemeParameters params = family_parameters(family);
  if (d < 1 || d > params.n)
    throw DomainError("sandwich_check: d must lie in [1, n], got " + std::to_string(d));

  SandwichReport report;
  MaxCodeResult oracle;
  if (const auto* h = std::get_if<HammingFamily>(&family)) {
    oracle = max_code_size_hamming(h->n, h->q, d, oracle_budget);
  } else {
    const auto& j = std::get<JohnsonFamily>(family);
    oracle = max_code_size_johnson(j.n, j.a, d, oracle_budget);
  }
  report.oracle = oracle.size;
  report.oracle_optimal = oracle.optimal;

  LpSolution lp = solve_primal(params, d);
  report.lp = lp.value;

  Certificate hamming = hamming_certificate(params, d);
  report.hamming = hamming.closed_form_bound;

  std::optional<Certificate> eb, mrrw;
  try {
    eb = eb_certificate(params, d);
    report.eb = eb->closed_form_bound;
  } catch (const Q1NotDecreasing&) {
  } catch (const NoAdmissibleU&) {
  }
  try {
    mrrw = mrrw_certificate(params, d);
    report.mrrw = mrrw->closed_form_bound;
  } catch (const Q1NotDecreasing&) {
  } catch (const NotQPolynomial&) {
  } catch (const NoValidRPerp&) {
  } catch (const NoSignChange&) {
  }

  auto require = [&](bool condition, const std::string& message) {
    if (!condition) throw SandwichViolation("sandwich_check: " + message);
  };
  require(Rational(static_cast<long>(report.oracle)) <= report.lp,
          "oracle " + std::to_string(report.oracle) + " exceeds LP value " +
              report.lp.to_string());
  auto check_cert = [&](const Certificate& cert, const char* name) {
    require(report.lp <= cert.bound, std::string("LP value exceeds the verified ") + name +
                                         " certificate value " + cert.bound.to_string());
    require(report.lp <= cert.closed_form_bound,
            std::string("LP value exceeds the ") + name + " closed form " +
                cert.closed_form_bound.to_string());
  };
  check_cert(hamming, "hamming");
  if (eb) check_cert(*eb, "eb");
  if (mrrw) check_cert(*mrrw, "mrrw");
  report.ok = true;

  std::ostringstream out;
  std::vector<std::string> headers = {"oracle", "lp", "hamming", "eb", "mrrw"};
  std::vector<std::string> values = {
      std::to_string(report.oracle) + (report.oracle_optimal ? "" : "?"),
      report.lp.to_string(), report.hamming.to_string(),
      report.eb ? report.eb->to_string() : "-", report.mrrw ? report.mrrw->to_string() : "-"};
  for (size_t c = 0; c < headers.size(); ++c) {
    size_t width = std::max(headers[c].size(), values[c].size());
    out << std::left << std::setw(static_cast<int>(width)) << headers[c]
        << (c + 1 < headers.size() ? "  " : "");
  }
  out << '\n';
  for (size_t c = 0; c < headers.size(); ++c) {
    size_t width = std::max(headers[c].size(), values[c].size());
    out << std::left << std::setw(static_cast<int>(width)) << values[c]
        << (c + 1 < headers.size() ? "  " : "");
  }
  out << '\n';
  report.table = out.str();
  return report;
}

}  // namespace delsarte
