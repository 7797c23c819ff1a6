#pragma once

#include <optional>
#include <string>
#include <variant>

#include "delsarte/certificates.hpp"
#include "delsarte/clique.hpp"
#include "delsarte/lp.hpp"

namespace delsarte {

struct HammingFamily {
  int n;
  int q;
};

struct JohnsonFamily {
  int n;
  int a;
};

using FamilySpec = std::variant<HammingFamily, JohnsonFamily>;

/// One row of oracle <= LP <= certificate comparisons, exact fractions.
struct SandwichReport {
  long long oracle = 0;
  bool oracle_optimal = true;
  Rational lp;
  Rational hamming;
  std::optional<Rational> eb;    // absent when the construction does not apply
  std::optional<Rational> mrrw;  // absent when the construction does not apply
  bool ok = false;
  std::string table;  // aligned text with columns: oracle lp hamming eb mrrw
};

/// Runs oracle, exact LP and all three certificate constructions on one
/// (family, d) instance and verifies the chain
///   max_code_size <= A_LP <= each applicable bound, exactly.
/// Any violated inequality raises SandwichViolation. `d` is the scheme
/// distance (Johnson distance for the Johnson family).
SandwichReport sandwich_check(const FamilySpec& family, int d, double oracle_budget = 0.0);

/// Builds the exact parameter table for a family spec.
SchemeParameters family_parameters(const FamilySpec& family);

}  // namespace delsarte
