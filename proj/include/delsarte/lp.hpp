#pragma once

#include <vector>

#include "delsarte/parameters.hpp"
#include "delsarte/radial.hpp"

namespace delsarte {

/// The dense exact simplex refuses instances beyond this diameter.
inline constexpr int kLpDimensionCap = 64;

/// The primal Delsarte LP: maximize sum_t u(t) subject to u(0) = 1,
/// u(t) = 0 on [1, d-1], u(t) >= 0 on [d, n] and sum_t u(t) q_i(t) >= 0.
struct DelsarteLpInstance {
  const SchemeParameters* params = nullptr;
  int d = 0;
  /// Order in which the MacWilliams constraints enter the tableau; the
  /// optimum value is invariant under permutations of this list.
  std::vector<int> constraint_order;

  DelsarteLpInstance(const SchemeParameters& p, int distance);
};

enum class LpStatus { optimal, unbounded, infeasible };

struct LpSolution {
  Rational value;
  RadialFunction u;
  LpStatus status = LpStatus::optimal;
};

/// Exact rational simplex with Bland's anti-cycling rule. Unbounded status
/// is impossible for a genuine scheme table and raises SoundnessError.
LpSolution solve_lp(const DelsarteLpInstance& instance);

LpSolution solve_primal(const SchemeParameters& params, int d);

}  // namespace delsarte
