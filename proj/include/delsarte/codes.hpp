#pragma once

#include <vector>

#include "delsarte/explicit_scheme.hpp"
#include "delsarte/parameters.hpp"
#include "delsarte/radial.hpp"

namespace delsarte {

/// A nonempty subset of the points of an explicit scheme.
struct Code {
  const ExplicitScheme* scheme = nullptr;
  std::vector<int> members;
};

struct DistanceDistribution {
  RadialFunction a;       // a(t), normalized so a(0) = 1
  RadialFunction a_dual;  // a'(t) = (1/|X|) sum_x q_t(x) a(x)
  int d_min = 0;          // 0 when |C| = 1 (no pair exists)
};

/// Distance distribution of a code together with its MacWilliams dual,
/// computed against the exact parameter table of the same scheme.
DistanceDistribution distance_distribution(const SchemeParameters& params, const Code& code);

}  // namespace delsarte
