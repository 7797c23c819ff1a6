#include "delsarte/codes.hpp"

#include <algorithm>

namespace delsarte {

DistanceDistribution distance_distribution(const SchemeParameters& params, const Code& code) {
  if (code.scheme == nullptr || code.members.empty())
    throw DomainError("distance_distribution: code must reference a scheme and be nonempty");
  const ExplicitScheme& scheme = *code.scheme;
  if (scheme.n != params.n)
    throw DomainError("distance_distribution: scheme and parameter table disagree on n");
  for (int p : code.members)
    if (p < 0 || p >= scheme.size) throw DomainError("distance_distribution: bad point index");
  {
    std::vector<int> sorted = code.members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("distance_distribution: duplicate code members");
  }
  const int n = params.n;
  const long csize = static_cast<long>(code.members.size());
  std::vector<long> pair_counts(n + 1, 0);
  for (int c1 : code.members)
    for (int c2 : code.members) ++pair_counts[scheme.dist(c1, c2)];

  DistanceDistribution dd;
  dd.a.resize(n + 1);
  for (int t = 0; t <= n; ++t) dd.a(t) = Rational(pair_counts[t], csize);
  // a'(t) = (1/|X|) sum_x q_t(x) a(x); note the index order, this is Q a and
  // not the tilde transform.
  dd.a_dual = params.Q * dd.a;
  const Rational inv_card = Rational(1) / params.cardinality;
  for (int t = 0; t <= n; ++t) dd.a_dual(t) *= inv_card;
  dd.d_min = 0;
  for (int t = 1; t <= n; ++t)
    if (pair_counts[t] != 0) {
      dd.d_min = t;
      break;
    }
  return dd;
}

}  // namespace delsarte
