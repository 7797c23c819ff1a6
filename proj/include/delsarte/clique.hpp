#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "delsarte/explicit_scheme.hpp"

namespace delsarte {

/// Caps for the brute-force oracle.
inline constexpr long kHammingOracleCap = 1 << 20;  // |X| for the Hamming family
inline constexpr int kGenericOracleCap = 4096;      // |X| for explicit schemes

struct MaxCodeResult {
  long long size = 0;
  std::vector<long> witness;  // encoded points (family paths) or point indices
  bool optimal = true;        // false when the time budget ran out
  double seconds = 0.0;
  unsigned long long nodes = 0;
};

/// Exact maximum size of a code with pairwise distance >= d via
/// branch-and-bound clique search. A nonpositive budget means unlimited.
/// When the budget expires the best code found so far is returned with
/// optimal = false.

/// q-ary Hamming family; codes are canonicalized by translating one word
/// to 0. Witness entries are base-q digit encodings.
MaxCodeResult max_code_size_hamming(int n, int q, int d, double budget_seconds = 0.0);

/// Binary Johnson family, distance measured in the Johnson metric; one
/// a-set is fixed by symmetry. Witness entries are bitmasks of weight a.
MaxCodeResult max_code_size_johnson(int n, int a, int d_johnson,
                                    double budget_seconds = 0.0);

/// Any explicit scheme; no symmetry assumptions, witness entries are point
/// indices.
MaxCodeResult max_code_size(const ExplicitScheme& scheme, int d,
                            double budget_seconds = 0.0);

}  // namespace delsarte
