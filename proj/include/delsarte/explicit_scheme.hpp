#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "delsarte/errors.hpp"

namespace delsarte {

/// The dense engine refuses point sets larger than this.
inline constexpr int kExplicitSchemeCap = 4096;

/// A finite point set with an integer distance matrix, candidate for the
/// association-scheme axioms.
struct ExplicitScheme {
  int size = 0;  // |X|
  int n = 0;     // maximum distance
  Eigen::MatrixXi dist;

  /// Symmetry, zero diagonal, range, tightness of n and triangle inequality.
  void validate() const;
};

/// Text format: first non-comment line `<|X|> <n>`, then |X| rows of the
/// distance matrix. `#` starts a comment.
ExplicitScheme parse_scheme(std::istream& in);
ExplicitScheme parse_scheme_file(const std::string& path);

/// 0/1 adjacency matrices D_0..D_n of the distance relations.
struct AdjacencySet {
  int size = 0;
  int n = 0;
  std::vector<Eigen::MatrixXi> D;
};

AdjacencySet adjacency_set(const ExplicitScheme& scheme);

/// Triple-intersection counts p_{i,j}^k.
struct IntersectionTable {
  int n = 0;
  std::vector<long long> data;  // (i, j, k) row-major

  long long& at(int i, int j, int k) { return data[(static_cast<size_t>(i) * (n + 1) + j) * (n + 1) + k]; }
  long long at(int i, int j, int k) const {
    return data[(static_cast<size_t>(i) * (n + 1) + j) * (n + 1) + k];
  }
};

/// Verifies the equipartition property by counting, fills the table, and
/// checks non-degeneracy p_{1,k}^{k+1} != 0. Throws EquipartitionViolation
/// or DegenerateScheme.
IntersectionTable validate_scheme(const ExplicitScheme& scheme);

struct ProductMismatch {
  int i, j;      // which product D_i * D_j
  int row, col;  // first offending entry
  long long got, expected;
};

struct ProductCheckReport {
  bool ok = true;
  std::vector<ProductMismatch> mismatches;
};

/// Checks D_i * D_j == sum_k p_{i,j}^k D_k in exact integer arithmetic.
ProductCheckReport adjacency_product_check(const AdjacencySet& adj,
                                           const IntersectionTable& table);

/// F_q^n with the Hamming distance; requires q^n <= kExplicitSchemeCap.
ExplicitScheme hamming_scheme(int n, int q);

/// Weight-a binary words with the Johnson distance (half Hamming distance);
/// requires C(n,a) <= kExplicitSchemeCap.
ExplicitScheme johnson_scheme(int n, int a);

/// Point labels for the family builders (row index -> human-readable word).
std::string hamming_point_label(int n, int q, int index);
std::string johnson_point_label(int n, int a, int index);

}  // namespace delsarte
