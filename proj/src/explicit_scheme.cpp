#include "delsarte/explicit_scheme.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "delsarte/combinatorics.hpp"

namespace delsarte {

void ExplicitScheme::validate() const {
  if (size < 2) throw DomainError("scheme: |X| must be >= 2");
  if (size > kExplicitSchemeCap)
    throw CapExceeded("scheme: |X| exceeds the dense-engine cap " +
                      std::to_string(kExplicitSchemeCap));
  if (n < 1) throw DomainError("scheme: maximum distance must be >= 1");
  if (dist.rows() != size || dist.cols() != size)
    throw DomainError("scheme: distance matrix has wrong shape");
  std::vector<bool> seen(n + 1, false);
  for (int x = 0; x < size; ++x) {
    if (dist(x, x) != 0)
      throw DomainError("scheme: nonzero diagonal at row " + std::to_string(x));
    for (int y = 0; y < size; ++y) {
      int d = dist(x, y);
      if (d < 0 || d > n)
        throw DomainError("scheme: distance " + std::to_string(d) + " at (" +
                          std::to_string(x) + "," + std::to_string(y) + ") outside [0, n]");
      if (x != y && d == 0)
        throw DomainError("scheme: zero distance between distinct points " +
                          std::to_string(x) + " and " + std::to_string(y));
      if (dist(x, y) != dist(y, x))
        throw DomainError("scheme: asymmetric at (" + std::to_string(x) + "," +
                          std::to_string(y) + ")");
      seen[d] = true;
    }
  }
  for (int d = 0; d <= n; ++d)
    if (!seen[d])
      throw DomainError("scheme: distance value " + std::to_string(d) +
                        " never occurs (n is not tight)");
  for (int x = 0; x < size; ++x)
    for (int y = x + 1; y < size; ++y)
      for (int z = 0; z < size; ++z)
        if (dist(x, y) > dist(x, z) + dist(z, y))
          throw DomainError("scheme: triangle inequality fails for points " +
                            std::to_string(x) + ", " + std::to_string(z) + ", " +
                            std::to_string(y));
}

ExplicitScheme parse_scheme(std::istream& in) {
  std::vector<std::pair<int, std::string>> lines;  // (line number, stripped text)
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.emplace_back(lineno, raw);
  }
  if (lines.empty()) throw ParseError("scheme file: empty input");
  ExplicitScheme scheme;
  {
    std::istringstream head(lines[0].second);
    if (!(head >> scheme.size >> scheme.n))
      throw ParseError("scheme file line " + std::to_string(lines[0].first) +
                       ": expected '<|X|> <n>'");
  }
  if (scheme.size < 2 || scheme.size > kExplicitSchemeCap)
    throw ParseError("scheme file: |X| = " + std::to_string(scheme.size) + " out of range");
  if (static_cast<int>(lines.size()) != scheme.size + 1)
    throw ParseError("scheme file: expected " + std::to_string(scheme.size) +
                     " matrix rows, found " + std::to_string(lines.size() - 1));
  scheme.dist.resize(scheme.size, scheme.size);
  for (int r = 0; r < scheme.size; ++r) {
    std::istringstream row(lines[r + 1].second);
    for (int c = 0; c < scheme.size; ++c) {
      int value;
      if (!(row >> value))
        throw ParseError("scheme file line " + std::to_string(lines[r + 1].first) +
                         ": row " + std::to_string(r) + " needs " +
                         std::to_string(scheme.size) + " integers, stopped at column " +
                         std::to_string(c));
      scheme.dist(r, c) = value;
    }
    int extra;
    if (row >> extra)
      throw ParseError("scheme file line " + std::to_string(lines[r + 1].first) +
                       ": trailing data after " + std::to_string(scheme.size) + " entries");
  }
  for (int r = 0; r < scheme.size; ++r)
    for (int c = 0; c < scheme.size; ++c)
      if (scheme.dist(r, c) != scheme.dist(c, r))
        throw ParseError("scheme file line " + std::to_string(lines[r + 1].first) +
                         ": matrix not symmetric at row " + std::to_string(r) + ", column " +
                         std::to_string(c) + " (" + std::to_string(scheme.dist(r, c)) +
                         " vs " + std::to_string(scheme.dist(c, r)) + ")");
  scheme.validate();
  return scheme;
}

ExplicitScheme parse_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scheme file '" + path + "'");
  return parse_scheme(in);
}

AdjacencySet adjacency_set(const ExplicitScheme& scheme) {
  AdjacencySet adj;
  adj.size = scheme.size;
  adj.n = scheme.n;
  adj.D.assign(scheme.n + 1, Eigen::MatrixXi::Zero(scheme.size, scheme.size));
  for (int x = 0; x < scheme.size; ++x)
    for (int y = 0; y < scheme.size; ++y) adj.D[scheme.dist(x, y)](x, y) = 1;
  return adj;
}

IntersectionTable validate_scheme(const ExplicitScheme& scheme) {
  scheme.validate();
  const int n = scheme.n;
  const int size = scheme.size;
  IntersectionTable table;
  table.n = n;
  table.data.assign(static_cast<size_t>(n + 1) * (n + 1) * (n + 1), -1);
  std::vector<std::pair<int, int>> reference_pair((n + 1), {-1, -1});
  Eigen::MatrixXi counts(n + 1, n + 1);
  for (int x = 0; x < size; ++x) {
    for (int z = 0; z < size; ++z) {
      const int k = scheme.dist(x, z);
      counts.setZero();
      for (int y = 0; y < size; ++y) ++counts(scheme.dist(x, y), scheme.dist(y, z));
      if (reference_pair[k].first < 0) {
        reference_pair[k] = {x, z};
        for (int i = 0; i <= n; ++i)
          for (int j = 0; j <= n; ++j) table.at(i, j, k) = counts(i, j);
      } else {
        for (int i = 0; i <= n; ++i)
          for (int j = 0; j <= n; ++j)
            if (table.at(i, j, k) != counts(i, j)) {
              auto [rx, rz] = reference_pair[k];
              throw EquipartitionViolation(
                  i, j, k,
                  "pair (" + std::to_string(rx) + "," + std::to_string(rz) + ") sees " +
                      std::to_string(table.at(i, j, k)) + " midpoints, pair (" +
                      std::to_string(x) + "," + std::to_string(z) + ") sees " +
                      std::to_string(counts(i, j)));
            }
      }
    }
  }
  for (int k = 0; k <= n; ++k)
    if (reference_pair[k].first < 0)
      throw DomainError("scheme: no pair at distance " + std::to_string(k));
  for (int k = 0; k < n; ++k)
    if (table.at(1, k, k + 1) == 0) throw DegenerateScheme(k);
  return table;
}

ProductCheckReport adjacency_product_check(const AdjacencySet& adj,
                                           const IntersectionTable& table) {
  ProductCheckReport report;
  const int n = adj.n;
  using LongMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
  std::vector<LongMatrix> D(n + 1);
  for (int i = 0; i <= n; ++i) D[i] = adj.D[i].cast<long long>();
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      LongMatrix product = D[i] * D[j];
      LongMatrix expected = LongMatrix::Zero(adj.size, adj.size);
      for (int k = 0; k <= n; ++k)
        if (table.at(i, j, k) != 0) expected += table.at(i, j, k) * D[k];
      if ((product.array() != expected.array()).any()) {
        report.ok = false;
        bool recorded = false;
        for (int r = 0; r < adj.size && !recorded; ++r)
          for (int c = 0; c < adj.size && !recorded; ++c)
            if (product(r, c) != expected(r, c)) {
              report.mismatches.push_back(
                  ProductMismatch{i, j, r, c, product(r, c), expected(r, c)});
              recorded = true;
            }
      }
    }
  }
  return report;
}

namespace {
int digits_distance(long a, long b, int n, int q) {
  int d = 0;
  for (int i = 0; i < n; ++i) {
    if (a % q != b % q) ++d;
    a /= q;
    b /= q;
  }
  return d;
}

std::vector<unsigned> subsets_of_weight(int n, int a) {
  std::vector<unsigned> words;
  for (unsigned w = 0; w < (1u << n); ++w)
    if (__builtin_popcount(w) == a) words.push_back(w);
  return words;
}
}  // namespace

ExplicitScheme hamming_scheme(int n, int q) {
  if (n < 1 || q < 2) throw DomainError("hamming_scheme: need n >= 1, q >= 2");
  double size_estimate = std::pow(static_cast<double>(q), n);
  if (size_estimate > kExplicitSchemeCap)
    throw CapExceeded("hamming_scheme: q^n exceeds the dense-engine cap");
  const int size = static_cast<int>(size_estimate + 0.5);
  ExplicitScheme scheme;
  scheme.size = size;
  scheme.n = n;
  scheme.dist.resize(size, size);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) scheme.dist(x, y) = digits_distance(x, y, n, q);
  return scheme;
}

ExplicitScheme johnson_scheme(int n, int a) {
  if (a < 1 || 2 * a > n) throw DomainError("johnson_scheme: need 1 <= a <= floor(n/2)");
  if (n > 30 || binomial(n, a) > Integer(kExplicitSchemeCap))
    throw CapExceeded("johnson_scheme: C(n,a) exceeds the dense-engine cap");
  std::vector<unsigned> words = subsets_of_weight(n, a);
  const int size = static_cast<int>(words.size());
  ExplicitScheme scheme;
  scheme.size = size;
  scheme.n = a;
  scheme.dist.resize(size, size);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      scheme.dist(x, y) = __builtin_popcount(words[x] ^ words[y]) / 2;
  return scheme;
}

std::string hamming_point_label(int n, int q, int index) {
  std::string s(n, '0');
  long v = index;
  for (int i = n - 1; i >= 0; --i) {
    s[i] = static_cast<char>('0' + (v % q));
    v /= q;
  }
  return s;
}

std::string johnson_point_label(int n, int a, int index) {
  std::vector<unsigned> words = subsets_of_weight(n, a);
  unsigned w = words.at(index);
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if (w & (1u << i)) s[n - 1 - i] = '1';
  return s;
}

}  // namespace delsarte
