#include "delsarte/clique.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "delsarte/combinatorics.hpp"

namespace delsarte {

namespace {

using Clock = std::chrono::steady_clock;

struct Bits {
  std::vector<uint64_t> w;

  void resize(int nbits) { w.assign((nbits + 63) / 64, 0); }
  void set(int i) { w[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void clear(int i) { w[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void zero() { std::fill(w.begin(), w.end(), 0); }
  bool intersects(const Bits& o) const {
    for (size_t k = 0; k < w.size(); ++k)
      if (w[k] & o.w[k]) return true;
    return false;
  }
  void assign_and(const Bits& a, const Bits& b) {
    for (size_t k = 0; k < w.size(); ++k) w[k] = a.w[k] & b.w[k];
  }
  int popcount() const {
    int c = 0;
    for (uint64_t word : w) c += __builtin_popcountll(word);
    return c;
  }
  bool any() const {
    for (uint64_t word : w)
      if (word) return true;
    return false;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < w.size(); ++k) {
      uint64_t word = w[k];
      while (word) {
        int bit = __builtin_ctzll(word);
        f(static_cast<int>(k * 64 + bit));
        word &= word - 1;
      }
    }
  }
};

/// Branch-and-bound maximum clique with greedy coloring bounds, for graphs
/// that fit the dense bitset representation.
class DenseCliqueSolver {
 public:
  explicit DenseCliqueSolver(int n) : n_(n), adj_(n) {
    for (auto& row : adj_) row.resize(n);
  }

  void add_edge(int u, int v) {
    adj_[u].set(v);
    adj_[v].set(u);
  }

  MaxCodeResult solve(double budget_seconds) {
    start_ = Clock::now();
    budget_ = budget_seconds;
    stop_ = false;
    nodes_ = 0;

    best_ = 0;
    best_witness_.clear();
    greedy_seed();

    // Depth never exceeds the clique number; preallocating keeps level
    // references stable across recursion.
    levels_.assign(n_ + 2, Level{});
    for (auto& level : levels_) level.P.resize(n_);
    for (int v = 0; v < n_; ++v) levels_[0].P.set(v);
    stack_.clear();
    if (n_ > 0) expand(0, 0);

    MaxCodeResult result;
    result.size = best_;
    result.witness.assign(best_witness_.begin(), best_witness_.end());
    result.optimal = !stop_;
    result.nodes = nodes_;
    result.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return result;
  }

 private:
  struct Level {
    Bits P;
    std::vector<int> order;
    std::vector<int> color;
  };

  void greedy_seed() {
    Bits allowed;
    allowed.resize(n_);
    for (int v = 0; v < n_; ++v) allowed.set(v);
    std::vector<int> clique;
    for (int v = 0; v < n_; ++v) {
      if (!allowed.test(v)) continue;
      clique.push_back(v);
      allowed.assign_and(allowed, adj_[v]);
    }
    best_ = static_cast<long long>(clique.size());
    best_witness_ = std::move(clique);
  }

  bool out_of_time() {
    if (budget_ <= 0) return false;
    if ((nodes_ & 1023) != 0) return false;
    return std::chrono::duration<double>(Clock::now() - start_).count() > budget_;
  }

  int color_sort(const Bits& P, std::vector<int>& order, std::vector<int>& color) {
    int used = 0;
    P.for_each([&](int v) {
      int c = 0;
      while (c < used && class_bits_[c].intersects(adj_[v])) ++c;
      if (c == used) {
        if (used == static_cast<int>(class_bits_.size())) {
          class_bits_.emplace_back();
          class_bits_.back().resize(n_);
        }
        class_bits_[used].zero();
        ++used;
      }
      class_bits_[c].set(v);
    });
    int k = 0;
    for (int c = 0; c < used; ++c)
      class_bits_[c].for_each([&](int v) {
        if (k >= static_cast<int>(order.size())) {
          order.resize(k + 16);
          color.resize(k + 16);
        }
        order[k] = v;
        color[k] = c + 1;
        ++k;
      });
    return k;
  }

  void expand(int depth, int rsize) {
    ++nodes_;
    if (stop_ || out_of_time()) {
      stop_ = true;
      return;
    }
    Level& level = levels_[depth];
    int count = color_sort(level.P, level.order, level.color);
    for (int idx = count - 1; idx >= 0; --idx) {
      if (stop_) return;
      if (rsize + level.color[idx] <= best_) return;
      int v = level.order[idx];
      stack_.push_back(v);
      Level& child = levels_[depth + 1];
      child.P.assign_and(level.P, adj_[v]);
      if (child.P.any()) {
        expand(depth + 1, rsize + 1);
      } else if (rsize + 1 > best_) {
        best_ = rsize + 1;
        best_witness_ = stack_;
      }
      stack_.pop_back();
      level.P.clear(v);
    }
  }

  int n_;
  std::vector<Bits> adj_;
  std::vector<Bits> class_bits_;
  std::vector<Level> levels_;
  std::vector<int> stack_;
  long long best_ = 0;
  std::vector<int> best_witness_;
  Clock::time_point start_;
  double budget_ = 0;
  bool stop_ = false;
  unsigned long long nodes_ = 0;
};

/// Fallback for candidate sets too large for dense bitsets: plain
/// branch-and-bound with the candidate-count bound. Exact but only practical
/// when the maximum code is small.
class ListCliqueSolver {
 public:
  ListCliqueSolver(long count, std::function<bool(long, long)> adjacent)
      : count_(count), adjacent_(std::move(adjacent)) {}

  MaxCodeResult solve(double budget_seconds) {
    start_ = Clock::now();
    budget_ = budget_seconds;
    stop_ = false;
    nodes_ = 0;
    best_ = 0;
    best_witness_.clear();
    std::vector<long> all(count_);
    for (long i = 0; i < count_; ++i) all[i] = i;
    stack_.clear();
    expand(all, 0);
    MaxCodeResult result;
    result.size = best_;
    result.witness = best_witness_;
    result.optimal = !stop_;
    result.nodes = nodes_;
    result.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return result;
  }

 private:
  bool out_of_time() {
    if (budget_ <= 0) return false;
    if ((nodes_ & 255) != 0) return false;
    return std::chrono::duration<double>(Clock::now() - start_).count() > budget_;
  }

  void expand(const std::vector<long>& P, long long rsize) {
    ++nodes_;
    if (stop_ || out_of_time()) {
      stop_ = true;
      return;
    }
    if (P.empty()) {
      if (rsize > best_) {
        best_ = rsize;
        best_witness_ = stack_;
      }
      return;
    }
    for (size_t i = 0; i < P.size(); ++i) {
      if (stop_) return;
      if (rsize + static_cast<long long>(P.size() - i) <= best_) return;
      long v = P[i];
      std::vector<long> next;
      next.reserve(P.size() - i - 1);
      for (size_t j = i + 1; j < P.size(); ++j)
        if (adjacent_(v, P[j])) next.push_back(P[j]);
      stack_.push_back(v);
      if (next.empty()) {
        if (rsize + 1 > best_) {
          best_ = rsize + 1;
          best_witness_ = stack_;
        }
      } else {
        expand(next, rsize + 1);
      }
      stack_.pop_back();
    }
  }

  long count_;
  std::function<bool(long, long)> adjacent_;
  long long best_ = 0;
  std::vector<long> best_witness_, stack_;
  Clock::time_point start_;
  double budget_ = 0;
  bool stop_ = false;
  unsigned long long nodes_ = 0;
};

int qary_distance(long a, long b, int n, int q) {
  int d = 0;
  for (int i = 0; i < n; ++i) {
    if (a % q != b % q) ++d;
    a /= q;
    b /= q;
  }
  return d;
}

int qary_weight(long a, int n, int q) {
  int w = 0;
  for (int i = 0; i < n; ++i) {
    if (a % q != 0) ++w;
    a /= q;
  }
  return w;
}

}  // namespace

MaxCodeResult max_code_size_hamming(int n, int q, int d, double budget_seconds) {
  if (n < 1 || q < 2) throw DomainError("max_code_size_hamming: need n >= 1, q >= 2");
  if (d < 1 || d > n) throw DomainError("max_code_size_hamming: d must lie in [1, n]");
  double size_estimate = std::pow(static_cast<double>(q), n);
  if (size_estimate > static_cast<double>(kHammingOracleCap))
    throw CapExceeded("max_code_size_hamming: q^n exceeds the oracle cap 2^20");
  const long space = lround(size_estimate);
  if (d == 1) {
    MaxCodeResult result;
    result.size = space;
    result.optimal = true;
    if (space <= kGenericOracleCap) {
      result.witness.resize(space);
      for (long w = 0; w < space; ++w) result.witness[w] = w;
    }
    return result;
  }

  // Translate one codeword to 0: remaining words need weight >= d.
  const bool binary = (q == 2);
  std::vector<long> candidates;
  for (long w = 1; w < space; ++w) {
    int weight = binary ? __builtin_popcountll(w) : qary_weight(w, n, q);
    if (weight >= d) candidates.push_back(w);
  }

  MaxCodeResult result;
  if (static_cast<long>(candidates.size()) <= kGenericOracleCap) {
    DenseCliqueSolver solver(static_cast<int>(candidates.size()));
    for (size_t i = 0; i < candidates.size(); ++i)
      for (size_t j = i + 1; j < candidates.size(); ++j) {
        int dist = binary ? __builtin_popcountll(candidates[i] ^ candidates[j])
                          : qary_distance(candidates[i], candidates[j], n, q);
        if (dist >= d) solver.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    result = solver.solve(budget_seconds);
    for (auto& v : result.witness) v = candidates[v];
  } else {
    ListCliqueSolver solver(static_cast<long>(candidates.size()), [&](long a, long b) {
      return (binary ? __builtin_popcountll(candidates[a] ^ candidates[b])
                     : qary_distance(candidates[a], candidates[b], n, q)) >= d;
    });
    result = solver.solve(budget_seconds);
    for (auto& v : result.witness) v = candidates[v];
  }
  result.size += 1;  // the translated word 0
  result.witness.insert(result.witness.begin(), 0);
  return result;
}

MaxCodeResult max_code_size_johnson(int n, int a, int d_johnson, double budget_seconds) {
  if (a < 1 || 2 * a > n) throw DomainError("max_code_size_johnson: need 1 <= a <= floor(n/2)");
  if (d_johnson < 1 || d_johnson > a)
    throw DomainError("max_code_size_johnson: d must lie in [1, a]");
  if (n > 30 || binomial(n, a) > Integer(kHammingOracleCap))
    throw CapExceeded("max_code_size_johnson: C(n,a) exceeds the oracle cap");
  std::vector<long> words;
  for (long w = 0; w < (1L << n); ++w)
    if (__builtin_popcountll(w) == a) words.push_back(w);
  if (d_johnson == 1) {
    MaxCodeResult result;
    result.size = static_cast<long long>(words.size());
    result.optimal = true;
    if (result.size <= kGenericOracleCap) result.witness = words;
    return result;
  }

  // The symmetric group acts transitively on a-sets; fix the first word.
  const long base = words[0];
  std::vector<long> candidates;
  for (long w : words)
    if (__builtin_popcountll(w ^ base) / 2 >= d_johnson) candidates.push_back(w);

  MaxCodeResult result;
  if (static_cast<long>(candidates.size()) <= kGenericOracleCap) {
    DenseCliqueSolver solver(static_cast<int>(candidates.size()));
    for (size_t i = 0; i < candidates.size(); ++i)
      for (size_t j = i + 1; j < candidates.size(); ++j)
        if (__builtin_popcountll(candidates[i] ^ candidates[j]) / 2 >= d_johnson)
          solver.add_edge(static_cast<int>(i), static_cast<int>(j));
    result = solver.solve(budget_seconds);
    for (auto& v : result.witness) v = candidates[v];
  } else {
    ListCliqueSolver solver(static_cast<long>(candidates.size()), [&](long x, long y) {
      return __builtin_popcountll(candidates[x] ^ candidates[y]) / 2 >= d_johnson;
    });
    result = solver.solve(budget_seconds);
    for (auto& v : result.witness) v = candidates[v];
  }
  result.size += 1;
  result.witness.insert(result.witness.begin(), base);
  return result;
}

MaxCodeResult max_code_size(const ExplicitScheme& scheme, int d, double budget_seconds) {
  if (d < 1 || d > scheme.n) throw DomainError("max_code_size: d must lie in [1, n]");
  if (scheme.size > kGenericOracleCap)
    throw CapExceeded("max_code_size: |X| exceeds the generic oracle cap");
  if (d == 1) {
    MaxCodeResult result;
    result.size = scheme.size;
    result.witness.resize(scheme.size);
    for (int i = 0; i < scheme.size; ++i) result.witness[i] = i;
    result.optimal = true;
    return result;
  }
  // No symmetry assumption: order vertices by compatibility degree.
  std::vector<int> degree(scheme.size, 0);
  for (int x = 0; x < scheme.size; ++x)
    for (int y = 0; y < scheme.size; ++y)
      if (x != y && scheme.dist(x, y) >= d) ++degree[x];
  std::vector<int> relabel(scheme.size);
  for (int i = 0; i < scheme.size; ++i) relabel[i] = i;
  std::stable_sort(relabel.begin(), relabel.end(),
                   [&](int x, int y) { return degree[x] > degree[y]; });

  DenseCliqueSolver solver(scheme.size);
  for (int i = 0; i < scheme.size; ++i)
    for (int j = i + 1; j < scheme.size; ++j)
      if (scheme.dist(relabel[i], relabel[j]) >= d) solver.add_edge(i, j);
  MaxCodeResult result = solver.solve(budget_seconds);
  for (auto& v : result.witness) v = relabel[v];
  return result;
}

}  // namespace delsarte
