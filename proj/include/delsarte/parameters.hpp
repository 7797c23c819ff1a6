#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "delsarte/errors.hpp"
#include "delsarte/rational.hpp"

namespace delsarte {

/// Full materialization of intersection/Krein tables is refused above this
/// diameter; row-wise access stays available.
inline constexpr int kParameterTableCap = 512;

/// The complete parameter table of an association scheme: valencies v_i,
/// multiplicities m_i and the P/Q eigenvalue matrices with P(i,j) = p_i(j),
/// Q(i,j) = q_i(j). Rows of the intersection-number and Krein tables are
/// memoized on first use; the fill is idempotent so concurrent readers are
/// safe.
template <typename Scalar>
struct SchemeParametersT {
  int n = 0;
  Scalar cardinality{};
  std::vector<Scalar> v;
  std::vector<Scalar> m;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> P;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> Q;
  bool is_exact = false;
  bool is_q_polynomial = false;

  SchemeParametersT() : memo_(std::make_unique<Memo>()) {}
  SchemeParametersT(const SchemeParametersT& o)
      : n(o.n),
        cardinality(o.cardinality),
        v(o.v),
        m(o.m),
        P(o.P),
        Q(o.Q),
        is_exact(o.is_exact),
        is_q_polynomial(o.is_q_polynomial),
        memo_(std::make_unique<Memo>()) {}
  SchemeParametersT(SchemeParametersT&&) noexcept = default;
  SchemeParametersT& operator=(const SchemeParametersT& o) {
    if (this != &o) *this = SchemeParametersT(o);
    return *this;
  }
  SchemeParametersT& operator=(SchemeParametersT&&) noexcept = default;

  /// Row k -> p_{i,j}^k, computed as (1/|X|) sum_m p_i(m) p_j(m) q_m(k).
  const std::vector<Scalar>& intersection_row(int i, int j) const {
    return row(memo_->intersection, i, j, /*krein=*/false);
  }

  /// Row k -> q_{i,j}^k, computed as (1/|X|) sum_m q_i(m) q_j(m) p_m(k).
  const std::vector<Scalar>& krein_row(int i, int j) const {
    return row(memo_->krein, i, j, /*krein=*/true);
  }

 private:
  struct Memo {
    std::mutex mutex;
    std::map<std::pair<int, int>, std::vector<Scalar>> intersection;
    std::map<std::pair<int, int>, std::vector<Scalar>> krein;
  };

  const std::vector<Scalar>& row(std::map<std::pair<int, int>, std::vector<Scalar>>& cache,
                                 int i, int j, bool krein) const {
    if (i < 0 || i > n || j < 0 || j > n)
      throw DomainError("parameter table: index out of range");
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const auto& A = krein ? Q : P;
    const auto& B = krein ? P : Q;
    std::vector<Scalar> w(n + 1);
    for (int t = 0; t <= n; ++t) w[t] = A(key.first, t) * A(key.second, t);
    std::vector<Scalar> out(n + 1);
    for (int k = 0; k <= n; ++k) {
      Scalar acc{};
      for (int t = 0; t <= n; ++t) acc += w[t] * B(t, k);
      out[k] = acc / cardinality;
    }
    return cache.emplace(key, std::move(out)).first->second;
  }

  mutable std::unique_ptr<Memo> memo_;
};

using SchemeParameters = SchemeParametersT<Rational>;
using NumericSchemeParameters = SchemeParametersT<double>;

/// Exact table of the q-ary Hamming scheme H(n, q).
SchemeParameters hamming_parameters(int n, int q);

/// Exact table of the binary Johnson scheme J(n, a): Q from Hahn values,
/// P recovered as |X| * Q^{-1} by exact elimination.
SchemeParameters johnson_parameters(int n, int a);

/// p_{i,j}^k and q_{i,j}^k as single values.
Rational intersection_number(const SchemeParameters& params, int i, int j, int k);
Rational krein_parameter(const SchemeParameters& params, int i, int j, int k);

/// Unmemoized Krein parameter over any scalar; used to audit the numeric
/// engine output against the positivity guarantee.
template <typename Scalar>
Scalar krein_parameter_generic(const SchemeParametersT<Scalar>& params, int i, int j, int k) {
  Scalar acc{};
  for (int t = 0; t <= params.n; ++t)
    acc += params.Q(i, t) * params.Q(j, t) * params.P(t, k);
  return acc / params.cardinality;
}

struct QPolynomialViolation {
  int i, j, k;
  std::string reason;
};

/// Checks the Krein vanishing pattern and non-degeneracy with exact zero
/// tests. The first violation, if any, is reported through `violation`.
bool check_q_polynomial(const SchemeParameters& params,
                        std::optional<QPolynomialViolation>* violation = nullptr);

/// Exact inverse by rational Gauss-Jordan elimination.
RationalMatrix invert_rational(const RationalMatrix& m);

/// Consistency guard used by the family constructors and tests: the defining
/// identities p_0(j) = q_0(j) = 1, p_i(0) = v_i, q_i(0) = m_i,
/// m_j p_i(j) = v_i q_j(i) and P*Q = |X| * I, all exact.
void verify_parameter_identities(const SchemeParameters& params);

}  // namespace delsarte
