#include "delsarte/parameters.hpp"

#include "delsarte/polynomials.hpp"

namespace delsarte {

SchemeParameters hamming_parameters(int n, int q) {
  if (n < 1) throw DomainError("hamming_parameters: n must be >= 1");
  if (q < 2) throw DomainError("hamming_parameters: q must be >= 2");
  if (n > kParameterTableCap)
    throw CapExceeded("hamming_parameters: n exceeds the table cap " +
                      std::to_string(kParameterTableCap));
  SchemeParameters params;
  params.n = n;
  params.cardinality = Rational(integer_pow(q, n));
  params.v.resize(n + 1);
  params.m.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    Integer vi = binomial(n, i) * integer_pow(q - 1, i);
    params.v[i] = Rational(vi);
    params.m[i] = Rational(vi);
  }
  params.P.resize(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      params.P(i, j) = Rational(krawtchouk_int(n, q, i, j));
  params.Q = params.P;  // the Hamming scheme is self-dual
  params.is_exact = true;
  params.is_q_polynomial = true;
  return params;
}

SchemeParameters johnson_parameters(int n, int a) {
  if (a < 1 || 2 * a > n) throw DomainError("johnson_parameters: need 1 <= a <= floor(n/2)");
  if (a > kParameterTableCap)
    throw CapExceeded("johnson_parameters: a exceeds the table cap " +
                      std::to_string(kParameterTableCap));
  SchemeParameters params;
  params.n = a;
  params.cardinality = Rational(binomial(n, a));
  params.v.resize(a + 1);
  params.m.resize(a + 1);
  for (int i = 0; i <= a; ++i) {
    params.v[i] = Rational(johnson_valency(n, a, i));
    params.m[i] = Rational(johnson_multiplicity(n, i));
  }
  params.Q.resize(a + 1, a + 1);
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= a; ++j)
      params.Q(i, j) = hahn_eval(HahnSpec{n, a, i}, j);
  RationalMatrix qinv = invert_rational(params.Q);
  params.P.resize(a + 1, a + 1);
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= a; ++j)
      params.P(i, j) = params.cardinality * qinv(i, j);
  params.is_exact = true;
  params.is_q_polynomial = true;
  verify_parameter_identities(params);
  return params;
}

Rational intersection_number(const SchemeParameters& params, int i, int j, int k) {
  if (k < 0 || k > params.n) throw DomainError("intersection_number: k out of range");
  return params.intersection_row(i, j)[k];
}

Rational krein_parameter(const SchemeParameters& params, int i, int j, int k) {
  if (k < 0 || k > params.n) throw DomainError("krein_parameter: k out of range");
  return params.krein_row(i, j)[k];
}

bool check_q_polynomial(const SchemeParameters& params,
                        std::optional<QPolynomialViolation>* violation) {
  if (!params.is_exact) throw DomainError("check_q_polynomial: requires an exact table");
  if (params.n > kParameterTableCap)
    throw CapExceeded("check_q_polynomial: table materialization cap exceeded");
  const int n = params.n;
  auto report = [&](int i, int j, int k, std::string reason) {
    if (violation) *violation = QPolynomialViolation{i, j, k, std::move(reason)};
    return false;
  };
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const std::vector<Rational>& row = params.krein_row(i, j);
      for (int k = 0; k <= n; ++k) {
        bool must_vanish = (k > i + j) || (std::abs(j - i) > k);
        if (must_vanish && !row[k].is_zero())
          return report(i, j, k, "q_{i,j}^k = " + row[k].to_string() + " should vanish");
      }
    }
  }
  for (int k = 0; k < n; ++k) {
    if (params.krein_row(1, k)[k + 1].is_zero())
      return report(1, k, k + 1, "q_{1,k}^{k+1} vanishes (degenerate)");
  }
  return true;
}

RationalMatrix invert_rational(const RationalMatrix& m) {
  const Eigen::Index size = m.rows();
  if (m.cols() != size) throw DomainError("invert_rational: matrix must be square");
  RationalMatrix work = m;
  RationalMatrix inv = RationalMatrix::Identity(size, size);
  for (Eigen::Index col = 0; col < size; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < size; ++r) {
      if (!work(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw SingularMatrix("invert_rational: singular matrix");
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    Rational inv_pivot = Rational(1) / work(col, col);
    for (Eigen::Index c = 0; c < size; ++c) {
      work(col, c) *= inv_pivot;
      inv(col, c) *= inv_pivot;
    }
    for (Eigen::Index r = 0; r < size; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      Rational factor = work(r, col);
      for (Eigen::Index c = 0; c < size; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

void verify_parameter_identities(const SchemeParameters& params) {
  const int n = params.n;
  Rational sum_v(0), sum_m(0);
  for (int i = 0; i <= n; ++i) {
    sum_v += params.v[i];
    sum_m += params.m[i];
    if (params.P(0, i) != Rational(1) || params.Q(0, i) != Rational(1))
      throw SoundnessError("parameter table: p_0/q_0 must be constant 1");
    if (params.P(i, 0) != params.v[i])
      throw SoundnessError("parameter table: p_i(0) != v_i at i=" + std::to_string(i));
    if (params.Q(i, 0) != params.m[i])
      throw SoundnessError("parameter table: q_i(0) != m_i at i=" + std::to_string(i));
  }
  if (sum_v != params.cardinality || sum_m != params.cardinality)
    throw SoundnessError("parameter table: valencies or multiplicities do not sum to |X|");
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (params.m[j] * params.P(i, j) != params.v[i] * params.Q(j, i))
        throw SoundnessError("parameter table: m_j p_i(j) != v_i q_j(i) at (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
  RationalMatrix prod = params.P * params.Q;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      Rational expected = (i == j) ? params.cardinality : Rational(0);
      if (prod(i, j) != expected)
        throw SoundnessError("parameter table: P*Q != |X| I at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
    }
}

}  // namespace delsarte
