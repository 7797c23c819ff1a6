#include "delsarte/polynomials.hpp"

#include "delsarte/errors.hpp"

namespace delsarte {

void KrawtchoukSpec::validate() const {
  if (n < 1) throw DomainError("KrawtchoukSpec: n must be >= 1");
  if (q < 2) throw DomainError("KrawtchoukSpec: q must be >= 2");
  if (k < 0 || k > n) throw DomainError("KrawtchoukSpec: k must lie in [0, n]");
}

void HahnSpec::validate() const {
  if (n < 2) throw DomainError("HahnSpec: n must be >= 2");
  if (a < 0 || 2 * a > n) throw DomainError("HahnSpec: a must lie in [0, floor(n/2)]");
  if (k < 0 || k > a) throw DomainError("HahnSpec: k must lie in [0, a]");
}

Rational krawtchouk_eval(const KrawtchoukSpec& spec, long x) {
  spec.validate();
  if (x < 0 || x > spec.n) throw DomainError("krawtchouk_eval: x must lie in [0, n]");
  Integer acc(0);
  for (long j = 0; j <= spec.k; ++j) {
    Integer term = binomial(x, j) * binomial(spec.n - x, spec.k - j) *
                   Integer::pow(spec.q - 1, static_cast<unsigned long>(spec.k - j));
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return Rational(acc);
}

Integer krawtchouk_int(long n, long q, long k, long x) {
  KrawtchoukSpec{n, q, k}.validate();
  if (x < 0 || x > n) throw DomainError("krawtchouk_int: x must lie in [0, n]");
  // (j+1) K_{j+1}(x) = [(q-1)(n-j) + j - qx] K_j(x) - (q-1)(n-j+1) K_{j-1}(x)
  Integer prev(1);                              // K_0
  if (k == 0) return prev;
  Integer cur((q - 1) * n - q * x);             // K_1
  for (long j = 1; j < k; ++j) {
    Integer next = Integer((q - 1) * (n - j) + j - q * x) * cur -
                   Integer((q - 1) * (n - j + 1)) * prev;
    next = Integer::div_exact(next, Integer(j + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Integer johnson_valency(long n, long a, long j) { return binomial(a, j) * binomial(n - a, j); }

Integer johnson_multiplicity(long n, long k) { return binomial(n, k) - binomial(n, k - 1); }

Rational hahn_eval(const HahnSpec& spec, long x) {
  spec.validate();
  if (x < 0 || x > spec.a) throw DomainError("hahn_eval: x must lie in [0, a]");
  // H_k^{n,a}(X) = m_k * sum_j (-1)^j C(k,j) C(n+1-k,j) / v_j * C(X,j),
  // with the Johnson valencies v_j = C(a,j) C(n-a,j) and
  // m_k = C(n,k) - C(n,k-1).
  Rational acc(0);
  for (long j = 0; j <= spec.k; ++j) {
    Integer num = binomial(spec.k, j) * binomial(spec.n + 1 - spec.k, j) * binomial(x, j);
    Integer den = johnson_valency(spec.n, spec.a, j);
    Rational term(num, den);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return Rational(johnson_multiplicity(spec.n, spec.k)) * acc;
}

namespace {
template <typename Seq>
std::optional<long> first_nonpositive_impl(const Seq& values, long size) {
  if (size == 0) throw DomainError("first_nonpositive_index: empty sequence");
  if (!(values[0] > Rational(0)))
    throw DomainError("first_nonpositive_index: values[0] must be positive");
  for (long x = 1; x < size; ++x)
    if (values[x].sign() <= 0) return x;
  return std::nullopt;
}
}  // namespace

std::optional<long> first_nonpositive_index(const std::vector<Rational>& values) {
  return first_nonpositive_impl(values, static_cast<long>(values.size()));
}

std::optional<long> first_nonpositive_index(const RationalVector& values) {
  return first_nonpositive_impl(values, static_cast<long>(values.size()));
}

std::optional<ZeroBracket> bracket_first_real_zero(const std::function<Rational(long)>& poly,
                                                   long hi) {
  Rational p0 = poly(0);
  if (!(p0 > Rational(0)))
    throw DomainError("bracket_first_real_zero: poly(0) must be positive");
  for (long x = 1; x <= hi; ++x) {
    int s = poly(x).sign();
    if (s == 0) return ZeroBracket{x, x, true};
    if (s < 0) return ZeroBracket{x - 1, x, true};
  }
  return std::nullopt;
}

Rational generalized_binomial(const Rational& x, long j) {
  if (j < 0) return Rational(0);
  Rational acc(1);
  for (long i = 0; i < j; ++i) acc *= (x - Rational(i));
  Integer fact(1);
  for (long i = 2; i <= j; ++i) fact *= i;
  return acc / Rational(fact);
}

Rational krawtchouk_eval_at(const KrawtchoukSpec& spec, const Rational& x) {
  spec.validate();
  Rational acc(0);
  for (long j = 0; j <= spec.k; ++j) {
    Rational term = generalized_binomial(x, j) *
                    generalized_binomial(Rational(spec.n) - x, spec.k - j) *
                    Rational(Integer::pow(spec.q - 1, static_cast<unsigned long>(spec.k - j)));
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

Rational hahn_eval_at(const HahnSpec& spec, const Rational& x) {
  spec.validate();
  Rational acc(0);
  for (long j = 0; j <= spec.k; ++j) {
    Rational term = Rational(binomial(spec.k, j) * binomial(spec.n + 1 - spec.k, j),
                             johnson_valency(spec.n, spec.a, j)) *
                    generalized_binomial(x, j);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return Rational(johnson_multiplicity(spec.n, spec.k)) * acc;
}

std::pair<Rational, Rational> refine_zero(
    const std::function<Rational(const Rational&)>& poly, const ZeroBracket& bracket,
    int bits) {
  Rational lo(bracket.lower), hi(bracket.upper);
  if (bracket.lower == bracket.upper) return {lo, hi};
  const int lo_sign = poly(lo).sign();
  Rational target(1);
  for (int i = 0; i < bits; ++i) target *= Rational(1, 2);
  while (hi - lo > target) {
    Rational mid = (lo + hi) * Rational(1, 2);
    int s = poly(mid).sign();
    if (s == 0) return {mid, mid};
    if (s == lo_sign)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

}  // namespace delsarte
