#include "delsarte/certificates.hpp"

#include <optional>

#include "delsarte/combinatorics.hpp"
#include "delsarte/polynomials.hpp"

namespace delsarte {

namespace {

void require_d(const SchemeParameters& params, int d, const char* who) {
  if (d < 1 || d > params.n)
    throw DomainError(std::string(who) + ": d must lie in [1, n], got " + std::to_string(d));
}

/// q_1 must be (weakly) decreasing for the EB and MRRW constructions.
void require_q1_decreasing(const SchemeParameters& params, const char* who) {
  for (int i = 0; i < params.n; ++i)
    if (params.Q(1, i) < params.Q(1, i + 1))
      throw Q1NotDecreasing(std::string(who) + ": q_1 increases between " +
                            std::to_string(i) + " and " + std::to_string(i + 1));
}

}  // namespace

Certificate check_and_bound(const SchemeParameters& params, const RadialFunction& f, int d) {
  require_d(params, d, "check_and_bound");
  if (!params.is_exact) throw DomainError("check_and_bound: requires an exact table");
  Certificate cert;
  cert.f = f;
  cert.fhat = hat(params, f);
  cert.d = d;
  for (int x = d; x <= params.n; ++x)
    if (f(x).sign() > 0)
      throw InfeasibleCertificate(InfeasibleCertificate::Condition::FNonpositiveBeyondD, x,
                                  "f(" + std::to_string(x) + ") = " + f(x).to_string() +
                                      " > 0 at x >= d");
  for (int x = 0; x <= params.n; ++x)
    if (cert.fhat(x).sign() < 0)
      throw InfeasibleCertificate(InfeasibleCertificate::Condition::FhatNonnegative, x,
                                  "fhat(" + std::to_string(x) + ") = " +
                                      cert.fhat(x).to_string() + " < 0");
  if (cert.fhat(0).sign() <= 0)
    throw InfeasibleCertificate(InfeasibleCertificate::Condition::FhatPositiveAtZero, 0,
                                "fhat(0) = " + cert.fhat(0).to_string() + " is not positive");
  cert.bound = params.cardinality * f(0) / cert.fhat(0);
  cert.closed_form_bound = cert.bound;
  cert.construction = CustomTag{};
  return cert;
}

Certificate hamming_certificate(const SchemeParameters& params, int d) {
  require_d(params, d, "hamming_certificate");
  const int e = (d - 1) / 2;
  RadialFunction ball = indicator_leq(params.n, e);
  Certificate cert = check_and_bound(params, star(params, ball, ball), d);
  Rational ball_size(0);
  for (int x = 0; x <= e; ++x) ball_size += params.v[x];
  cert.closed_form_bound = params.cardinality / ball_size;
  if (cert.bound != cert.closed_form_bound)
    throw SoundnessError("hamming_certificate: certificate value " + cert.bound.to_string() +
                         " differs from closed form " + cert.closed_form_bound.to_string());
  cert.construction = HammingTag{};
  return cert;
}

Certificate eb_certificate(const SchemeParameters& params, int d) {
  require_d(params, d, "eb_certificate");
  require_q1_decreasing(params, "eb_certificate");
  const int n = params.n;
  const Rational q1_0 = params.Q(1, 0);
  const Rational q1_d = params.Q(1, d);
  if (q1_0.sign() <= 0) throw DomainError("eb_certificate: q_1(0) must be positive");

  // Admissibility: q_1(u)^2 / q_1(0) >= q_1(d) + 1, compared cross-multiplied.
  const Rational threshold = q1_0 * (q1_d + Rational(1));
  std::optional<int> best;
  for (int u = 0; u <= n; ++u) {
    const Rational q1_u = params.Q(1, u);
    if (q1_u * q1_u >= threshold) {
      if (!best || params.v[u] > params.v[*best]) best = u;
    }
  }
  if (!best) throw NoAdmissibleU("eb_certificate: no admissible u for d = " + std::to_string(d));
  const int u = *best;

  const std::vector<Rational>& self_row = params.intersection_row(u, u);
  RadialFunction f(n + 1);
  for (int x = 0; x <= n; ++x) f(x) = (params.Q(1, x) - q1_d) * self_row[x];
  Certificate cert = check_and_bound(params, f, d);
  cert.closed_form_bound = (q1_0 - q1_d) * params.cardinality / params.v[u];
  if (cert.bound > cert.closed_form_bound)
    throw SoundnessError("eb_certificate: certificate value exceeds the closed form");
  cert.construction = EbData{u};
  return cert;
}

bool dual_laplacian_check(const SchemeParameters& params, const RadialFunction& fhat,
                          const Rational& lambda) {
  if (fhat.size() != params.n + 1)
    throw DomainError("dual_laplacian_check: radial function has wrong length");
  RadialFunction lhs = ostar(params, indicator(params.n, 1), fhat);
  for (int x = 0; x <= params.n; ++x)
    if (params.cardinality * lhs(x) < lambda * fhat(x)) return false;
  return true;
}

Certificate mrrw_certificate(const SchemeParameters& params, int d) {
  require_d(params, d, "mrrw_certificate");
  if (!params.is_q_polynomial)
    throw NotQPolynomial("mrrw_certificate: scheme is not Q-polynomial");
  require_q1_decreasing(params, "mrrw_certificate");
  const int n = params.n;
  const Rational q1_d = params.Q(1, d);

  // Largest r_perp with q_1(d) + 1 <= q_1(r_perp); q_1 is decreasing, so
  // larger r_perp means a smaller support radius r below.
  int r_perp = -1;
  for (int c = n; c >= 0; --c) {
    if (q1_d + Rational(1) <= params.Q(1, c)) {
      r_perp = c;
      break;
    }
  }
  if (r_perp < 0)
    throw NoValidRPerp("mrrw_certificate: no r_perp with q_1(d)+1 <= q_1(r_perp)");

  RationalVector column(n + 1);
  for (int x = 0; x <= n; ++x) column(x) = params.Q(x, r_perp);
  std::optional<long> first_nonpos = first_nonpositive_index(column);
  if (!first_nonpos)
    throw NoSignChange("mrrw_certificate: q_x(r_perp) stays positive for r_perp = " +
                       std::to_string(r_perp));
  const int r = static_cast<int>(*first_nonpos);

  RadialFunction fhat = RadialFunction::Zero(n + 1);
  for (int x = 0; x < r; ++x) fhat(x) = column(x) / params.m[x];

  const Rational lambda = params.Q(1, r_perp);
  if (!dual_laplacian_check(params, fhat, lambda))
    throw SoundnessError("mrrw_certificate: dual Laplacian inequality failed");

  // Squared construction: ghat = |X| 1_{1} (*) (fhat (*) fhat) - q_1(d) (fhat (*) fhat).
  RadialFunction squared = ostar(params, fhat, fhat);
  RadialFunction laplace = ostar(params, indicator(n, 1), squared);
  RadialFunction ghat(n + 1);
  for (int x = 0; x <= n; ++x)
    ghat(x) = params.cardinality * laplace(x) - q1_d * squared(x);
  RadialFunction g = tilde(params, ghat);

  Certificate cert = check_and_bound(params, g, d);
  for (int x = 0; x <= n; ++x)
    if (cert.fhat(x) != ghat(x))
      throw SoundnessError("mrrw_certificate: hat(tilde(ghat)) disagrees with ghat");

  Rational mass(0);
  for (int x = 0; x < r; ++x) mass += params.m[x];
  cert.closed_form_bound = (params.Q(1, 0) - q1_d) * mass;
  if (cert.bound > cert.closed_form_bound)
    throw SoundnessError("mrrw_certificate: certificate value " + cert.bound.to_string() +
                         " exceeds the closed form " + cert.closed_form_bound.to_string());
  cert.construction = MrrwData{r_perp, r, lambda};
  return cert;
}

Rational hamming_bound_closed_form(long n, long q, long d) {
  if (n < 1 || q < 2 || d < 1 || d > n) throw DomainError("hamming_bound_closed_form: bad input");
  Integer ball(0);
  for (long x = 0; x <= (d - 1) / 2; ++x) ball += binomial(n, x) * integer_pow(q - 1, x);
  return Rational(integer_pow(q, n), ball);
}

EbClosedForm eb_bound_closed_form(long n, long q, long d) {
  if (n < 1 || q < 2 || d < 1 || d > n) throw DomainError("eb_bound_closed_form: bad input");
  // q_1(i) = (q-1)n - qi; admissible u needs q_1(u)^2 >= q_1(0)(q_1(d)+1).
  const Integer q1_0((q - 1) * n);
  const Integer q1_d((q - 1) * n - q * d);
  const Integer threshold = q1_0 * (q1_d + Integer(1));
  std::optional<long> best;
  Integer best_v(0);
  Integer v(1);  // v_0
  for (long u = 0; u <= n; ++u) {
    Integer q1_u((q - 1) * n - q * u);
    if (q1_u * q1_u >= threshold && v > best_v) {
      best = u;
      best_v = v;
    }
    // v_{u+1} = v_u (n-u)(q-1)/(u+1)
    if (u < n) v = Integer::div_exact(v * Integer((n - u) * (q - 1)), Integer(u + 1));
  }
  if (!best) throw NoAdmissibleU("eb_bound_closed_form: no admissible u");
  Integer numerator = (q1_0 - q1_d) * integer_pow(q, n);
  return EbClosedForm{Rational(numerator, best_v), *best};
}

MrrwClosedForm mrrw_bound_closed_form(long n, long q, long d) {
  if (n < 1 || q < 2 || d < 1 || d > n) throw DomainError("mrrw_bound_closed_form: bad input");
  // Largest r_perp with q r_perp <= q d - 1, i.e. r_perp = d - 1.
  const long r_perp = (q * d - 1) / q;
  if (r_perp == 0)
    throw NoSignChange("mrrw_bound_closed_form: q_x(0) = m_x stays positive (d = 1)");
  // Scan x -> q_x(r_perp) = K_x^{n,q}(r_perp) with the degree recurrence.
  long r = -1;
  Integer prev(1);
  Integer cur((q - 1) * n - q * r_perp);
  for (long x = 1; x <= n; ++x) {
    if (cur.sign() <= 0) {
      r = x;
      break;
    }
    if (x == n) break;
    Integer next = Integer((q - 1) * (n - x) + x - q * r_perp) * cur -
                   Integer((q - 1) * (n - x + 1)) * prev;
    next = Integer::div_exact(next, Integer(x + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (r < 0) throw NoSignChange("mrrw_bound_closed_form: no sign change in q_x(r_perp)");
  Integer mass(0);
  for (long x = 0; x < r; ++x) mass += binomial(n, x) * integer_pow(q - 1, x);
  return MrrwClosedForm{Rational(Integer(q * d) * mass), r_perp, r};
}

}  // namespace delsarte
