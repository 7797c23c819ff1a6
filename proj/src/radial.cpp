#include "delsarte/radial.hpp"

namespace delsarte {

namespace {
void require_length(const SchemeParameters& params, const RadialFunction& f, const char* who) {
  if (f.size() != params.n + 1)
    throw DomainError(std::string(who) + ": radial function has length " +
                      std::to_string(f.size()) + ", expected " + std::to_string(params.n + 1));
}
}  // namespace

RadialFunction indicator(int n, int u) {
  if (u < 0 || u > n) throw DomainError("indicator: u out of range");
  RadialFunction f = RadialFunction::Zero(n + 1);
  f(u) = Rational(1);
  return f;
}

RadialFunction indicator_leq(int n, int e) {
  if (e < 0 || e > n) throw DomainError("indicator_leq: e out of range");
  RadialFunction f = RadialFunction::Zero(n + 1);
  for (int x = 0; x <= e; ++x) f(x) = Rational(1);
  return f;
}

RadialFunction hat(const SchemeParameters& params, const RadialFunction& f) {
  require_length(params, f, "hat");
  return params.P.transpose() * f;
}

RadialFunction tilde(const SchemeParameters& params, const RadialFunction& f) {
  require_length(params, f, "tilde");
  RadialFunction out = params.Q.transpose() * f;
  Rational inv_card = Rational(1) / params.cardinality;
  for (int x = 0; x <= params.n; ++x) out(x) *= inv_card;
  return out;
}

namespace {
RadialFunction convolve(const SchemeParameters& params, const RadialFunction& f,
                        const RadialFunction& g, bool krein) {
  const int n = params.n;
  RadialFunction out = RadialFunction::Zero(n + 1);
  for (int y = 0; y <= n; ++y) {
    if (f(y).is_zero()) continue;
    for (int z = 0; z <= n; ++z) {
      if (g(z).is_zero()) continue;
      Rational w = f(y) * g(z);
      const std::vector<Rational>& row =
          krein ? params.krein_row(y, z) : params.intersection_row(y, z);
      for (int x = 0; x <= n; ++x) {
        if (!row[x].is_zero()) out(x) += w * row[x];
      }
    }
  }
  return out;
}
}  // namespace

RadialFunction star(const SchemeParameters& params, const RadialFunction& f,
                    const RadialFunction& g) {
  require_length(params, f, "star");
  require_length(params, g, "star");
  return convolve(params, f, g, /*krein=*/false);
}

RadialFunction ostar(const SchemeParameters& params, const RadialFunction& f,
                     const RadialFunction& g) {
  require_length(params, f, "ostar");
  require_length(params, g, "ostar");
  RadialFunction out = convolve(params, f, g, /*krein=*/true);
  Rational inv_card = Rational(1) / params.cardinality;
  for (int x = 0; x <= params.n; ++x) out(x) *= inv_card;
  return out;
}

}  // namespace delsarte
