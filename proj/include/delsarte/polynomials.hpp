#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "delsarte/combinatorics.hpp"
#include "delsarte/rational.hpp"

namespace delsarte {

/// Krawtchouk polynomial K_k^{n,q}.
struct KrawtchoukSpec {
  long n;  // length, >= 1
  long q;  // alphabet size, >= 2
  long k;  // degree, in [0, n]

  void validate() const;
};

/// Hahn polynomial H_k^{n,a} on the sphere of radius a.
struct HahnSpec {
  long n;  // ambient length
  long a;  // sphere radius, in [0, floor(n/2)]
  long k;  // degree, in [0, a]

  void validate() const;
};

/// K_k^{n,q}(x) for integer x in [0, n]. The value is always integral.
Rational krawtchouk_eval(const KrawtchoukSpec& spec, long x);

/// Same value as an Integer, via the three-term degree recurrence. Suitable
/// for large n where only a few (x, k) pairs are needed.
Integer krawtchouk_int(long n, long q, long k, long x);

/// H_k^{n,a}(x) for integer x in [0, a].
Rational hahn_eval(const HahnSpec& spec, long x);

/// Generalized binomial C(x, j) = x(x-1)...(x-j+1)/j! at a rational point.
Rational generalized_binomial(const Rational& x, long j);

/// Defining-sum evaluations at rational arguments, used by zero refinement.
Rational krawtchouk_eval_at(const KrawtchoukSpec& spec, const Rational& x);
Rational hahn_eval_at(const HahnSpec& spec, const Rational& x);

/// Johnson-scheme valency C(a,j) * C(n-a,j).
Integer johnson_valency(long n, long a, long j);

/// Johnson-scheme multiplicity C(n,k) - C(n,k-1).
Integer johnson_multiplicity(long n, long k);

/// Smallest index x >= 1 with values[x] <= 0, or nullopt when all are
/// positive. Requires values[0] > 0.
std::optional<long> first_nonpositive_index(const std::vector<Rational>& values);
std::optional<long> first_nonpositive_index(const RationalVector& values);

/// Integer bracket around the first real zero of a polynomial sampled on
/// integers. lower == upper means the zero is exactly at that integer.
struct ZeroBracket {
  long lower;
  long upper;
  bool certified;  // strict sign change across the bracket, or an exact zero
};

/// Scans p on 0..hi for the first sign change; requires p(0) > 0.
std::optional<ZeroBracket> bracket_first_real_zero(
    const std::function<Rational(long)>& poly, long hi);

/// Shrinks a certified bracket by rational bisection until its width is at
/// most 2^-bits. Intended for reporting; downstream bounds only need the
/// integer bracket.
std::pair<Rational, Rational> refine_zero(const std::function<Rational(const Rational&)>& poly,
                                          const ZeroBracket& bracket, int bits);

}  // namespace delsarte
