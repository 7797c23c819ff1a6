#pragma once

#include "delsarte/errors.hpp"
#include "delsarte/rational.hpp"

namespace delsarte {

/// C(n,k) with the convention C(n,k) = 0 for k < 0 or k > n. Requires n >= 0.
Integer binomial(long n, long k);

/// q^n as an exact integer. Requires q >= 0, n >= 0.
Integer integer_pow(long base, long exponent);

}  // namespace delsarte
