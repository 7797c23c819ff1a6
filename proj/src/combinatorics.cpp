#include "delsarte/combinatorics.hpp"

namespace delsarte {

Integer binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial: n must be nonnegative, got " + std::to_string(n));
  if (k < 0 || k > n) return Integer(0);
  return Integer::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

Integer integer_pow(long base, long exponent) {
  if (base < 0 || exponent < 0) throw DomainError("integer_pow: negative argument");
  return Integer::pow(base, static_cast<unsigned long>(exponent));
}

}  // namespace delsarte
