#pragma once

#include <gmp.h>

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace delsarte {

/// Arbitrary-precision signed integer backed by GMP.
class Integer {
 public:
  Integer() { mpz_init(z_); }
  Integer(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
  Integer(int v) : Integer(static_cast<long>(v)) {}
  explicit Integer(const std::string& decimal) {
    if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
      mpz_clear(z_);
      throw std::invalid_argument("Integer: bad decimal string '" + decimal + "'");
    }
  }
  Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
  Integer(Integer&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  Integer& operator=(const Integer& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~Integer() { mpz_clear(z_); }

  Integer& operator+=(const Integer& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  Integer& operator-=(const Integer& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  Integer& operator*=(const Integer& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }
  Integer& operator*=(long v) {
    mpz_mul_si(z_, z_, v);
    return *this;
  }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator*(Integer a, long b) { return a *= b; }
  friend Integer operator*(long a, Integer b) { return b *= a; }
  Integer operator-() const {
    Integer r(*this);
    mpz_neg(r.z_, r.z_);
    return r;
  }

  int cmp(const Integer& o) const { return mpz_cmp(z_, o.z_); }
  int cmp(long v) const { return mpz_cmp_si(z_, v); }
  friend bool operator==(const Integer& a, const Integer& b) { return a.cmp(b) == 0; }
  friend bool operator!=(const Integer& a, const Integer& b) { return a.cmp(b) != 0; }
  friend bool operator<(const Integer& a, const Integer& b) { return a.cmp(b) < 0; }
  friend bool operator<=(const Integer& a, const Integer& b) { return a.cmp(b) <= 0; }
  friend bool operator>(const Integer& a, const Integer& b) { return a.cmp(b) > 0; }
  friend bool operator>=(const Integer& a, const Integer& b) { return a.cmp(b) >= 0; }
  friend bool operator==(const Integer& a, long b) { return a.cmp(b) == 0; }
  friend bool operator!=(const Integer& a, long b) { return a.cmp(b) != 0; }

  int sign() const { return mpz_sgn(z_); }
  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
  long to_long() const {
    if (!fits_long()) throw std::overflow_error("Integer: value does not fit in long");
    return mpz_get_si(z_);
  }
  double to_double() const { return mpz_get_d(z_); }

  /// log2 of a positive value, accurate even far beyond double range.
  double log2() const {
    if (sign() <= 0) throw std::domain_error("Integer::log2: nonpositive value");
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, z_);
    return std::log2(mant) + static_cast<double>(exp2);
  }

  std::string to_string() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, out.size() + 1);
    return out;
  }

  static Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.z_, n, k);
    return r;
  }
  static Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.z_, base.z_, e);
    return r;
  }
  static Integer pow(long base, unsigned long e) { return pow(Integer(base), e); }

  /// Quotient of an exact division; throws if b does not divide a.
  static Integer div_exact(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("Integer::div_exact: division by zero");
    if (mpz_divisible_p(a.z_, b.z_) == 0)
      throw std::logic_error("Integer::div_exact: inexact division");
    Integer r;
    mpz_divexact(r.z_, a.z_, b.z_);
    return r;
  }

  const mpz_t& raw() const { return z_; }
  mpz_t& raw() { return z_; }

 private:
  mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

/// Exact rational, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long v) {  // NOLINT: implicit by design
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  Rational(int v) : Rational(static_cast<long>(v)) {}
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
  }
  Rational(const Integer& v) {  // NOLINT: implicit by design
    mpq_init(q_);
    mpq_set_z(q_, v.raw());
  }
  Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
  }
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r(*this);
    mpq_neg(r.q_, r.q_);
    return r;
  }

  int cmp(const Rational& o) const { return mpq_cmp(q_, o.q_); }
  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return a.cmp(b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.cmp(b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.cmp(b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.cmp(b) >= 0; }

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  Integer numerator() const {
    Integer n;
    mpz_set(n.raw(), mpq_numref(q_));
    return n;
  }
  Integer denominator() const {
    Integer d;
    mpz_set(d.raw(), mpq_denref(q_));
    return d;
  }

  double to_double() const { return mpq_get_d(q_); }

  /// Exact fraction rendering: "p" when integral, else "p/q".
  std::string to_string() const {
    Integer num = numerator();
    if (is_integer()) return num.to_string();
    return num.to_string() + "/" + denominator().to_string();
  }

  Rational abs() const {
    Rational r(*this);
    mpq_abs(r.q_, r.q_);
    return r;
  }

 private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline const Rational& scalar_abs_helper(const Rational& r) { return r; }

}  // namespace delsarte

namespace Eigen {
template <>
struct NumTraits<delsarte::Rational> : GenericNumTraits<delsarte::Rational> {
  typedef delsarte::Rational Real;
  typedef delsarte::Rational NonInteger;
  typedef delsarte::Rational Nested;
  typedef delsarte::Rational Literal;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
};
}  // namespace Eigen
