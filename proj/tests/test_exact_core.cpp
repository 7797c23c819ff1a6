#include <random>

#include "delsarte/combinatorics.hpp"
#include "delsarte/polynomials.hpp"
#include "doctest.h"

using namespace delsarte;

namespace {

// Independent oracle: defining sum evaluated term by term, no recurrences.
Rational krawtchouk_sum_oracle(long n, long q, long k, long x) {
  Rational acc(0);
  for (long j = 0; j <= k; ++j) {
    Rational term = Rational(binomial(x, j)) * Rational(binomial(n - x, k - j)) *
                    Rational(Integer::pow(q - 1, k - j));
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(Rational(-4, -8) == Rational(1, 2));
  CHECK(Rational(2, -4).to_string() == "-1/2");
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(7, 2).numerator() == Integer(7));
  CHECK(Rational(7, 2).denominator() == Integer(2));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("binomial") {
  CHECK(binomial(8, 3) == Integer(56));
  CHECK(binomial(4, 5) == Integer(0));
  CHECK(binomial(0, 0) == Integer(1));
  CHECK(binomial(5, -1) == Integer(0));
  CHECK_THROWS_AS(binomial(-1, 0), DomainError);
}

TEST_CASE("krawtchouk evaluation") {
  CHECK(krawtchouk_eval({8, 2, 3}, 0) == Rational(56));  // p_i(0) = v_i
  CHECK(krawtchouk_eval({8, 2, 1}, 3) == Rational(2));   // q_1(i) = (q-1)n - qi
  // term-by-term: 20 - 30 + 6 + 0
  CHECK(krawtchouk_eval({8, 2, 3}, 2) == Rational(-4));
  CHECK(Rational(binomial(2, 0) * binomial(6, 3)) == Rational(20));
  CHECK(Rational(binomial(2, 1) * binomial(6, 2)) == Rational(30));
  CHECK(Rational(binomial(2, 2) * binomial(6, 1)) == Rational(6));

  CHECK_THROWS_AS(krawtchouk_eval({8, 1, 3}, 0), DomainError);
  CHECK_THROWS_AS(krawtchouk_eval({8, 2, 9}, 0), DomainError);
  CHECK_THROWS_AS(krawtchouk_eval({8, 2, 3}, 9), DomainError);
}

TEST_CASE("krawtchouk recurrence path matches the defining sum") {
  for (long n : {5L, 8L, 11L}) {
    for (long q : {2L, 3L, 4L}) {
      for (long k = 0; k <= n; ++k)
        for (long x = 0; x <= n; ++x) {
          Rational direct = krawtchouk_sum_oracle(n, q, k, x);
          CHECK(Rational(krawtchouk_int(n, q, k, x)) == direct);
          CHECK(krawtchouk_eval({n, q, k}, x) == direct);
        }
    }
  }
}

TEST_CASE("krawtchouk values are integral") {
  for (long k = 0; k <= 10; ++k)
    for (long x = 0; x <= 10; ++x) CHECK(krawtchouk_eval({10, 3, k}, x).is_integer());
}

TEST_CASE("hahn evaluation") {
  CHECK(hahn_eval({4, 2, 1}, 0) == Rational(3));   // q_i(0) = m_i
  CHECK(hahn_eval({4, 2, 1}, 1) == Rational(0));   // 3 (1 - 4/4)
  CHECK(hahn_eval({4, 2, 1}, 2) == Rational(-3));
  // closed form q_1(i) = (n-1)(1 - n i / (a(n-a))) across several schemes
  for (long n : {6L, 9L}) {
    for (long a = 1; 2 * a <= n; ++a)
      for (long x = 0; x <= a; ++x) {
        Rational expected =
            Rational(n - 1) * (Rational(1) - Rational(n * x, a * (n - a)));
        CHECK(hahn_eval({n, a, 1}, x) == expected);
      }
  }
  CHECK_THROWS_AS(hahn_eval({4, 3, 1}, 0), DomainError);
  CHECK_THROWS_AS(hahn_eval({4, 2, 3}, 0), DomainError);
}

TEST_CASE("hahn orthogonality with Johnson weights") {
  // sum_k q_i(k) q_j(k) v_k = delta_ij m_i |X|
  const long n = 8, a = 3;
  const Integer card = binomial(n, a);
  for (long i = 0; i <= a; ++i)
    for (long j = 0; j <= a; ++j) {
      Rational acc(0);
      for (long k = 0; k <= a; ++k)
        acc += hahn_eval({n, a, i}, k) * hahn_eval({n, a, j}, k) *
               Rational(johnson_valency(n, a, k));
      Rational expected =
          (i == j) ? Rational(johnson_multiplicity(n, i) * card) : Rational(0);
      CHECK(acc == expected);
    }
}

TEST_CASE("krawtchouk orthogonality and duality symmetry") {
  for (long n = 1; n <= 12; ++n) {
    for (long q : {2L, 3L, 4L}) {
      std::vector<std::vector<Rational>> K(n + 1, std::vector<Rational>(n + 1));
      std::vector<Integer> weight(n + 1);
      for (long i = 0; i <= n; ++i) {
        weight[i] = binomial(n, i) * Integer::pow(q - 1, static_cast<unsigned long>(i));
        for (long j = 0; j <= n; ++j) K[i][j] = Rational(krawtchouk_int(n, q, i, j));
      }
      const Rational card(Integer::pow(q, static_cast<unsigned long>(n)));
      for (long i = 0; i <= n; ++i) {
        for (long j = 0; j <= n; ++j) {
          // m_j K_i(j) = v_i K_j(i); in the Hamming scheme v = m = weight
          CHECK(Rational(weight[j]) * K[i][j] == Rational(weight[i]) * K[j][i]);
          if (q == 2 || n <= 8) {
            Rational acc(0);
            for (long k = 0; k <= n; ++k) acc += K[i][k] * K[j][k] * Rational(weight[k]);
            Rational expected = (i == j) ? Rational(weight[i]) * card : Rational(0);
            CHECK(acc == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("first_nonpositive_index") {
  std::vector<Rational> kraw = {Rational(56), Rational(14), Rational(-4)};
  CHECK(first_nonpositive_index(kraw) == 2);
  std::vector<Rational> all_positive = {Rational(1), Rational(1), Rational(1)};
  CHECK(!first_nonpositive_index(all_positive).has_value());
  std::vector<Rational> with_zero = {Rational(5), Rational(0), Rational(3)};
  CHECK(first_nonpositive_index(with_zero) == 1);
  std::vector<Rational> bad = {Rational(0), Rational(1)};
  CHECK_THROWS_AS(first_nonpositive_index(bad), DomainError);
}

TEST_CASE("bracket_first_real_zero") {
  auto k1 = [](long x) { return krawtchouk_eval({8, 2, 1}, x); };
  auto bracket = bracket_first_real_zero(k1, 8);
  REQUIRE(bracket.has_value());
  CHECK(bracket->lower == 4);
  CHECK(bracket->upper == 4);
  CHECK(bracket->certified);

  auto k3 = [](long x) { return krawtchouk_eval({8, 2, 3}, x); };
  bracket = bracket_first_real_zero(k3, 8);
  REQUIRE(bracket.has_value());
  CHECK(bracket->lower == 1);
  CHECK(bracket->upper == 2);

  auto h1 = [](long x) { return hahn_eval({4, 2, 1}, x); };
  bracket = bracket_first_real_zero(h1, 2);
  REQUIRE(bracket.has_value());
  CHECK(bracket->lower == 1);
  CHECK(bracket->upper == 1);

  auto positive = [](long) { return Rational(1); };
  CHECK(!bracket_first_real_zero(positive, 8).has_value());
}

TEST_CASE("bracket ceiling agrees with first_nonpositive_index") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<long> pick_n(2, 12), pick_q(2, 4);
  for (int trial = 0; trial < 40; ++trial) {
    long n = pick_n(rng);
    long q = pick_q(rng);
    std::uniform_int_distribution<long> pick_k(1, n);
    long k = pick_k(rng);
    auto poly = [&](long x) { return krawtchouk_eval({n, q, k}, x); };
    auto bracket = bracket_first_real_zero(poly, n);
    RationalVector values(n + 1);
    for (long x = 0; x <= n; ++x) values(x) = poly(x);
    auto index = first_nonpositive_index(values);
    REQUIRE(bracket.has_value());  // K_k with k >= 1 always has a zero in [0, n]
    REQUIRE(index.has_value());
    CHECK(bracket->upper == *index);
  }
}

TEST_CASE("zero refinement by rational bisection") {
  KrawtchoukSpec spec{8, 2, 3};
  auto poly_int = [&](long x) { return krawtchouk_eval(spec, x); };
  auto poly_rat = [&](const Rational& x) { return krawtchouk_eval_at(spec, x); };
  auto bracket = bracket_first_real_zero(poly_int, 8);
  REQUIRE(bracket.has_value());
  auto [lo, hi] = refine_zero(poly_rat, *bracket, 32);
  Rational width_cap(Integer(1), Integer::pow(2, 32));
  CHECK(hi - lo <= width_cap);
  CHECK(poly_rat(lo).sign() >= 0);
  CHECK(poly_rat(hi).sign() <= 0);
  // consistency of the rational evaluator at integer points
  for (long x = 0; x <= 8; ++x) CHECK(poly_rat(Rational(x)) == poly_int(x));
}
