#include <random>

#include "delsarte/codes.hpp"
#include "delsarte/parameters.hpp"
#include "delsarte/polynomials.hpp"
#include "delsarte/radial.hpp"
#include "doctest.h"

using namespace delsarte;

namespace {

RadialFunction random_radial(int n, std::mt19937& rng, bool nonnegative = false) {
  std::uniform_int_distribution<long> num(nonnegative ? 0 : -20, 20);
  std::uniform_int_distribution<long> den(1, 10);
  RadialFunction f(n + 1);
  for (int x = 0; x <= n; ++x) f(x) = Rational(num(rng), den(rng));
  return f;
}

bool exact_equal(const RadialFunction& a, const RadialFunction& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

RadialFunction pointwise(const RadialFunction& a, const RadialFunction& b) {
  RadialFunction out(a.size());
  for (int i = 0; i < a.size(); ++i) out(i) = a(i) * b(i);
  return out;
}

}  // namespace

TEST_CASE("hamming parameter table") {
  SchemeParameters params = hamming_parameters(7, 2);
  CHECK(params.cardinality == Rational(128));
  std::vector<long> expected_v = {1, 7, 21, 35, 35, 21, 7, 1};
  for (int i = 0; i <= 7; ++i) CHECK(params.v[i] == Rational(expected_v[i]));
  CHECK(params.is_exact);
  CHECK(params.is_q_polynomial);

  SchemeParameters ternary = hamming_parameters(2, 3);
  CHECK(ternary.Q(1, 0) == Rational(4));
  CHECK(ternary.Q(1, 1) == Rational(1));
  CHECK(ternary.Q(1, 2) == Rational(-2));

  verify_parameter_identities(hamming_parameters(3, 2));  // includes P*Q = 8 I
}

TEST_CASE("hamming table is self-dual") {
  SchemeParameters params = hamming_parameters(6, 2);
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j) CHECK(params.P(i, j) == params.Q(i, j));
}

TEST_CASE("johnson parameter table") {
  SchemeParameters params = johnson_parameters(4, 2);
  CHECK(params.cardinality == Rational(6));
  CHECK(params.v == std::vector<Rational>{Rational(1), Rational(4), Rational(1)});
  CHECK(params.m == std::vector<Rational>{Rational(1), Rational(3), Rational(2)});
  CHECK(params.Q(1, 0) == Rational(3));
  CHECK(params.Q(1, 1) == Rational(0));
  CHECK(params.Q(1, 2) == Rational(-3));

  // duality check independent of the inversion path
  SchemeParameters j52 = johnson_parameters(5, 2);
  for (int j = 0; j <= 2; ++j)
    CHECK(j52.m[j] * j52.P(1, j) == j52.v[1] * j52.Q(j, 1));
}

TEST_CASE("johnson P-matrix has integer entries") {
  for (auto [n, a] : {std::pair{4, 2}, {5, 2}, {6, 3}, {7, 3}, {9, 4}}) {
    SchemeParameters params = johnson_parameters(n, a);
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= a; ++j) CHECK(params.P(i, j).is_integer());
  }
}

TEST_CASE("intersection numbers") {
  SchemeParameters params = hamming_parameters(3, 2);
  CHECK(intersection_number(params, 1, 1, 0) == Rational(3));  // = v_1
  CHECK(intersection_number(params, 1, 1, 2) == Rational(2));
  // brute-force midpoint oracle in F_2^3: words at distance 1 from both 0 and
  // a fixed weight-2 word
  {
    int count = 0;
    for (int y = 0; y < 8; ++y)
      if (__builtin_popcount(y) == 1 && __builtin_popcount(y ^ 3) == 1) ++count;
    CHECK(intersection_number(params, 1, 1, 2) == Rational(count));
  }
  for (int n = 2; n <= 8; ++n) {
    SchemeParameters cube = hamming_parameters(n, 2);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k) {
          Rational value = intersection_number(cube, i, j, k);
          CHECK(value.is_integer());
          CHECK(value.sign() >= 0);
          if (k > i + j || std::abs(i - j) > k) CHECK(value.is_zero());
        }
  }
}

TEST_CASE("krein parameters") {
  SchemeParameters params = hamming_parameters(3, 2);
  CHECK(krein_parameter(params, 1, 1, 0) == params.m[1]);

  SchemeParameters johnson = johnson_parameters(4, 2);
  Rational acc(0);
  for (int y = 0; y <= 2; ++y) acc += krein_parameter(johnson, y, 1, 2);
  CHECK(acc == johnson.Q(1, 0));

  SchemeParameters h4 = hamming_parameters(4, 2);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      for (int k = 0; k <= 4; ++k) CHECK(krein_parameter(h4, i, j, k).sign() >= 0);
}

TEST_CASE("krein relations across closed-form families") {
  auto check = [](const SchemeParameters& params) {
    const int n = params.n;
    for (int x = 0; x <= n; ++x) {
      CHECK(krein_parameter(params, x, x, 0) == params.m[x]);
      Rational total(0);
      for (int y = 0; y <= n; ++y) {
        total += krein_parameter(params, y, 1, x);
        CHECK(params.m[x] * krein_parameter(params, y, 1, x) ==
              params.m[y] * krein_parameter(params, x, 1, y));
        for (int k = 0; k <= n; ++k) {
          CHECK(krein_parameter(params, x, y, k) == krein_parameter(params, y, x, k));
          CHECK(krein_parameter(params, x, y, k).sign() >= 0);
        }
      }
      CHECK(total == params.Q(1, 0));
    }
  };
  check(hamming_parameters(10, 2));
  check(hamming_parameters(6, 3));
  check(johnson_parameters(10, 5));
  check(johnson_parameters(9, 3));
}

TEST_CASE("q-polynomiality") {
  CHECK(check_q_polynomial(hamming_parameters(6, 2)));
  CHECK(check_q_polynomial(johnson_parameters(6, 3)));

  SchemeParameters broken = hamming_parameters(4, 2);
  broken.Q(2, 1) += Rational(1, 7);
  std::optional<QPolynomialViolation> violation;
  CHECK(!check_q_polynomial(broken, &violation));
  REQUIRE(violation.has_value());
}

TEST_CASE("transforms of indicators") {
  SchemeParameters params = hamming_parameters(5, 2);
  const int u = 2;
  RadialFunction point = indicator(5, u);
  RadialFunction point_hat = hat(params, point);
  RadialFunction point_tilde = tilde(params, point);
  for (int x = 0; x <= 5; ++x) {
    CHECK(point_hat(x) == params.P(u, x));
    CHECK(point_tilde(x) == params.Q(u, x) / params.cardinality);
  }
}

TEST_CASE("hat and tilde invert each other") {
  std::mt19937 rng(7);
  for (const SchemeParameters& params :
       {hamming_parameters(5, 2), johnson_parameters(8, 3)}) {
    for (int trial = 0; trial < 10; ++trial) {
      RadialFunction f = random_radial(params.n, rng);
      CHECK(exact_equal(tilde(params, hat(params, f)), f));
      CHECK(exact_equal(hat(params, tilde(params, f)), f));
    }
  }
}

TEST_CASE("convolution basics") {
  SchemeParameters params = hamming_parameters(7, 2);
  RadialFunction delta0 = indicator(7, 0);
  CHECK(exact_equal(star(params, delta0, delta0), delta0));

  RadialFunction ball = indicator_leq(7, 1);
  RadialFunction f = star(params, ball, ball);
  CHECK(f(0) == Rational(8));  // sum of v_y over y <= 1

  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    RadialFunction a = random_radial(7, rng, /*nonnegative=*/true);
    RadialFunction b = random_radial(7, rng, /*nonnegative=*/true);
    RadialFunction c = ostar(params, a, b);
    for (int x = 0; x <= 7; ++x) CHECK(c(x).sign() >= 0);
  }
}

TEST_CASE("transform identities for star and ostar") {
  std::mt19937 rng(20240811);
  for (const SchemeParameters& params :
       {hamming_parameters(8, 2), hamming_parameters(5, 3), johnson_parameters(8, 4),
        johnson_parameters(7, 3)}) {
    for (int trial = 0; trial < 5; ++trial) {
      RadialFunction f = random_radial(params.n, rng);
      RadialFunction g = random_radial(params.n, rng);
      CHECK(exact_equal(hat(params, star(params, f, g)),
                        pointwise(hat(params, f), hat(params, g))));
      CHECK(exact_equal(tilde(params, ostar(params, f, g)),
                        pointwise(tilde(params, f), tilde(params, g))));
      CHECK(exact_equal(hat(params, pointwise(f, g)),
                        ostar(params, hat(params, f), hat(params, g))));
      CHECK(exact_equal(tilde(params, pointwise(f, g)),
                        star(params, tilde(params, f), tilde(params, g))));
    }
  }
}

TEST_CASE("distance distributions") {
  SchemeParameters params = hamming_parameters(3, 2);
  ExplicitScheme cube = hamming_scheme(3, 2);

  SUBCASE("single point") {
    Code code{&cube, {5}};
    DistanceDistribution dd = distance_distribution(params, code);
    CHECK(dd.a(0) == Rational(1));
    for (int t = 1; t <= 3; ++t) CHECK(dd.a(t).is_zero());
    for (int t = 0; t <= 3; ++t)
      CHECK(dd.a_dual(t) == params.m[t] / params.cardinality);
    CHECK(dd.d_min == 0);
  }

  SUBCASE("whole cube") {
    Code code{&cube, {0, 1, 2, 3, 4, 5, 6, 7}};
    DistanceDistribution dd = distance_distribution(params, code);
    for (int t = 0; t <= 3; ++t) CHECK(dd.a(t) == params.v[t]);
    // orthogonality at j = 0: sum_x q_t(x) v_x = delta_t^0 |X|, so the dual
    // collapses to the point mass a'(0) = |C|/|X| = 1
    CHECK(dd.a_dual(0) == Rational(1));
    for (int t = 1; t <= 3; ++t) CHECK(dd.a_dual(t).is_zero());
    CHECK(dd.d_min == 1);
  }

  SUBCASE("repetition code") {
    Code code{&cube, {0, 7}};
    DistanceDistribution dd = distance_distribution(params, code);
    CHECK(dd.d_min == 3);
    Rational total(0);
    for (int t = 0; t <= 3; ++t) total += dd.a(t);
    CHECK(total == Rational(2));
  }
}

TEST_CASE("random codes have nonnegative dual distributions") {
  SchemeParameters params = hamming_parameters(6, 2);
  ExplicitScheme cube = hamming_scheme(6, 2);
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> pick_size(1, 64);
  for (int trial = 0; trial < 100; ++trial) {
    int size = pick_size(rng);
    std::vector<int> points(64);
    for (int i = 0; i < 64; ++i) points[i] = i;
    std::shuffle(points.begin(), points.end(), rng);
    points.resize(size);
    Code code{&cube, points};
    DistanceDistribution dd = distance_distribution(params, code);
    CHECK(dd.a(0) == Rational(1));
    Rational total(0);
    for (int t = 0; t <= 6; ++t) {
      total += dd.a(t);
      CHECK(dd.a_dual(t).sign() >= 0);
    }
    CHECK(total == Rational(size));
  }
}
