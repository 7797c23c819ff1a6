#include <algorithm>
#include <random>

#include "delsarte/clique.hpp"
#include "delsarte/lp.hpp"
#include "delsarte/sandwich.hpp"
#include "doctest.h"

using namespace delsarte;

TEST_CASE("primal LP values") {
  SUBCASE("hamming n=7 q=2 d=3 attains 16") {
    LpSolution solution = solve_primal(hamming_parameters(7, 2), 3);
    CHECK(solution.status == LpStatus::optimal);
    CHECK(solution.value == Rational(16));
  }
  SUBCASE("d = 1 attains |X|") {
    SchemeParameters params = hamming_parameters(5, 2);
    LpSolution solution = solve_primal(params, 1);
    CHECK(solution.value == Rational(32));
    LpSolution johnson = solve_primal(johnson_parameters(6, 3), 1);
    CHECK(johnson.value == Rational(20));
  }
  SUBCASE("domain contract on d") {
    SchemeParameters params = hamming_parameters(4, 2);
    CHECK_THROWS_AS(solve_primal(params, 5), DomainError);
    CHECK_THROWS_AS(solve_primal(params, 0), DomainError);
    CHECK_NOTHROW(solve_primal(params, 4));
  }
  SUBCASE("dimension cap") {
    CHECK_THROWS_AS(solve_primal(hamming_parameters(65, 2), 3), CapExceeded);
  }
}

TEST_CASE("optimal point structure") {
  SchemeParameters params = hamming_parameters(8, 2);
  for (int d = 2; d <= 8; d += 2) {
    LpSolution solution = solve_primal(params, d);
    CHECK(solution.u(0) == Rational(1));
    for (int t = 1; t < d; ++t) CHECK(solution.u(t).is_zero());
    for (int t = d; t <= 8; ++t) CHECK(solution.u(t).sign() >= 0);
    for (int i = 0; i <= 8; ++i) {
      Rational acc(0);
      for (int t = 0; t <= 8; ++t) acc += solution.u(t) * params.Q(i, t);
      CHECK(acc.sign() >= 0);
    }
    Rational total(0);
    for (int t = 0; t <= 8; ++t) total += solution.u(t);
    CHECK(total == solution.value);
  }
}

TEST_CASE("optimum is invariant under constraint permutations") {
  SchemeParameters params = hamming_parameters(9, 2);
  std::mt19937 rng(5);
  for (int d : {3, 4, 5}) {
    DelsarteLpInstance reference(params, d);
    Rational value = solve_lp(reference).value;
    for (int trial = 0; trial < 5; ++trial) {
      DelsarteLpInstance shuffled(params, d);
      std::shuffle(shuffled.constraint_order.begin(), shuffled.constraint_order.end(), rng);
      CHECK(solve_lp(shuffled).value == value);
    }
  }
}

TEST_CASE("LP value is non-increasing in d") {
  for (const SchemeParameters& params :
       {hamming_parameters(9, 2), hamming_parameters(5, 3), johnson_parameters(9, 4)}) {
    Rational previous;
    for (int d = 1; d <= params.n; ++d) {
      Rational value = solve_primal(params, d).value;
      if (d > 1) CHECK(value <= previous);
      previous = value;
    }
  }
}

TEST_CASE("max code size oracle") {
  SUBCASE("binary basics") {
    CHECK(max_code_size_hamming(4, 2, 2).size == 8);   // even-weight code
    CHECK(max_code_size_hamming(3, 2, 3).size == 2);   // repetition code
    CHECK(max_code_size_hamming(4, 2, 1).size == 16);  // whole space
    CHECK(max_code_size_hamming(7, 2, 3).size == 16);  // Hamming code
    CHECK(max_code_size_hamming(6, 2, 4).size == 4);
  }
  SUBCASE("witness is a valid code") {
    MaxCodeResult result = max_code_size_hamming(5, 2, 3);
    CHECK(result.size == 4);
    CHECK(result.optimal);
    REQUIRE(static_cast<long long>(result.witness.size()) == result.size);
    for (size_t i = 0; i < result.witness.size(); ++i)
      for (size_t j = i + 1; j < result.witness.size(); ++j)
        CHECK(__builtin_popcountll(result.witness[i] ^ result.witness[j]) >= 3);
  }
  SUBCASE("ternary") {
    CHECK(max_code_size_hamming(2, 3, 2).size == 3);
    CHECK(max_code_size_hamming(3, 3, 2).size == 9);  // MDS [3,2,2]_3
  }
  SUBCASE("johnson") {
    CHECK(max_code_size_johnson(4, 2, 2).size == 2);
    CHECK(max_code_size_johnson(5, 2, 2).size == 2);
    // Steiner triple system S(2,3,7): 7 blocks, pairwise intersection <= 1
    CHECK(max_code_size_johnson(7, 3, 2).size == 7);
    CHECK(max_code_size_johnson(6, 3, 1).size == 20);
  }
  SUBCASE("explicit scheme path agrees with the family path") {
    ExplicitScheme cube = hamming_scheme(4, 2);
    for (int d = 1; d <= 4; ++d)
      CHECK(max_code_size(cube, d).size == max_code_size_hamming(4, 2, d).size);
    ExplicitScheme sphere = johnson_scheme(6, 3);
    for (int d = 1; d <= 3; ++d)
      CHECK(max_code_size(sphere, d).size == max_code_size_johnson(6, 3, d).size);
  }
  SUBCASE("caps") {
    CHECK_THROWS_AS(max_code_size_hamming(21, 2, 3), CapExceeded);
  }
}

TEST_CASE("sandwich reports") {
  SUBCASE("hamming n=7 d=3 collapses to 16") {
    SandwichReport report = sandwich_check(HammingFamily{7, 2}, 3);
    CHECK(report.ok);
    CHECK(report.oracle == 16);
    CHECK(report.lp == Rational(16));
    CHECK(report.hamming == Rational(16));
    CHECK(report.table.find("oracle") != std::string::npos);
    CHECK(report.table.find("16") != std::string::npos);
  }
  SUBCASE("hamming n=8 d=4") {
    SandwichReport report = sandwich_check(HammingFamily{8, 2}, 4);
    CHECK(report.ok);
    CHECK(report.oracle == 20);
    CHECK(Rational(20) <= report.lp);
    CHECK(report.lp <= Rational(256, 9));
    CHECK(report.hamming == Rational(256, 9));
    REQUIRE(report.eb.has_value());
    CHECK(*report.eb == Rational(512, 7));
    REQUIRE(report.mrrw.has_value());
    CHECK(*report.mrrw == Rational(72));
  }
  SUBCASE("johnson n=4 a=2 d=2") {
    SandwichReport report = sandwich_check(JohnsonFamily{4, 2}, 2);
    CHECK(report.ok);
    CHECK(report.oracle == 2);
    CHECK(Rational(2) <= report.lp);
  }
  SUBCASE("mrrw column is inapplicable at d = 1") {
    SandwichReport report = sandwich_check(HammingFamily{5, 2}, 1);
    CHECK(report.ok);
    CHECK(!report.mrrw.has_value());
    CHECK(report.table.find('-') != std::string::npos);
  }
}
