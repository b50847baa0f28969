#include <doctest.h>

#include "ppn/constructions.hpp"
#include "ppn/enumeration.hpp"
#include "ppn/errors.hpp"

using namespace ppn;

TEST_CASE("small classes") {
  for (unsigned t = 1; t <= 3; ++t)
    for (int k = 1; k <= 4; ++k) {
      const auto r = enumerate_critical(t, k, k);
      REQUIRE(r.graphs.size() == 1);
      CHECK(isomorphic(r.graphs[0], s_clique(t, k)));
    }
  for (int n = 2; n <= 5; ++n) {
    const auto r = enumerate_critical(2, 2, n);
    REQUIRE(r.graphs.size() == 1);
    CHECK(isomorphic(r.graphs[0], cycle(n)));
  }
  for (int n = 3; n <= 6; ++n) {
    const auto r = enumerate_critical(1, 3, n);
    CHECK(r.graphs.size() == static_cast<std::size_t>(n % 2));
  }
  const auto r = enumerate_critical(2, 3, 4);
  REQUIRE(r.graphs.size() == 1);
  CHECK(isomorphic(r.graphs[0], dirac_join(complete(1), k3t(2), 2)));
  for (int k = 3; k <= 4; ++k) CHECK(enumerate_critical(1, k, k + 1).graphs.empty());
  CHECK(enumerate_critical(2, 4, 3).graphs.empty());
  CHECK(enumerate_critical(2, 1, 2).graphs.empty());
}

TEST_CASE("ext values") {
  auto e = ext(2, 2, 3);
  REQUIRE(e.value);
  CHECK(*e.value == 3);
  REQUIRE(e.extremal.size() == 1);
  CHECK(isomorphic(e.extremal[0], complete(3)));

  e = ext(2, 3, 4);
  CHECK(*e.value == 9);
  REQUIRE(e.extremal.size() == 1);
  CHECK(isomorphic(e.extremal[0], dirac_join(complete(1), k3t(2), 2)));

  e = ext(2, 3, 5);
  CHECK(*e.value == 10);
  REQUIRE(e.extremal.size() == 2);
  CHECK((isomorphic(e.extremal[0], complete(5)) || isomorphic(e.extremal[1], complete(5))));
  CHECK((isomorphic(e.extremal[0], s_cycle(2, 5)) || isomorphic(e.extremal[1], s_cycle(2, 5))));

  e = ext(1, 4, 6);
  CHECK(*e.value == 10);
  CHECK_FALSE(ext(1, 3, 4).value);
}

TEST_CASE("multiplicity cap") {
  // Simple graphs only: C_n for n >= 3, no double edge.
  const auto r = enumerate_critical(2, 2, 2, 1u);
  CHECK(r.graphs.empty());
  CHECK(r.m == 1);
  const auto s = enumerate_critical(2, 3, 5, 1u);
  REQUIRE(s.graphs.size() == 1);
  CHECK(isomorphic(s.graphs[0], complete(5)));
}

TEST_CASE("determinism across worker counts") {
  EnumerateOptions one;
  EnumerateOptions many;
  many.jobs = 4;
  const auto a = enumerate_critical(2, 3, 5, std::nullopt, one);
  const auto b = enumerate_critical(2, 3, 5, std::nullopt, many);
  CHECK(a.graphs == b.graphs);
  CHECK(a.extremal == b.extremal);
}

TEST_CASE("budget and preconditions") {
  EnumerateOptions small;
  small.assignment_budget = 1000;
  CHECK_THROWS_AS(enumerate_critical(2, 3, 5, std::nullopt, small), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_critical(0, 1, 1), PreconditionError);
  CHECK_THROWS_AS(enumerate_critical(1, 1, 0), PreconditionError);
  CHECK_THROWS_AS(enumerate_critical(1, 2, 3, 0u), PreconditionError);
}

TEST_CASE("bound formulas") {
  auto b = bound_formulas(2, 3, 5);
  CHECK(*b.trivial == Rational{10, 1});
  CHECK(*b.even_t_exact == 10);
  CHECK_FALSE(b.gallai);
  CHECK_FALSE(b.kostochka_yancey);
  CHECK_FALSE(b.half_bound);

  b = bound_formulas(2, 3, 4);
  CHECK(*b.even_t_exact == 9);
  CHECK(*bound_formulas(2, 2, 3).even_t_exact == 3);

  b = bound_formulas(1, 4, 6);
  CHECK(*b.gallai == 10);
  CHECK(*b.kostochka_yancey == Rational{28, 3});
  CHECK(*b.half_bound == 11);
  CHECK(*b.trivial == Rational{9, 1});
  CHECK_FALSE(b.even_t_exact);

  CHECK(*bound_formulas(2, 4, 6).half_bound == 22);
  CHECK_FALSE(bound_formulas(1, 4, 5).kostochka_yancey);
  CHECK_FALSE(bound_formulas(3, 3, 4).even_t_exact);
  CHECK(make_rational(6, -4) == Rational{-3, 2});
  CHECK_THROWS_AS(make_rational(1, 0), PreconditionError);
}

TEST_CASE("edge bound without small dominating factors") {
  const auto v = verify_theorem_8_5(2, 4, 6);
  CHECK(v.bound == 22);
  CHECK(v.class_size > 0);
  CHECK(v.holds());
  const auto w = verify_theorem_8_5(1, 4, 6);
  CHECK(w.bound == 11);
  CHECK(w.holds());
  CHECK_THROWS_AS(verify_theorem_8_5(2, 3, 5), PreconditionError);
}
