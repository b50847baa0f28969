#include <doctest.h>

#include "ppn/coloring.hpp"
#include "ppn/constructions.hpp"
#include "ppn/criticality.hpp"
#include "ppn/errors.hpp"

using namespace ppn;

TEST_CASE("named families") {
  const auto c2 = cycle(2);
  CHECK(c2.order() == 2);
  CHECK(c2.mult(0, 1) == 2);
  CHECK(s_clique(2, 4).edge_count() == 12);
  const auto c = s_cycle(3, 5);
  CHECK(c.edge_count() == 15);
  for (Vertex v = 0; v < 5; ++v) CHECK(c.degree(v) == 6);
  CHECK(complete(0).empty());
  CHECK(path(1).edge_count() == 0);
  CHECK(path(4).edge_count() == 3);
  CHECK_THROWS_AS(cycle(1), PreconditionError);
  CHECK_THROWS_AS(s_clique(0, 3), PreconditionError);
}

TEST_CASE("K_3(t)") {
  CHECK(k3t(2) == complete(3));
  const auto k = k3t(3);
  CHECK(k.edge_count() == 5);
  CHECK(k.mult(0, 1) == 2);
  CHECK(k.mult(0, 2) == 2);
  CHECK(k.mult(1, 2) == 1);
  CHECK(k.degree(0) == 4);
  CHECK(k.degree(1) == 3);
  CHECK(k3t(4) == s_clique(2, 3));
  CHECK(k3t(4).edge_count() == 6);
  CHECK_THROWS_AS(k3t(1), PreconditionError);
  for (unsigned t = 2; t <= 5; ++t) {
    const auto r = is_critical(k3t(t), t);
    CHECK(r.is_critical);
    CHECK(r.k == 2);
  }
}

TEST_CASE("Dirac-Gallai graphs") {
  const auto g3 = gallai_dirac(3, 1);
  CHECK(g3.order() == 5);
  CHECK(is_critical(g3, 1).is_critical);
  CHECK(isomorphic(g3, cycle(5)));
  for (int y1 : {1, 2}) {
    const auto g = gallai_dirac(4, y1);
    CHECK(g.order() == 7);
    const auto r = is_critical(g, 1);
    CHECK(r.is_critical);
    CHECK(r.k == 4);
  }
  // 2e = (k-1)(2k-1) + k-3 for every member.
  for (int k = 3; k <= 6; ++k)
    for (int y1 = 1; y1 <= k - 2; ++y1)
      CHECK(2 * gallai_dirac(k, y1).edge_count() ==
            static_cast<std::size_t>((k - 1) * (2 * k - 1) + k - 3));
  CHECK_THROWS_AS(gallai_dirac(2, 1), PreconditionError);
  CHECK_THROWS_AS(gallai_dirac(4, 3), PreconditionError);
}

TEST_CASE("Dirac join") {
  for (unsigned t = 1; t <= 3; ++t) CHECK(dirac_join(s_clique(t, 2), s_clique(t, 3), t) == s_clique(t, 5));
  const auto g = dirac_join(complete(1), k3t(2), 2);
  const auto r = is_critical(g, 2);
  CHECK(r.is_critical);
  CHECK(r.k == 3);
  CHECK(g.order() == 4);
  CHECK(chi_t(dirac_join(cycle(5), cycle(7), 2), 2).k == 4);
  CHECK(dirac_join(Multigraph(), cycle(4), 3) == cycle(4));
  CHECK(dirac_join(path(2), path(2), 0) == disjoint_union(path(2), path(2)));
}

TEST_CASE("Hajos join") {
  const auto c4 = cycle(4);
  const auto c7 = hajos_join({c4, c4, 0, 1, 0, 1, 1});
  CHECK(c7.order() == 7);
  CHECK(isomorphic(c7, cycle(7)));

  const auto k4 = s_clique(2, 4);
  for (Multiplicity l : {1u, 2u}) {
    const auto g = hajos_join({k4, k4, 0, 1, 0, 1, l});
    CHECK(g.order() == 7);
    CHECK(g.edge_count() == 24 - l);
  }

  const auto k5 = complete(5);
  const auto g = hajos_join({k5, k5, 0, 1, 0, 1, 1});
  CHECK(g.order() == 9);
  const auto r = is_critical(g, 2);
  CHECK(r.is_critical);
  CHECK(r.k == 3);

  CHECK_THROWS_AS(hajos_join({c4, c4, 0, 2, 0, 1, 1}), PreconditionError);
  CHECK_THROWS_AS(hajos_join({c4, c4, 0, 1, 0, 1, 2}), PreconditionError);
  CHECK_THROWS_AS(hajos_join({c4, c4, 0, 0, 0, 1, 1}), PreconditionError);
}
