#include <doctest.h>

#include "ppn/constructions.hpp"
#include "ppn/criticality.hpp"
#include "ppn/errors.hpp"

using namespace ppn;

namespace {

Multigraph c5_with_chord() {
  auto g = cycle(5);
  g.set_mult(0, 2, 1);
  return g;
}

}  // namespace

TEST_CASE("is_critical examples") {
  for (unsigned t = 1; t <= 3; ++t)
    for (int k = 1; k <= 4; ++k) {
      const auto r = is_critical(s_clique(t, k), t);
      CHECK(r.is_critical);
      CHECK(r.k == k);
    }
  for (int n = 2; n <= 7; ++n) {
    const auto r = is_critical(cycle(n), 2);
    CHECK(r.is_critical);
    CHECK(r.k == 2);
  }
  CHECK_FALSE(is_critical(path(3), 1).is_critical);
  for (int n : {4, 6}) {
    const auto r = is_critical(cycle(n), 1);
    CHECK_FALSE(r.is_critical);
    CHECK(r.k == 2);
    CHECK(r.failing_edge);
  }
  CHECK(is_critical(Multigraph(), 1).is_critical);
  CHECK_FALSE(is_critical(edgeless(2), 1).is_critical);
}

TEST_CASE("criticality witnesses") {
  CriticalityOptions opts;
  opts.stop_at_failure = false;
  const auto g = complete(5);
  const auto r = is_critical(g, 2, opts);
  REQUIRE(r.is_critical);
  CHECK(r.edge_witnesses.size() == 10);
  for (const auto& [e, phi] : r.edge_witnesses) {
    CHECK(phi.count() <= 2);
    CHECK(validate(delete_edge(g, e.first, e.second), phi));
    CHECK(phi.color(e.first) == phi.color(e.second));
  }
  opts.jobs = 3;
  const auto par = is_critical(g, 2, opts);
  CHECK(par.edge_witnesses == r.edge_witnesses);
}

TEST_CASE("vertex criticality") {
  for (unsigned t = 1; t <= 2; ++t) CHECK(is_vertex_critical(s_clique(t, 4), t));
  CHECK(is_vertex_critical(cycle(5), 1));
  CHECK_FALSE(is_vertex_critical(disjoint_union(complete(3), edgeless(1)), 1));
  // Chorded C_5: chi = 3; deleting vertex 1 leaves an even cycle-free remainder.
  const auto g = c5_with_chord();
  CHECK(is_critical(g, 1).k == 3);
  CHECK_FALSE(is_vertex_critical(g, 1));
  const auto r = is_critical(disjoint_union(complete(3), edgeless(1)), 1);
  CHECK_FALSE(r.is_critical);
  CHECK_FALSE(r.is_vertex_critical);
}

TEST_CASE("critical subgraph") {
  const auto k = s_clique(2, 4);
  const auto same = critical_subgraph(k, 2);
  CHECK(same.graph == k);
  CHECK(same.vertices == VertexSet{0, 1, 2, 3});

  auto pendant = disjoint_union(cycle(5), edgeless(1));
  pendant.set_mult(0, 5, 1);
  const auto c = critical_subgraph(pendant, 1);
  CHECK(isomorphic(c.graph, cycle(5)));
  CHECK(c.vertices == VertexSet{0, 1, 2, 3, 4});

  auto diamond = complete(4);
  diamond.set_mult(0, 1, 0);
  CHECK(isomorphic(critical_subgraph(diamond, 1).graph, complete(3)));
  CHECK(critical_subgraph(edgeless(3), 1).graph.order() == 1);
}

TEST_CASE("low vertex analysis") {
  for (unsigned t = 1; t <= 3; ++t) {
    const auto r = low_vertex_analysis(s_clique(t, 4), t);
    CHECK(r.low == VertexSet{0, 1, 2, 3});
    REQUIRE(r.blocks.size() == 1);
    CHECK(r.blocks[0].shape == LowBlockShape::UniformClique);
    CHECK(r.blocks[0].s == t);
  }
  auto r = low_vertex_analysis(cycle(5), 2);
  CHECK(r.low.size() == 5);
  REQUIRE(r.blocks.size() == 1);
  CHECK(r.blocks[0].shape == LowBlockShape::TRegular);

  r = low_vertex_analysis(complete(5), 2);
  CHECK(r.k == 3);
  REQUIRE(r.blocks.size() == 1);
  CHECK(r.blocks[0].shape == LowBlockShape::UniformClique);
  CHECK(r.blocks[0].s == 1);
  CHECK_FALSE(r.violation());

  CHECK_THROWS_AS(low_vertex_analysis(path(3), 1), PreconditionError);
}

TEST_CASE("low block shapes") {
  CHECK(classify_low_block(s_cycle(2, 5), 3).shape == LowBlockShape::OddUniformCycle);
  CHECK(classify_low_block(s_cycle(2, 5), 3).s == 2);
  CHECK(classify_low_block(cycle(6), 2).shape == LowBlockShape::TRegular);
  CHECK(classify_low_block(cycle(6), 3).shape == LowBlockShape::SparseDegenerate);
  CHECK(classify_low_block(complete(1), 2).shape == LowBlockShape::UniformClique);
  CHECK(classify_low_block(c5_with_chord(), 2).shape == LowBlockShape::Violation);
  CHECK(to_string(LowBlockShape::Violation) == "VIOLATION");
}

TEST_CASE("Brooks-type classification") {
  for (unsigned t = 1; t <= 3; ++t) {
    const auto r = brooks_equality_classify(s_clique(t, 4), t);
    CHECK(r.classification == BrooksClass::UniformClique);
    CHECK(r.k == 4);
  }
  auto r = brooks_equality_classify(s_cycle(3, 5), 3);
  CHECK(r.classification == BrooksClass::TCycleOdd);
  CHECK(r.k == 3);
  r = brooks_equality_classify(cycle(4), 1);
  CHECK(r.classification == BrooksClass::StrictInequality);
  CHECK(r.k == 2);
  CHECK(r.bound == 3);
  CHECK(brooks_equality_classify(cycle(6), 2).classification == BrooksClass::TRegularK2);
  CHECK(brooks_equality_classify(complete(5), 2).classification == BrooksClass::UniformClique);
}
