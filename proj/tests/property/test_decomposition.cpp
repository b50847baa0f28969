#include <doctest.h>

#include <random>

#include "../support/oracle.hpp"
#include "corpus.hpp"
#include "ppn/coloring.hpp"
#include "ppn/criticality.hpp"
#include "ppn/decomposition.hpp"

using namespace ppn;

namespace {

/// (p, q) by scanning every non-empty vertex set X with mu(x, y) = t across
/// the cut. X = V is allowed, matching the library convention.
DominatingCensus census_by_search(const Multigraph& g, unsigned t) {
  const int n = g.order();
  DominatingCensus c;
  for (std::uint32_t x = 1; x < (1u << n); ++x) {
    bool dominating = true;
    for (Vertex a = 0; a < n && dominating; ++a)
      for (Vertex b = 0; b < n && dominating; ++b)
        if ((x >> a & 1u) && !(x >> b & 1u)) dominating = g.mult(a, b) == t;
    if (!dominating) continue;
    VertexSet xs;
    for (Vertex v = 0; v < n; ++v)
      if (x >> v & 1u) xs.push_back(v);
    const auto h = induced_subgraph(g, xs).graph;
    if (xs.size() == 1) ++c.p;
    else if (xs.size() >= 3 && chi_t(h, t).k == 2 && is_critical(h, t).is_critical) ++c.q;
  }
  return c;
}

}  // namespace

TEST_CASE("decompose then rejoin gives back the graph") {
  std::mt19937 rng(51);
  for (int i = 0; i < 300; ++i) {
    const unsigned t = 1 + i % 3;
    // dense graphs have a disconnected t-complement more often
    const auto g = oracle::random_graph(rng, 1 + i % 8, t, 0.5 + 0.1 * (i % 5));
    const auto r = decompose(g, t);
    CHECK(canonical_form(rejoin(r)) == canonical_form(g));
    std::size_t covered = 0;
    for (const auto& f : r.factors) covered += f.vertices.size();
    CHECK(covered == static_cast<std::size_t>(g.order()));
  }
}

TEST_CASE("factors of a critical graph are critical and their chi_t add up") {
  for (const auto& m : corpus::critical()) {
    const auto r = decompose(m.graph, m.t);
    int sum = 0;
    for (const auto& f : r.factors) {
      CHECK(f.critical);
      CHECK(is_critical(f.graph, m.t).is_critical);
      sum += f.k;
    }
    CHECK(sum == m.k);
  }
}

TEST_CASE("dominating census matches a direct search") {
  for (const auto& m : corpus::critical()) {
    if (m.graph.order() > 6) continue;
    const auto fast = t_dominating_census(m.graph, m.t);
    const auto slow = census_by_search(m.graph, m.t);
    CAPTURE(m.t);
    CAPTURE(m.k);
    CHECK(fast.p == slow.p);
    CHECK(fast.q == slow.q);
  }
}

TEST_CASE("decomposition and census checks hold on every enumerated critical graph") {
  for (const auto& m : corpus::critical()) {
    const auto a = check_theorem_A(m.graph, m.t);
    CHECK(a.holds);
    if (2 * m.k - 2 >= m.graph.order()) CHECK(a.factor_count >= 2);
    CHECK(check_theorem_7_1(m.graph, m.t).holds());
  }
}

TEST_CASE("critical graphs with connected t-complement have singleton-extreme colourings") {
  for (const auto& m : corpus::critical()) {
    if (m.t > 2 || m.k < 2) continue;
    if (!is_connected(t_complement(m.graph, m.t))) continue;
    for (Vertex v = 0; v < m.graph.order(); ++v) {
      const auto phi = extreme_coloring(m.graph, m.t, v);
      CHECK(phi.singletons() == VertexSet{v});
    }
  }
}
