#include <doctest.h>

#include <random>

#include "../support/oracle.hpp"
#include "ppn/multigraph.hpp"

using namespace ppn;

namespace {

std::size_t edges_of(const Multigraph& g) {
  std::size_t e = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) e += g.mult(u, v);
  return e;
}

}  // namespace

TEST_CASE("t-complement is an involution and splits t C(n,2)") {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const unsigned t = 1 + i % 4;
    const int n = i % 9;
    const auto g = oracle::random_graph(rng, n, t, 0.5);
    const auto h = t_complement(g, t);
    CHECK(t_complement(h, t) == g);
    CHECK(g.edge_count() + h.edge_count() == t * n * (n - 1) / 2);
  }
}

TEST_CASE("degree sum is twice the edge count") {
  std::mt19937 rng(12);
  for (int i = 0; i < 500; ++i) {
    const auto g = oracle::random_graph(rng, i % 10, 1 + i % 3, 0.4);
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.edge_count());
    CHECK(g.edge_count() == edges_of(g));
  }
}

TEST_CASE("blocks partition the edges") {
  std::mt19937 rng(13);
  for (int i = 0; i < 500; ++i) {
    const auto g = oracle::random_graph(rng, 1 + i % 9, 2, 0.15 + 0.05 * (i % 8));
    const auto bs = blocks(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (!g.mult(u, v)) continue;
        int inside = 0;
        for (const auto& b : bs)
          inside += std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v);
        CHECK(inside == 1);
      }
    for (std::size_t a = 0; a < bs.size(); ++a)
      for (std::size_t b = a + 1; b < bs.size(); ++b) {
        VertexSet common;
        std::set_intersection(bs[a].begin(), bs[a].end(), bs[b].begin(), bs[b].end(),
                              std::back_inserter(common));
        CHECK(common.size() <= 1);
      }
    // every vertex is covered
    std::vector<char> seen(g.order(), 0);
    for (const auto& b : bs)
      for (Vertex v : b) seen[v] = 1;
    CHECK(std::count(seen.begin(), seen.end(), 1) == g.order());
  }
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937 rng(14);
  for (int i = 0; i < 1000; ++i) {
    const int n = i % 8;
    const auto g = oracle::random_graph(rng, n, 1 + i % 3, 0.5);
    const auto pg = relabel(g, oracle::random_permutation(rng, n));
    CHECK(canonical_form(g) == canonical_form(pg));
    CHECK(isomorphic(canonical_graph(g), g));
  }
}

TEST_CASE("canonical form separates exactly the oracle classes") {
  std::mt19937 rng(15);
  for (int i = 0; i < 400; ++i) {
    const int n = 2 + i % 5;
    // sparse pairs collide often, which is what makes this informative
    const auto a = oracle::random_graph(rng, n, 2, 0.3);
    const auto b = oracle::random_graph(rng, n, 2, 0.3);
    CHECK((canonical_form(a) == canonical_form(b)) == (oracle::canonical(a) == oracle::canonical(b)));
    CHECK(from_canonical(canonical_form(a)) == canonical_graph(a));
  }
}

TEST_CASE("isomorphism classes on four vertices") {
  // Exhaustive over mu <= 2: 3^6 graphs fall into the same number of classes
  // under both labellings.
  std::set<std::string> ours, theirs;
  for (std::uint64_t c = 0; c < oracle::code_count(4, 2); ++c) {
    const auto g = oracle::from_code(4, 2, c);
    ours.insert(canonical_form(g));
    theirs.insert(oracle::canonical(g));
  }
  CHECK(ours.size() == theirs.size());
}
