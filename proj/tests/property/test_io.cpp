#include <doctest.h>

#include <random>
#include <sstream>

#include "../support/oracle.hpp"
#include "ppn/io.hpp"

using namespace ppn;

TEST_CASE("graph files round-trip") {
  std::mt19937 rng(71);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_graph(rng, i % 11, 1 + i % 4, 0.4);
    const auto text = write_graph(g);
    const auto back = parse_graph(text);
    CHECK(back == g);
    CHECK(canonical_form(back) == canonical_form(g));
    CHECK(write_graph(back) == text);
  }
}

TEST_CASE("split edge lines sum to the same canonical file") {
  std::mt19937 rng(72);
  for (int i = 0; i < 100; ++i) {
    const auto g = oracle::random_graph(rng, 2 + i % 8, 3, 0.5);
    std::ostringstream split;
    split << "# split\nmgraph " << g.order() << "\n";
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        for (Multiplicity m = 0; m < g.mult(u, v); ++m)
          split << "e " << (m % 2 ? v + 1 : u + 1) << " " << (m % 2 ? u + 1 : v + 1) << "\n";
    CHECK(parse_graph(split.str()) == g);
  }
}
