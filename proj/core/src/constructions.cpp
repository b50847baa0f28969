#include "ppn/constructions.hpp"

#include <string>

#include "ppn/errors.hpp"

namespace ppn {

Multigraph complete(int k) { return s_clique(1, k); }

Multigraph cycle(int n) { return s_cycle(1, n); }

Multigraph s_clique(Multiplicity s, int n) {
  if (s < 1) throw PreconditionError("s_clique: s must be at least 1");
  if (n < 0) throw PreconditionError("s_clique: negative order");
  Multigraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.set_mult(u, v, s);
  return g;
}

Multigraph s_cycle(Multiplicity s, int n) {
  if (s < 1) throw PreconditionError("s_cycle: s must be at least 1");
  if (n < 2) throw PreconditionError("s_cycle: cycles need n >= 2");
  Multigraph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edges(v, (v + 1) % n, s);
  return g;
}

Multigraph path(int n) {
  if (n < 0) throw PreconditionError("path: negative order");
  Multigraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.set_mult(v, v + 1, 1);
  return g;
}

Multigraph edgeless(int n) { return Multigraph(n); }

Multigraph k3t(unsigned t) {
  if (t < 2) throw PreconditionError("K_3(t) needs t >= 2");
  if (t % 2 == 0) return s_clique(t / 2, 3);
  Multigraph g = s_clique((t + 1) / 2, 3);
  g.set_mult(1, 2, g.mult(1, 2) - 1);
  return g;
}

Multigraph gallai_dirac(int k, int y1) {
  if (k < 3) throw PreconditionError("DG(k) needs k >= 3");
  if (y1 < 1 || y1 > k - 2) {
    throw PreconditionError("DG(k) needs 1 <= |Y1| <= k-2, got " + std::to_string(y1));
  }
  const int x_size = k - 2;
  const int y_size = k - 1;
  const int n = 2 * k - 1;
  const Vertex y_begin = x_size;
  const Vertex v1 = n - 2;
  const Vertex v2 = n - 1;
  Multigraph g(n);
  for (Vertex a = 0; a < x_size; ++a)
    for (Vertex b = a + 1; b < x_size; ++b) g.set_mult(a, b, 1);
  for (Vertex a = y_begin; a < y_begin + y_size; ++a)
    for (Vertex b = a + 1; b < y_begin + y_size; ++b) g.set_mult(a, b, 1);
  for (Vertex x = 0; x < x_size; ++x) {
    g.set_mult(v1, x, 1);
    g.set_mult(v2, x, 1);
  }
  for (Vertex y = y_begin; y < y_begin + y_size; ++y) {
    g.set_mult(y < y_begin + y1 ? v1 : v2, y, 1);
  }
  return g;
}

Multigraph dirac_join(const Multigraph& g1, const Multigraph& g2, Multiplicity l) {
  Multigraph g = disjoint_union(g1, g2);
  if (l == 0) return g;
  for (Vertex u = 0; u < g1.order(); ++u)
    for (Vertex v = 0; v < g2.order(); ++v) g.set_mult(u, g1.order() + v, l);
  return g;
}

Multigraph hajos_join(const HajosSpec& spec) {
  const auto& [g1, g2, u1, v1, u2, v2, l] = spec;
  auto check = [&](const Multigraph& g, Vertex u, Vertex v, const char* which) {
    if (!g.contains(u) || !g.contains(v) || u == v) {
      throw PreconditionError(std::string("hajos_join: invalid vertex pair in ") + which);
    }
    if (g.mult(u, v) < l) {
      throw PreconditionError(std::string("hajos_join: multiplicity below l in ") + which);
    }
  };
  if (l < 1) throw PreconditionError("hajos_join: l must be at least 1");
  check(g1, u1, v1, "G1");
  check(g2, u2, v2, "G2");

  const int n1 = g1.order();
  // Index of each G2 vertex in the result.
  std::vector<Vertex> map2(g2.order());
  Vertex next = n1;
  for (Vertex v = 0; v < g2.order(); ++v) map2[v] = v == v2 ? v1 : next++;

  Multigraph g(n1 + g2.order() - 1);
  for (Vertex a = 0; a < n1; ++a)
    for (Vertex b = a + 1; b < n1; ++b)
      if (g1.mult(a, b)) g.set_mult(a, b, g1.mult(a, b));
  g.set_mult(u1, v1, g1.mult(u1, v1) - l);
  for (Vertex a = 0; a < g2.order(); ++a)
    for (Vertex b = a + 1; b < g2.order(); ++b) {
      Multiplicity m = g2.mult(a, b);
      if ((a == u2 && b == v2) || (a == v2 && b == u2)) m -= l;
      if (m) g.add_edges(map2[a], map2[b], m);
    }
  g.add_edges(u1, map2[u2], l);
  return g;
}

}  // namespace ppn
