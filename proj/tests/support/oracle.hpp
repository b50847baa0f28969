#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here follows the definitions directly and is only meant for
// graphs with a handful of vertices.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ppn/multigraph.hpp"

namespace oracle {

using ppn::Multigraph;
using ppn::Vertex;

/// Every non-empty induced subgraph on `mask` has a vertex of degree < t.
inline bool sd_by_definition(const Multigraph& g, unsigned t, std::uint32_t mask) {
  const int n = g.order();
  for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
    bool has_low = false;
    for (Vertex v = 0; v < n && !has_low; ++v) {
      if (!(sub >> v & 1u)) continue;
      unsigned d = 0;
      for (Vertex u = 0; u < n; ++u)
        if (u != v && (sub >> u & 1u)) d += g.mult(u, v);
      has_low = d < t;
    }
    if (!has_low) return false;
  }
  return true;
}

inline bool sd_by_definition(const Multigraph& g, unsigned t) {
  return sd_by_definition(g, t, (1u << g.order()) - 1u);
}

/// Calls f on every set partition of {0..n-1}, given as a restricted growth
/// string. Stops early when f returns false.
inline void for_each_partition(int n, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> a(n, 0);
  bool go = true;
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (!go) return;
    if (i == n) {
      go = f(a);
      return;
    }
    for (int c = 0; c <= blocks && go; ++c) {
      a[i] = c;
      rec(i + 1, std::max(blocks, c + 1));
    }
  };
  rec(0, 0);
}

/// Minimum number of SD_t classes over all set partitions.
inline int chi(const Multigraph& g, unsigned t) {
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<char> sd(1u << n);
  for (std::uint32_t m = 0; m < sd.size(); ++m) sd[m] = sd_by_definition(g, t, m);
  int best = n;
  for_each_partition(n, [&](const std::vector<int>& a) {
    const int blocks = *std::max_element(a.begin(), a.end()) + 1;
    if (blocks >= best) return true;
    std::vector<std::uint32_t> masks(blocks, 0);
    for (int v = 0; v < n; ++v) masks[a[v]] |= 1u << v;
    if (std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return sd[m]; }))
      best = blocks;
    return true;
  });
  return best;
}

/// Every proper subgraph has smaller chi_t: checked on single edge and
/// single isolated vertex deletions, which reach every proper subgraph.
inline bool critical(const Multigraph& g, unsigned t) {
  const int n = g.order();
  const int k = chi(g, t);
  for (Vertex v = 0; v < n; ++v) {
    bool isolated = true;
    for (Vertex u = 0; u < n; ++u)
      if (g.mult(u, v)) isolated = false;
    if (isolated && n > 1) return false;
    if (isolated && n == 1) return k == 1;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.mult(u, v)) continue;
      Multigraph h = g;
      h.set_mult(u, v, g.mult(u, v) - 1);
      if (chi(h, t) >= k) return false;
    }
  return true;
}

/// Lexicographically smallest upper-triangle string over all n! labellings.
inline std::string canonical(const Multigraph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool first = true;
  do {
    std::string s;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s.push_back(static_cast<char>(g.mult(perm[i], perm[j])));
    if (first || s < best) best = s;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

/// Decodes index `code` in base (m+1) into a multigraph on n vertices,
/// pairs in row-major order.
inline Multigraph from_code(int n, unsigned m, std::uint64_t code) {
  Multigraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      g.set_mult(u, v, static_cast<ppn::Multiplicity>(code % (m + 1)));
      code /= m + 1;
    }
  return g;
}

inline std::uint64_t code_count(int n, unsigned m) {
  std::uint64_t c = 1;
  for (int i = 0; i < n * (n - 1) / 2; ++i) c *= m + 1;
  return c;
}

inline Multigraph random_graph(std::mt19937& rng, int n, unsigned max_mult, double density) {
  std::bernoulli_distribution edge(density);
  std::uniform_int_distribution<unsigned> mult(1, std::max(1u, max_mult));
  Multigraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng)) g.set_mult(u, v, mult(rng));
  return g;
}

inline std::vector<Vertex> random_permutation(std::mt19937& rng, int n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
