#include "ppn/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "ppn/errors.hpp"

namespace ppn {

Multigraph::Multigraph(int n) : n_(n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  mult_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

void Multigraph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    throw PreconditionError("vertex index " + std::to_string(v) +
                            " out of range for order " + std::to_string(n_));
  }
}

void Multigraph::set_mult(Vertex u, Vertex v, Multiplicity m) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("loops are not allowed");
  if (m > std::numeric_limits<std::uint16_t>::max()) {
    throw PreconditionError("multiplicity too large");
  }
  mult_[index(u, v)] = static_cast<std::uint16_t>(m);
  mult_[index(v, u)] = static_cast<std::uint16_t>(m);
}

void Multigraph::add_edges(Vertex u, Vertex v, Multiplicity m) {
  check_vertex(u);
  check_vertex(v);
  set_mult(u, v, mult(u, v) + m);
}

std::size_t Multigraph::edge_count() const {
  std::size_t e = 0;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v) e += mult(u, v);
  return e;
}

unsigned Multigraph::degree(Vertex v) const {
  check_vertex(v);
  unsigned d = 0;
  for (Vertex u = 0; u < n_; ++u) d += mult(u, v);
  return d;
}

Multiplicity Multigraph::max_mult() const {
  Multiplicity m = 0;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v) m = std::max(m, mult(u, v));
  return m;
}

Subgraph induced_subgraph(const Multigraph& g, const VertexSet& x) {
  VertexSet sorted = x;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    if (!g.contains(v)) {
      throw PreconditionError("vertex index " + std::to_string(v) +
                              " out of range");
    }
  }
  Multigraph h(static_cast<int>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const auto m = g.mult(sorted[i], sorted[j]);
      if (m) h.set_mult(static_cast<Vertex>(i), static_cast<Vertex>(j), m);
    }
  return {std::move(h), std::move(sorted)};
}

Multigraph remove_vertex(const Multigraph& g, Vertex v) {
  if (!g.contains(v)) throw PreconditionError("vertex index out of range");
  VertexSet keep;
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep).graph;
}

Multigraph delete_edge(const Multigraph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v) || u == v) {
    throw PreconditionError("invalid vertex pair");
  }
  if (g.mult(u, v) == 0) {
    throw PreconditionError("no edge between " + std::to_string(u) + " and " +
                            std::to_string(v));
  }
  Multigraph h = g;
  h.set_mult(u, v, g.mult(u, v) - 1);
  return h;
}

std::optional<DegreeStats> underlying_degree_stats(const Multigraph& g) {
  if (g.empty()) return std::nullopt;
  DegreeStats s{std::numeric_limits<unsigned>::max(), 0, g.max_mult()};
  for (Vertex v = 0; v < g.order(); ++v) {
    const unsigned d = g.degree(v);
    s.min_degree = std::min(s.min_degree, d);
    s.max_degree = std::max(s.max_degree, d);
  }
  return s;
}

std::vector<VertexSet> components(const Multigraph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    VertexSet members;
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (Vertex w = 0; w < n; ++w) {
        if (comp[w] < 0 && g.mult(u, w) > 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Multigraph& g) { return components(g).size() <= 1; }

std::vector<VertexSet> blocks(const Multigraph& g) {
  const int n = g.order();
  if (n == 0) throw PreconditionError("blocks of the empty graph");

  // Low-point traversal over the support graph. A parallel bundle is one
  // support edge, so it lands in exactly one block.
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<Vertex, Vertex>> edge_stack;
  std::vector<VertexSet> out;
  int timer = 0;

  auto pop_block = [&](Vertex u, Vertex w) {
    VertexSet b;
    while (true) {
      auto [a, c] = edge_stack.back();
      edge_stack.pop_back();
      b.push_back(a);
      b.push_back(c);
      if (a == u && c == w) break;
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    out.push_back(std::move(b));
  };

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    for (Vertex w = 0; w < n; ++w) {
      if (w == u || g.mult(u, w) == 0) continue;
      if (disc[w] < 0) {
        edge_stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) pop_block(u, w);
      } else if (w != parent && disc[w] < disc[u]) {
        edge_stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };

  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    bool isolated = true;
    for (Vertex w = 0; w < n && isolated; ++w) isolated = g.mult(s, w) == 0;
    if (isolated) {
      disc[s] = timer++;
      out.push_back({s});
      continue;
    }
    dfs(s, -1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Multigraph t_complement(const Multigraph& g, Multiplicity t) {
  const int n = g.order();
  Multigraph h(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const auto m = g.mult(u, v);
      if (m > t) {
        throw PreconditionError("multiplicity " + std::to_string(m) +
                                " exceeds t = " + std::to_string(t));
      }
      if (t - m) h.set_mult(u, v, t - m);
    }
  return h;
}

Multigraph t_uniform_inflation(const Multigraph& g, Multiplicity t) {
  const int n = g.order();
  Multigraph h(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.mult(u, v)) h.set_mult(u, v, g.mult(u, v) * t);
  return h;
}

Multigraph relabel(const Multigraph& g, const std::vector<Vertex>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw PreconditionError("permutation size mismatch");
  }
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= n || hit[p]) throw PreconditionError("relabel needs a permutation");
    hit[p] = 1;
  }
  Multigraph h(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.mult(u, v)) h.set_mult(perm[u], perm[v], g.mult(u, v));
  return h;
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  const int na = a.order();
  Multigraph h(na + b.order());
  for (Vertex u = 0; u < na; ++u)
    for (Vertex v = u + 1; v < na; ++v)
      if (a.mult(u, v)) h.set_mult(u, v, a.mult(u, v));
  for (Vertex u = 0; u < b.order(); ++u)
    for (Vertex v = u + 1; v < b.order(); ++v)
      if (b.mult(u, v)) h.set_mult(na + u, na + v, b.mult(u, v));
  return h;
}

VertexSet complement_set(int n, const VertexSet& x) {
  std::vector<bool> in(n, false);
  for (Vertex v : x) in.at(v) = true;
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

// Canonical labelling -------------------------------------------------------

namespace {

// Equitable refinement of an ordered vertex colouring. Colours are ranks of
// (own colour, sorted multiset of (neighbour colour, multiplicity)), so the
// result only depends on the graph and the input colouring, never on vertex
// names.
void refine(const Multigraph& g, std::vector<int>& cell) {
  const int n = g.order();
  using Signature = std::pair<int, std::vector<std::pair<int, unsigned>>>;
  int cells = static_cast<int>(
      std::set<int>(cell.begin(), cell.end()).size());
  std::vector<Signature> sig(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = cell[v];
      sig[v].second.clear();
      for (Vertex u = 0; u < n; ++u)
        if (u != v && g.mult(u, v)) sig[v].second.emplace_back(cell[u], g.mult(u, v));
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v) {
      cell[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
          distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == cells) return;
    cells = now;
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Multigraph& g)
      : g_(g), n_(g.order()), base_(n_, 0), placed_(n_, false) {
    refine(g_, base_);
    pos_.reserve(n_);
  }

  std::string run() {
    dfs(0);
    std::string label;
    label.reserve(1 + best_.size());
    label.push_back(static_cast<char>(n_));
    for (auto m : best_) label.push_back(static_cast<char>(m));
    return label;
  }

 private:
  // Twins have identical multiplicities to every third vertex; swapping two
  // of them is an automorphism that fixes everything already placed.
  bool twins(Vertex a, Vertex b) const {
    for (Vertex x = 0; x < n_; ++x) {
      if (x == a || x == b) continue;
      if (g_.mult(a, x) != g_.mult(b, x)) return false;
    }
    return true;
  }

  std::vector<Vertex> candidates() const {
    const int p = static_cast<int>(pos_.size());
    std::vector<int> cell(n_);
    for (int i = 0; i < p; ++i) cell[pos_[i]] = i;
    for (Vertex v = 0; v < n_; ++v)
      if (!placed_[v]) cell[v] = p + base_[v];
    if (p > 0) refine(g_, cell);
    int first = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < n_; ++v)
      if (!placed_[v]) first = std::min(first, cell[v]);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v) {
      if (placed_[v] || cell[v] != first) continue;
      bool dup = false;
      for (Vertex w : out) {
        if (twins(v, w)) {
          dup = true;
          break;
        }
      }
      if (!dup) out.push_back(v);
    }
    return out;
  }

  // cmp: -1 the current prefix already beats best_, 0 equal so far.
  void dfs(int cmp) {
    const int p = static_cast<int>(pos_.size());
    if (p == n_) {
      if (!have_best_ || cmp < 0) {
        best_ = current_;
        have_best_ = true;
      }
      return;
    }
    for (Vertex w : candidates()) {
      const std::size_t mark = current_.size();
      int c = cmp;
      bool worse = false;
      for (int i = 0; i < p; ++i) {
        const auto m = static_cast<std::uint8_t>(g_.mult(pos_[i], w));
        current_.push_back(m);
        if (have_best_ && c == 0) {
          const auto b = best_[mark + static_cast<std::size_t>(i)];
          if (m < b) c = -1;
          else if (m > b) {
            worse = true;
            break;
          }
        }
      }
      if (!worse) {
        pos_.push_back(w);
        placed_[w] = true;
        dfs(have_best_ ? c : -1);
        placed_[w] = false;
        pos_.pop_back();
      }
      current_.resize(mark);
    }
  }

  const Multigraph& g_;
  int n_;
  std::vector<int> base_;
  std::vector<bool> placed_;
  std::vector<Vertex> pos_;
  std::vector<std::uint8_t> current_;
  std::vector<std::uint8_t> best_;
  bool have_best_ = false;
};

}  // namespace

CanonicalLabel canonical_form(const Multigraph& g, int max_order) {
  if (g.order() > max_order) {
    throw PreconditionError("canonical_form: order " +
                            std::to_string(g.order()) + " exceeds bound " +
                            std::to_string(max_order));
  }
  if (g.order() > 255 || g.max_mult() > 255) {
    throw PreconditionError("canonical_form: graph too large to encode");
  }
  return CanonicalSearch(g).run();
}

Multigraph from_canonical(const CanonicalLabel& label) {
  if (label.empty()) throw PreconditionError("empty canonical label");
  const int n = static_cast<unsigned char>(label[0]);
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - (n > 0)) / 2;
  if (label.size() != 1 + pairs) throw PreconditionError("malformed label");
  Multigraph g(n);
  std::size_t i = 1;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      const auto m = static_cast<unsigned char>(label[i++]);
      if (m) g.set_mult(u, v, m);
    }
  return g;
}

Multigraph canonical_graph(const Multigraph& g, int max_order) {
  return from_canonical(canonical_form(g, max_order));
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const int bound = std::max(a.order(), kCanonicalMaxOrder);
  return canonical_form(a, bound) == canonical_form(b, bound);
}

}  // namespace ppn
