#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ppn {

using Vertex = int;
using Multiplicity = unsigned;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

/// Loopless multigraph on vertices 0..n-1, stored as a dense symmetric
/// multiplicity matrix. n = 0 is the empty graph.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n);

  int order() const { return n_; }
  bool empty() const { return n_ == 0; }

  Multiplicity mult(Vertex u, Vertex v) const {
    return u == v ? 0u : mult_[index(u, v)];
  }

  /// Sets mu(u,v) = mu(v,u) = m. Throws PreconditionError on u == v or an
  /// out-of-range index.
  void set_mult(Vertex u, Vertex v, Multiplicity m);
  void add_edges(Vertex u, Vertex v, Multiplicity m = 1);

  std::size_t edge_count() const;
  unsigned degree(Vertex v) const;

  /// Largest pairwise multiplicity, 0 for graphs with fewer than two vertices.
  Multiplicity max_mult() const;

  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<std::uint16_t> mult_;
};

/// Induced subgraph together with the map from new to old vertex indices.
struct Subgraph {
  Multigraph graph;
  VertexSet vertices;  ///< vertices[i] is the original index of new vertex i
};

struct DegreeStats {
  unsigned min_degree;
  unsigned max_degree;
  Multiplicity max_mult;
};

Subgraph induced_subgraph(const Multigraph& g, const VertexSet& x);
Multigraph remove_vertex(const Multigraph& g, Vertex v);

/// Removes exactly one of the parallel edges joining u and v.
Multigraph delete_edge(const Multigraph& g, Vertex u, Vertex v);

/// Absent for the empty graph.
std::optional<DegreeStats> underlying_degree_stats(const Multigraph& g);

std::vector<VertexSet> components(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// Blocks (maximal subgraphs without a separating vertex) as vertex sets,
/// sorted lexicographically. Isolated vertices form singleton blocks.
std::vector<VertexSet> blocks(const Multigraph& g);

/// mu_H(u,v) = t - mu_G(u,v) for every pair. Requires mu(G) <= t.
Multigraph t_complement(const Multigraph& g, Multiplicity t);

/// Every multiplicity scaled by t.
Multigraph t_uniform_inflation(const Multigraph& g, Multiplicity t);

/// perm[v] is the new index of old vertex v.
Multigraph relabel(const Multigraph& g, const std::vector<Vertex>& perm);

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

VertexSet complement_set(int n, const VertexSet& x);

// Canonical labelling -------------------------------------------------------

/// Default vertex bound for canonical_form.
inline constexpr int kCanonicalMaxOrder = 10;

/// Byte string: the order followed by the upper triangle of the minimal
/// relabelled multiplicity matrix, listed column by column
/// (0,1), (0,2), (1,2), (0,3), ... Equal strings iff isomorphic graphs.
using CanonicalLabel = std::string;

CanonicalLabel canonical_form(const Multigraph& g,
                              int max_order = kCanonicalMaxOrder);

/// The representative graph encoded by a canonical label.
Multigraph from_canonical(const CanonicalLabel& label);

/// from_canonical(canonical_form(g)).
Multigraph canonical_graph(const Multigraph& g,
                           int max_order = kCanonicalMaxOrder);

bool isomorphic(const Multigraph& a, const Multigraph& b);

}  // namespace ppn
