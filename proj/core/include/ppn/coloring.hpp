#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ppn/degeneracy.hpp"
#include "ppn/multigraph.hpp"

namespace ppn {

/// Vertex -> colour map with colours 1..k (0 marks an unassigned vertex)
/// together with the degeneracy parameter t it is meant for.
class Coloring {
 public:
  Coloring() = default;
  Coloring(std::vector<int> colors, unsigned t);

  int order() const { return static_cast<int>(colors_.size()); }
  unsigned t() const { return t_; }
  int color(Vertex v) const { return colors_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& colors() const { return colors_; }
  bool total() const;

  /// Used colours, ascending.
  std::vector<int> used_colors() const;
  /// Number of used colours.
  int count() const;
  /// Non-empty colour classes, ordered by colour.
  std::vector<VertexSet> classes() const;
  /// Vertices whose class is a singleton.
  VertexSet singletons() const;

  /// Same partition, colours renumbered by first vertex (restricted growth).
  Coloring normalized() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
  unsigned t_ = 1;
};

/// Every colour class induces a strictly t-degenerate subgraph, t = phi.t().
/// Throws PreconditionError for a partial or mis-sized assignment.
bool validate(const Multigraph& g, const Coloring& phi);

struct SolverOptions {
  /// Search nodes per call before BudgetExceeded is thrown.
  std::uint64_t node_budget = 200'000'000;
};

struct ChiResult {
  int k = 0;
  Coloring witness;
};

/// Exact point partition number with a witness colouring using exactly k
/// colours. Solves each component separately.
ChiResult chi_t(const Multigraph& g, unsigned t, const SolverOptions& opts = {});

/// An SD_t-colouring with at most k colours, or nullopt if none exists.
std::optional<Coloring> find_coloring(const Multigraph& g, unsigned t, int k,
                                      const SolverOptions& opts = {});

/// First-fit colouring in vertex order.
Coloring greedy_coloring(const Multigraph& g, unsigned t);
int greedy_upper_bound(const Multigraph& g, unsigned t);

/// ceil(Delta/t) + 1 for a connected non-empty graph.
int brooks_upper_bound(const Multigraph& g, unsigned t);

struct EnumerationOptions {
  std::uint64_t node_budget = 100'000'000;
};

/// Calls `visit` once per colour-class partition with exactly chi_t(G)
/// classes. Colourings arrive normalized; returning false stops early.
void enumerate_optimal_colorings(const Multigraph& g, unsigned t,
                                 const std::function<bool(const Coloring&)>& visit,
                                 const EnumerationOptions& opts = {});

std::vector<Coloring> optimal_colorings(const Multigraph& g, unsigned t,
                                        const EnumerationOptions& opts = {});

/// Optimal colouring with {v} as a class and as few singleton classes as
/// possible. Requires chi_t(G - v) < chi_t(G).
Coloring extreme_coloring(const Multigraph& g, unsigned t, Vertex v,
                          const EnumerationOptions& opts = {});

/// Hypergraph on V(G) whose edges are the colour classes of size >= 2 of
/// one colouring (max degree 1) or of two colourings (max degree 2).
struct ClassHypergraph {
  int order = 0;
  std::vector<VertexSet> edges;

  /// Vertex sets of the components; isolated vertices are singletons.
  std::vector<VertexSet> components() const;
  /// Vertices in no edge.
  VertexSet isolated() const;
  int max_degree() const;
};

ClassHypergraph class_hypergraph(const Coloring& first,
                                 const std::optional<Coloring>& second = std::nullopt);

/// Every class lies inside X or misses it.
bool is_closed(const Coloring& phi, const VertexSet& x);

/// phi1 on X together with phi2 on the rest, classes kept apart. Colours of
/// phi1 are kept; a phi2 colour already used inside X is moved to the next
/// free colour. Requires X closed under both colourings.
Coloring recombine(const Coloring& phi1, const Coloring& phi2, const VertexSet& x);

}  // namespace ppn
