#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppn/coloring.hpp"
#include "ppn/multigraph.hpp"

namespace ppn {

using VertexPair = std::pair<Vertex, Vertex>;

struct CriticalityOptions {
  SolverOptions solver;
  /// Worker threads for the per-pair solves.
  int jobs = 1;
  /// Stop at the first pair whose deletion keeps chi_t.
  bool stop_at_failure = true;
};

struct CriticalityReport {
  int k = 0;
  bool is_critical = false;
  bool is_vertex_critical = false;
  /// One (k-1)-colouring of G - e per vertex pair with positive multiplicity.
  std::map<VertexPair, Coloring> edge_witnesses;
  std::optional<VertexPair> failing_edge;
};

/// chi_t-criticality via single-edge deletions. One solve per vertex pair:
/// deleting any edge of a parallel bundle yields the same multigraph.
CriticalityReport is_critical(const Multigraph& g, unsigned t,
                              const CriticalityOptions& opts = {});

/// Every vertex deletion lowers chi_t.
bool is_vertex_critical(const Multigraph& g, unsigned t,
                        const SolverOptions& opts = {});

/// Critical subgraph with the same chi_t: deletes edges in lexicographic
/// pair order while chi_t stays put, then drops isolated vertices.
Subgraph critical_subgraph(const Multigraph& g, unsigned t,
                           const SolverOptions& opts = {});

enum class LowBlockShape {
  UniformClique,     ///< sK_n, 1 <= s <= t
  TRegular,          ///< connected t-regular
  OddUniformCycle,   ///< sC_n, 1 <= s <= t, n >= 3 odd
  SparseDegenerate,  ///< in SD_t with maximum degree <= t
  Violation,
};

std::string to_string(LowBlockShape shape);

struct LowBlock {
  VertexSet vertices;  ///< indices in G
  LowBlockShape shape = LowBlockShape::Violation;
  Multiplicity s = 0;  ///< uniform multiplicity for the clique/cycle shapes
};

struct LowVertexReport {
  int k = 0;
  VertexSet low;   ///< degree exactly t(k-1)
  VertexSet high;
  std::vector<LowBlock> blocks;  ///< blocks of the low vertex subgraph
  bool violation() const;
};

/// Classifies the blocks of the low vertex subgraph of a critical graph.
/// Overlapping shapes resolve to the first match in the enum order.
LowVertexReport low_vertex_analysis(const Multigraph& g, unsigned t,
                                    const SolverOptions& opts = {});

/// Shape classification used by low_vertex_analysis, exposed for tests.
LowBlock classify_low_block(const Multigraph& block, unsigned t);

enum class BrooksClass {
  UniformClique,   ///< G = sK_{(t/s)p+1}, s | t, chi_t = p + 1
  TCycleOdd,       ///< G = tC_n, n >= 3 odd, chi_t = 3
  TRegularK2,      ///< connected t-regular, chi_t = 2
  StrictInequality,
  Violation,
};

std::string to_string(BrooksClass c);

struct BrooksReport {
  int k = 0;
  int bound = 0;
  BrooksClass classification = BrooksClass::StrictInequality;
};

/// Decides chi_t = ceil(Delta/t) + 1 and names the equality family.
BrooksReport brooks_equality_classify(const Multigraph& g, unsigned t,
                                      const SolverOptions& opts = {});

}  // namespace ppn
