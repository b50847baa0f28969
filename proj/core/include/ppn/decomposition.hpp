#pragma once

#include <vector>

#include "ppn/coloring.hpp"
#include "ppn/multigraph.hpp"

namespace ppn {

struct Factor {
  Multigraph graph;    ///< G[X] for a component X of the t-complement
  VertexSet vertices;  ///< X, as indices of G
  int k = 0;           ///< chi_t of the factor
  bool critical = false;
};

/// G as the Dirac t-join of its t-indecomposable factors.
struct DecompositionReport {
  unsigned t = 1;
  std::vector<Factor> factors;  ///< sorted by canonical form of the factor
  int p = 0;  ///< factors equal to K_1
  int q = 0;  ///< critical factors with chi_t = 2 and order >= 3

  bool indecomposable() const { return factors.size() == 1; }
};

/// Requires mu(G) <= t.
DecompositionReport decompose(const Multigraph& g, unsigned t,
                              const SolverOptions& opts = {});

/// Iterated Dirac t-join of the factors in report order.
Multigraph rejoin(const DecompositionReport& report);

struct DominatingCensus {
  int p = 0;
  int q = 0;
};

/// Numbers of t-dominating subgraphs isomorphic to K_1 (p) and with
/// chi_t = 2 and order >= 3 (q), read off the factorization. A t-dominating
/// subgraph is a union of factors; a union of two or more factors either
/// has chi_t >= 3 or is tK_2 of order 2, so only single factors count.
/// G itself is admitted (the empty graph as co-factor), so an
/// indecomposable K_1 has p = 1 and C_n at t = 2 has q = 1.
DominatingCensus t_dominating_census(const Multigraph& g, unsigned t,
                                     const SolverOptions& opts = {});

struct TheoremAVerdict {
  int k = 0;
  int n = 0;
  int factor_count = 0;
  bool hypothesis = false;  ///< n <= 2k - 2
  bool holds = true;
};

/// For critical G: n <= 2k-2 forces at least two factors. Throws
/// PreconditionError for non-critical input.
TheoremAVerdict check_theorem_A(const Multigraph& g, unsigned t,
                                const SolverOptions& opts = {});

struct Theorem71Verdict {
  int k = 0;
  int n = 0;
  int p = 0;
  int q = 0;
  // p >= 3k - 2n, equality iff every non-K_1 factor is K_3(t).
  bool inequality_a = true;
  bool equality_a = false;
  bool characterization_a = false;
  // 2p + q >= 5k - 3n, equality iff the chi_t = 2 factors are K_3(t)'s and
  // the remaining ones lie in Cri_t(3,5).
  bool inequality_b = true;
  bool equality_b = false;
  bool characterization_b = false;

  bool holds() const {
    return inequality_a && inequality_b && equality_a == characterization_a &&
           equality_b == characterization_b;
  }
};

Theorem71Verdict check_theorem_7_1(const Multigraph& g, unsigned t,
                                   const SolverOptions& opts = {});

}  // namespace ppn
