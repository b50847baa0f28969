#pragma once

#include "ppn/multigraph.hpp"

namespace ppn {

/// K_k. k >= 0.
Multigraph complete(int k);
/// C_n for n >= 2; C_2 is a double edge.
Multigraph cycle(int n);
/// sK_n, every pair with multiplicity s.
Multigraph s_clique(Multiplicity s, int n);
/// sC_n, every cycle pair with multiplicity s.
Multigraph s_cycle(Multiplicity s, int n);
/// Path on n vertices 0-1-...-(n-1).
Multigraph path(int n);
/// n isolated vertices.
Multigraph edgeless(int n);

/// K_3(t): (t/2)K_3 for even t, ((t+1)/2)K_3 minus one edge of the pair
/// (1,2) for odd t. Requires t >= 2.
Multigraph k3t(unsigned t);

/// Member of the Dirac-Gallai family DG(k) on 2k-1 vertices, selected by
/// |Y1|. Vertex layout: X = 0..k-3, Y1 then Y2 = k-2..2k-4, v1 = 2k-3,
/// v2 = 2k-2. Requires k >= 3 and 1 <= |Y1| <= k-2.
Multigraph gallai_dirac(int k, int y1);

/// Disjoint union with multiplicity l between every cross pair. G1's
/// vertices come first.
Multigraph dirac_join(const Multigraph& g1, const Multigraph& g2, Multiplicity l);

/// Operands of a Hajos l-join. Which l edges of a bundle are removed is
/// immaterial in a multigraph.
struct HajosSpec {
  Multigraph g1;
  Multigraph g2;
  Vertex u1 = 0, v1 = 1;
  Vertex u2 = 0, v2 = 1;
  Multiplicity l = 1;
};

/// Removes l edges u1v1 and l edges u2v2, identifies v2 with v1 and adds l
/// edges u1u2. Numbering: G1's vertices, then G2's with v2 skipped.
Multigraph hajos_join(const HajosSpec& spec);

}  // namespace ppn
