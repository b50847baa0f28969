#pragma once

#include <cstdint>
#include <vector>

#include "ppn/multigraph.hpp"

namespace ppn {

/// Witness for membership in SD_t (strictly t-degenerate graphs).
///
/// verdict == true: `order` removes every vertex, each having degree <= t-1
/// in what remains at its turn. verdict == false: `core` is the t-core, the
/// unique maximal induced subgraph of minimum degree >= t.
struct PeelCertificate {
  bool verdict = true;
  std::vector<Vertex> order;
  VertexSet core;
};

/// Bucket-queue peeling; ties go to the smallest vertex index.
PeelCertificate strictly_t_degenerate(const Multigraph& g, unsigned t);

/// Same contract as strictly_t_degenerate, computed by inserting vertices
/// one at a time through an IncrementalPeel.
PeelCertificate peel_order_greedy(const Multigraph& g, unsigned t);

/// Vertex sets as bit masks. Used by the colouring solver; requires n <= 64.
using Mask = std::uint64_t;

inline constexpr int kMaskBits = 64;

/// Peeling restricted to the vertices of `set`.
bool mask_in_sd(const Multigraph& g, unsigned t, Mask set);

/// A growing vertex set S with the invariant G[S] in SD_t.
///
/// can_add(v) answers whether G[S + v] stays strictly t-degenerate. The
/// fast path is exact: if v sends at most t-1 edges into S, v can be peeled
/// first and the remainder is G[S].
class IncrementalPeel {
 public:
  IncrementalPeel(const Multigraph& g, unsigned t);

  bool can_add(Vertex v) const;
  /// Adds v unconditionally; callers check can_add first.
  void add(Vertex v);
  void remove(Vertex v);

  Mask members() const { return members_; }
  /// Insertion order of the current members.
  const std::vector<Vertex>& inserted() const { return inserted_; }

 private:
  const Multigraph* g_;
  unsigned t_;
  Mask members_ = 0;
  std::vector<Vertex> inserted_;
};

}  // namespace ppn
