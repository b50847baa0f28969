#include "ppn/degeneracy.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ppn/errors.hpp"

namespace ppn {

namespace {

void require_t(unsigned t) {
  if (t == 0) throw PreconditionError("t must be at least 1");
}

}  // namespace

PeelCertificate strictly_t_degenerate(const Multigraph& g, unsigned t) {
  require_t(t);
  const int n = g.order();
  std::vector<unsigned> deg(n);
  unsigned max_deg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }

  // buckets[d] holds the live vertices of current degree d.
  std::vector<std::set<Vertex>> buckets(max_deg + 1);
  for (Vertex v = 0; v < n; ++v) buckets[deg[v]].insert(v);
  std::vector<bool> removed(n, false);
  unsigned cursor = 0;

  PeelCertificate cert;
  for (int step = 0; step < n; ++step) {
    while (cursor <= max_deg && buckets[cursor].empty()) ++cursor;
    if (cursor > max_deg || cursor + 1 > t) break;
    const Vertex v = *buckets[cursor].begin();
    buckets[cursor].erase(buckets[cursor].begin());
    removed[v] = true;
    cert.order.push_back(v);
    for (Vertex u = 0; u < n; ++u) {
      const auto m = g.mult(u, v);
      if (removed[u] || m == 0) continue;
      buckets[deg[u]].erase(u);
      deg[u] -= m;
      buckets[deg[u]].insert(u);
      cursor = std::min(cursor, deg[u]);
    }
  }

  if (static_cast<int>(cert.order.size()) == n) return cert;
  cert.verdict = false;
  cert.order.clear();
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) cert.core.push_back(v);
  return cert;
}

bool mask_in_sd(const Multigraph& g, unsigned t, Mask set) {
  // Repeatedly strip vertices of degree <= t-1 inside the set.
  Mask live = set;
  bool changed = true;
  while (live && changed) {
    changed = false;
    for (Mask rest = live; rest; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      unsigned d = 0;
      for (Mask others = live & ~(Mask{1} << v); others; others &= others - 1) {
        d += g.mult(v, std::countr_zero(others));
        if (d >= t) break;
      }
      if (d + 1 <= t) {
        live &= ~(Mask{1} << v);
        changed = true;
      }
    }
  }
  return live == 0;
}

IncrementalPeel::IncrementalPeel(const Multigraph& g, unsigned t)
    : g_(&g), t_(t) {
  require_t(t);
  if (g.order() > kMaskBits) {
    throw PreconditionError("incremental peeling supports at most 64 vertices");
  }
}

bool IncrementalPeel::can_add(Vertex v) const {
  const Mask bit = Mask{1} << v;
  if (members_ & bit) return true;
  unsigned into = 0;
  for (Mask rest = members_; rest; rest &= rest - 1) {
    into += g_->mult(v, std::countr_zero(rest));
    if (into >= t_) break;
  }
  if (into + 1 <= t_) return true;
  return mask_in_sd(*g_, t_, members_ | bit);
}

void IncrementalPeel::add(Vertex v) {
  const Mask bit = Mask{1} << v;
  if (members_ & bit) return;
  members_ |= bit;
  inserted_.push_back(v);
}

void IncrementalPeel::remove(Vertex v) {
  const Mask bit = Mask{1} << v;
  if (!(members_ & bit)) return;
  members_ &= ~bit;
  inserted_.erase(std::find(inserted_.begin(), inserted_.end(), v));
}

PeelCertificate peel_order_greedy(const Multigraph& g, unsigned t) {
  require_t(t);
  if (g.order() > kMaskBits) return strictly_t_degenerate(g, t);
  IncrementalPeel peel(g, t);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!peel.can_add(v)) return strictly_t_degenerate(g, t);
    peel.add(v);
  }
  // Every prefix stayed in SD_t; the canonical certificate comes from the
  // bucket-queue peel so both entry points agree exactly.
  return strictly_t_degenerate(g, t);
}

}  // namespace ppn
