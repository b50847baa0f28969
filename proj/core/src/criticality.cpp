#include "ppn/criticality.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "parallel.hpp"
#include "ppn/errors.hpp"

namespace ppn {

namespace {

std::vector<VertexPair> support_pairs(const Multigraph& g) {
  std::vector<VertexPair> pairs;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.mult(u, v)) pairs.emplace_back(u, v);
  return pairs;
}

bool vertex_critical_given_k(const Multigraph& g, unsigned t, int k,
                             const SolverOptions& opts) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!find_coloring(remove_vertex(g, v), t, k - 1, opts)) return false;
  }
  return true;
}

}  // namespace

CriticalityReport is_critical(const Multigraph& g, unsigned t,
                              const CriticalityOptions& opts) {
  CriticalityReport report;
  report.k = chi_t(g, t, opts.solver).k;
  const int k = report.k;

  if (k == 0) {
    report.is_critical = report.is_vertex_critical = true;
    return report;
  }
  if (k == 1) {
    report.is_critical = report.is_vertex_critical = g.order() == 1;
    return report;
  }

  const auto stats = underlying_degree_stats(g);
  bool critical = stats->min_degree >= 1;

  if (critical) {
    const auto pairs = support_pairs(g);
    std::vector<std::optional<Coloring>> witness(pairs.size());
    std::vector<char> done(pairs.size(), 0);
    std::atomic<std::size_t> first_fail{std::numeric_limits<std::size_t>::max()};

    detail::parallel_for(pairs.size(), opts.jobs, [&](std::size_t i) {
      if (opts.stop_at_failure && i > first_fail.load()) return;
      const auto [u, v] = pairs[i];
      witness[i] = find_coloring(delete_edge(g, u, v), t, k - 1, opts.solver);
      done[i] = 1;
      if (!witness[i]) {
        std::size_t seen = first_fail.load();
        while (i < seen && !first_fail.compare_exchange_weak(seen, i)) {
        }
      }
    });

    // Indices are handed out in order, so every pair before the first
    // failure has been evaluated regardless of the worker count.
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!done[i]) break;
      if (!witness[i]) {
        critical = false;
        report.failing_edge = pairs[i];
        break;
      }
      report.edge_witnesses.emplace(pairs[i], std::move(*witness[i]));
    }
    if (critical && report.edge_witnesses.size() != pairs.size()) {
      throw std::logic_error("criticality scan ended early without a failure");
    }
  }

  report.is_critical = critical;
  report.is_vertex_critical =
      critical || vertex_critical_given_k(g, t, k, opts.solver);
  return report;
}

bool is_vertex_critical(const Multigraph& g, unsigned t, const SolverOptions& opts) {
  const int k = chi_t(g, t, opts).k;
  if (k == 0) return true;
  return vertex_critical_given_k(g, t, k, opts);
}

Subgraph critical_subgraph(const Multigraph& g, unsigned t, const SolverOptions& opts) {
  if (g.empty()) throw PreconditionError("critical_subgraph of the empty graph");
  const int k = chi_t(g, t, opts).k;
  if (k == 1) return induced_subgraph(g, {0});

  Multigraph current = g;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      while (current.mult(u, v) > 0) {
        Multigraph smaller = delete_edge(current, u, v);
        if (find_coloring(smaller, t, k - 1, opts)) break;
        current = std::move(smaller);
      }
    }

  VertexSet keep;
  for (Vertex v = 0; v < current.order(); ++v)
    if (current.degree(v) > 0) keep.push_back(v);
  return induced_subgraph(current, keep);
}

// Low vertex subgraph -------------------------------------------------------

std::string to_string(LowBlockShape shape) {
  switch (shape) {
    case LowBlockShape::UniformClique: return "uniform_clique";
    case LowBlockShape::TRegular: return "t_regular";
    case LowBlockShape::OddUniformCycle: return "odd_uniform_cycle";
    case LowBlockShape::SparseDegenerate: return "sd_t_max_degree_t";
    case LowBlockShape::Violation: return "VIOLATION";
  }
  return "unknown";
}

namespace {

/// Common multiplicity of all pairs, if there is one and it is positive.
std::optional<Multiplicity> uniform_clique_mult(const Multigraph& b) {
  if (b.order() < 2) return std::nullopt;
  const Multiplicity s = b.mult(0, 1);
  if (s == 0) return std::nullopt;
  for (Vertex u = 0; u < b.order(); ++u)
    for (Vertex v = u + 1; v < b.order(); ++v)
      if (b.mult(u, v) != s) return std::nullopt;
  return s;
}

/// Multiplicity s if b is sC_n for its order n >= 3.
std::optional<Multiplicity> uniform_cycle_mult(const Multigraph& b) {
  const int n = b.order();
  if (n < 3 || !is_connected(b)) return std::nullopt;
  std::optional<Multiplicity> s;
  for (Vertex v = 0; v < n; ++v) {
    int neighbours = 0;
    for (Vertex u = 0; u < n; ++u) {
      const auto m = b.mult(u, v);
      if (!m) continue;
      ++neighbours;
      if (s && *s != m) return std::nullopt;
      s = m;
    }
    if (neighbours != 2) return std::nullopt;
  }
  return s;
}

bool regular_of_degree(const Multigraph& b, unsigned d) {
  for (Vertex v = 0; v < b.order(); ++v)
    if (b.degree(v) != d) return false;
  return true;
}

}  // namespace

LowBlock classify_low_block(const Multigraph& block, unsigned t) {
  LowBlock out;
  const int n = block.order();
  if (n == 1) {
    out.shape = LowBlockShape::UniformClique;
    out.s = 1;
    return out;
  }
  if (auto s = uniform_clique_mult(block); s && *s <= t) {
    out.shape = LowBlockShape::UniformClique;
    out.s = *s;
    return out;
  }
  if (n > 0 && is_connected(block) && regular_of_degree(block, t)) {
    out.shape = LowBlockShape::TRegular;
    return out;
  }
  if (auto s = uniform_cycle_mult(block); s && *s <= t && n % 2 == 1) {
    out.shape = LowBlockShape::OddUniformCycle;
    out.s = *s;
    return out;
  }
  const auto stats = underlying_degree_stats(block);
  if (stats && stats->max_degree <= t && strictly_t_degenerate(block, t).verdict) {
    out.shape = LowBlockShape::SparseDegenerate;
    return out;
  }
  out.shape = LowBlockShape::Violation;
  return out;
}

bool LowVertexReport::violation() const {
  return std::any_of(blocks.begin(), blocks.end(), [](const LowBlock& b) {
    return b.shape == LowBlockShape::Violation;
  });
}

LowVertexReport low_vertex_analysis(const Multigraph& g, unsigned t,
                                    const SolverOptions& opts) {
  CriticalityOptions copts;
  copts.solver = opts;
  const auto crit = is_critical(g, t, copts);
  if (!crit.is_critical) {
    throw PreconditionError("low vertex analysis needs a critical graph");
  }
  LowVertexReport report;
  report.k = crit.k;
  const unsigned low_degree = t * static_cast<unsigned>(std::max(crit.k - 1, 0));
  for (Vertex v = 0; v < g.order(); ++v) {
    (g.degree(v) == low_degree ? report.low : report.high).push_back(v);
  }
  if (report.low.empty()) return report;

  const auto low_graph = induced_subgraph(g, report.low);
  for (const auto& b : blocks(low_graph.graph)) {
    LowBlock lb = classify_low_block(induced_subgraph(low_graph.graph, b).graph, t);
    for (Vertex v : b) lb.vertices.push_back(low_graph.vertices[v]);
    report.blocks.push_back(std::move(lb));
  }
  return report;
}

// Brooks-type bound ---------------------------------------------------------

std::string to_string(BrooksClass c) {
  switch (c) {
    case BrooksClass::UniformClique: return "uniform_clique";
    case BrooksClass::TCycleOdd: return "t_cycle_odd";
    case BrooksClass::TRegularK2: return "t_regular_k2";
    case BrooksClass::StrictInequality: return "strict_inequality";
    case BrooksClass::Violation: return "VIOLATION";
  }
  return "unknown";
}

BrooksReport brooks_equality_classify(const Multigraph& g, unsigned t,
                                      const SolverOptions& opts) {
  BrooksReport r;
  r.bound = brooks_upper_bound(g, t);
  r.k = chi_t(g, t, opts).k;
  const int n = g.order();

  if (r.k > r.bound) {
    r.classification = BrooksClass::Violation;
    return r;
  }
  if (r.k < r.bound) {
    r.classification = BrooksClass::StrictInequality;
    return r;
  }

  // sK_n with s | t and (n-1) s = t (k-1); K_1 counts with any s.
  {
    std::optional<Multiplicity> s;
    if (n == 1) s = t;
    else s = uniform_clique_mult(g);
    if (s && *s <= t && t % *s == 0 &&
        static_cast<unsigned>(n - 1) * *s == t * static_cast<unsigned>(r.k - 1)) {
      r.classification = BrooksClass::UniformClique;
      return r;
    }
  }
  if (auto s = uniform_cycle_mult(g); s && *s == t && n % 2 == 1 && r.k == 3) {
    r.classification = BrooksClass::TCycleOdd;
    return r;
  }
  if (regular_of_degree(g, t) && r.k == 2) {
    r.classification = BrooksClass::TRegularK2;
    return r;
  }
  r.classification = BrooksClass::Violation;
  return r;
}

}  // namespace ppn
