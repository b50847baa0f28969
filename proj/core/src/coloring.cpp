#include "ppn/coloring.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "ppn/errors.hpp"

namespace ppn {

// Coloring ------------------------------------------------------------------

Coloring::Coloring(std::vector<int> colors, unsigned t)
    : colors_(std::move(colors)), t_(t) {
  if (t == 0) throw PreconditionError("t must be at least 1");
  for (int c : colors_)
    if (c < 0) throw PreconditionError("negative colour");
}

bool Coloring::total() const {
  return std::none_of(colors_.begin(), colors_.end(), [](int c) { return c == 0; });
}

std::vector<int> Coloring::used_colors() const {
  std::vector<int> used;
  for (int c : colors_)
    if (c > 0) used.push_back(c);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  return used;
}

int Coloring::count() const { return static_cast<int>(used_colors().size()); }

std::vector<VertexSet> Coloring::classes() const {
  std::map<int, VertexSet> by_color;
  for (Vertex v = 0; v < order(); ++v)
    if (colors_[v] > 0) by_color[colors_[v]].push_back(v);
  std::vector<VertexSet> out;
  for (auto& [c, members] : by_color) out.push_back(std::move(members));
  return out;
}

VertexSet Coloring::singletons() const {
  VertexSet out;
  for (const auto& cls : classes())
    if (cls.size() == 1) out.push_back(cls.front());
  std::sort(out.begin(), out.end());
  return out;
}

Coloring Coloring::normalized() const {
  std::map<int, int> rename;
  std::vector<int> out(colors_.size(), 0);
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] == 0) continue;
    auto [it, fresh] = rename.try_emplace(colors_[v], static_cast<int>(rename.size()) + 1);
    out[v] = it->second;
  }
  return Coloring(std::move(out), t_);
}

bool validate(const Multigraph& g, const Coloring& phi) {
  if (phi.order() != g.order()) {
    throw PreconditionError("colouring size does not match the graph order");
  }
  if (!phi.total()) throw PreconditionError("partial colouring");
  for (const auto& cls : phi.classes()) {
    if (!strictly_t_degenerate(induced_subgraph(g, cls).graph, phi.t()).verdict) {
      return false;
    }
  }
  return true;
}

// Branch and bound ----------------------------------------------------------

namespace {

void require_small(const Multigraph& g) {
  if (g.order() > kMaskBits) {
    throw PreconditionError("colouring solver supports components of at most 64 vertices");
  }
}

Mask bit(Vertex v) { return Mask{1} << v; }

/// Feasibility of adding v to a class already known to be in SD_t.
bool fits(const Multigraph& g, unsigned t, Mask cls, Vertex v) {
  unsigned into = 0;
  for (Mask rest = cls; rest; rest &= rest - 1) {
    into += g.mult(v, std::countr_zero(rest));
    if (into >= t) return mask_in_sd(g, t, cls | bit(v));
  }
  return true;
}

// DSATUR-flavoured search: branch on the uncoloured vertex with the fewest
// feasible classes, ties to the larger degree. A vertex may open at most the
// next unused class index, which removes colour permutations.
class DecisionSearch {
 public:
  DecisionSearch(const Multigraph& g, unsigned t, int k, std::uint64_t budget)
      : g_(g), t_(t), k_(k), n_(g.order()), budget_(budget), color_(n_, 0) {
    degree_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) degree_[v] = g.degree(v);
  }

  std::optional<Coloring> run() {
    if (n_ == 0) return Coloring({}, t_);
    if (k_ <= 0) return std::nullopt;
    if (!dfs(n_)) return std::nullopt;
    return Coloring(color_, t_);
  }

 private:
  bool dfs(int remaining) {
    if (remaining == 0) return true;
    if (++nodes_ > budget_) {
      throw BudgetExceeded("colouring search exceeded " + std::to_string(budget_) +
                           " nodes");
    }

    Vertex pick = -1;
    int pick_options = std::numeric_limits<int>::max();
    const int open = static_cast<int>(classes_.size());
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v]) continue;
      int options = open < k_ ? 1 : 0;
      for (int c = 0; c < open; ++c)
        if (fits(g_, t_, classes_[c], v)) ++options;
      if (options < pick_options ||
          (options == pick_options && degree_[v] > degree_[pick])) {
        pick = v;
        pick_options = options;
      }
      if (options == 0) return false;
    }

    for (int c = 0; c < open; ++c) {
      if (!fits(g_, t_, classes_[c], pick)) continue;
      classes_[c] |= bit(pick);
      color_[pick] = c + 1;
      if (dfs(remaining - 1)) return true;
      color_[pick] = 0;
      classes_[c] &= ~bit(pick);
    }
    if (open < k_) {
      classes_.push_back(bit(pick));
      color_[pick] = open + 1;
      if (dfs(remaining - 1)) return true;
      color_[pick] = 0;
      classes_.pop_back();
    }
    return false;
  }

  const Multigraph& g_;
  unsigned t_;
  int k_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> color_;
  std::vector<unsigned> degree_;
  std::vector<Mask> classes_;
};

ChiResult chi_connected(const Multigraph& g, unsigned t, const SolverOptions& opts) {
  require_small(g);
  Coloring best = greedy_coloring(g, t);
  int k = best.count();
  const int brooks = brooks_upper_bound(g, t);
  if (brooks < k) {
    auto c = DecisionSearch(g, t, brooks, opts.node_budget).run();
    if (!c) throw std::logic_error("Brooks-type bound violated by the solver");
    best = *c;
    k = best.count();
  }
  const int lower = strictly_t_degenerate(g, t).verdict ? 1 : 2;
  while (k > lower) {
    auto c = DecisionSearch(g, t, k - 1, opts.node_budget).run();
    if (!c) break;
    best = *c;
    k = best.count();
  }
  return {k, best};
}

}  // namespace

std::optional<Coloring> find_coloring(const Multigraph& g, unsigned t, int k,
                                      const SolverOptions& opts) {
  if (t == 0) throw PreconditionError("t must be at least 1");
  if (g.empty()) return Coloring({}, t);
  if (k <= 0) return std::nullopt;
  std::vector<int> colors(g.order(), 0);
  for (const auto& comp : components(g)) {
    const auto sub = induced_subgraph(g, comp);
    require_small(sub.graph);
    auto c = DecisionSearch(sub.graph, t, k, opts.node_budget).run();
    if (!c) return std::nullopt;
    for (std::size_t i = 0; i < comp.size(); ++i) colors[comp[i]] = c->color(static_cast<Vertex>(i));
  }
  return Coloring(std::move(colors), t);
}

ChiResult chi_t(const Multigraph& g, unsigned t, const SolverOptions& opts) {
  if (t == 0) throw PreconditionError("t must be at least 1");
  if (g.empty()) return {0, Coloring({}, t)};
  std::vector<int> colors(g.order(), 0);
  int k = 0;
  for (const auto& comp : components(g)) {
    const auto sub = induced_subgraph(g, comp);
    const ChiResult part = chi_connected(sub.graph, t, opts);
    k = std::max(k, part.k);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      colors[comp[i]] = part.witness.color(static_cast<Vertex>(i));
    }
  }
  return {k, Coloring(std::move(colors), t)};
}

Coloring greedy_coloring(const Multigraph& g, unsigned t) {
  if (t == 0) throw PreconditionError("t must be at least 1");
  require_small(g);
  std::vector<Mask> classes;
  std::vector<int> colors(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    std::size_t c = 0;
    while (c < classes.size() && !fits(g, t, classes[c], v)) ++c;
    if (c == classes.size()) classes.push_back(0);
    classes[c] |= bit(v);
    colors[v] = static_cast<int>(c) + 1;
  }
  return Coloring(std::move(colors), t);
}

int greedy_upper_bound(const Multigraph& g, unsigned t) {
  return greedy_coloring(g, t).count();
}

int brooks_upper_bound(const Multigraph& g, unsigned t) {
  if (t == 0) throw PreconditionError("t must be at least 1");
  if (g.empty()) throw PreconditionError("Brooks bound needs a non-empty graph");
  if (!is_connected(g)) throw PreconditionError("Brooks bound needs a connected graph");
  const unsigned delta = underlying_degree_stats(g)->max_degree;
  return static_cast<int>((delta + t - 1) / t) + 1;
}

// Optimal colouring enumeration --------------------------------------------

void enumerate_optimal_colorings(const Multigraph& g, unsigned t,
                                 const std::function<bool(const Coloring&)>& visit,
                                 const EnumerationOptions& opts) {
  require_small(g);
  const int n = g.order();
  const int k = chi_t(g, t).k;
  if (n == 0) {
    visit(Coloring({}, t));
    return;
  }
  std::vector<Mask> classes;
  std::vector<int> colors(n, 0);
  std::uint64_t nodes = 0;
  bool stop = false;

  // Vertices in index order; vertex v joins an existing class or opens the
  // next one, so each partition is produced once and arrives normalized.
  std::function<void(Vertex)> dfs = [&](Vertex v) {
    if (stop) return;
    if (++nodes > opts.node_budget) {
      throw BudgetExceeded("optimal colouring enumeration exceeded budget");
    }
    const int open = static_cast<int>(classes.size());
    if (open + (n - v) < k) return;
    if (v == n) {
      if (open == k && !visit(Coloring(colors, t))) stop = true;
      return;
    }
    for (int c = 0; c < open && !stop; ++c) {
      if (!fits(g, t, classes[c], v)) continue;
      classes[c] |= bit(v);
      colors[v] = c + 1;
      dfs(v + 1);
      classes[c] &= ~bit(v);
    }
    if (open < k && !stop) {
      classes.push_back(bit(v));
      colors[v] = open + 1;
      dfs(v + 1);
      classes.pop_back();
    }
    colors[v] = 0;
  };
  dfs(0);
}

std::vector<Coloring> optimal_colorings(const Multigraph& g, unsigned t,
                                        const EnumerationOptions& opts) {
  std::vector<Coloring> out;
  enumerate_optimal_colorings(
      g, t,
      [&](const Coloring& c) {
        out.push_back(c);
        return true;
      },
      opts);
  return out;
}

Coloring extreme_coloring(const Multigraph& g, unsigned t, Vertex v,
                          const EnumerationOptions& opts) {
  if (!g.contains(v)) throw PreconditionError("vertex index out of range");
  if (chi_t(remove_vertex(g, v), t).k >= chi_t(g, t).k) {
    throw PreconditionError("no optimal colouring has {v} as a class: chi_t(G-v) = chi_t(G)");
  }
  std::optional<Coloring> best;
  std::size_t best_size = 0;
  enumerate_optimal_colorings(
      g, t,
      [&](const Coloring& c) {
        const VertexSet single = c.singletons();
        if (!std::binary_search(single.begin(), single.end(), v)) return true;
        if (!best || single.size() < best_size) {
          best = c;
          best_size = single.size();
        }
        return best_size > 1;
      },
      opts);
  if (!best) throw std::logic_error("extreme colouring missing despite chi_t(G-v) < chi_t(G)");
  return *best;
}

// Class hypergraphs ---------------------------------------------------------

std::vector<VertexSet> ClassHypergraph::components() const {
  std::vector<int> parent(order);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : edges)
    for (std::size_t i = 1; i < e.size(); ++i) parent[find(e[i])] = find(e[0]);
  std::map<int, VertexSet> groups;
  for (Vertex v = 0; v < order; ++v) groups[find(v)].push_back(v);
  std::vector<VertexSet> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet ClassHypergraph::isolated() const {
  std::vector<bool> covered(order, false);
  for (const auto& e : edges)
    for (Vertex v : e) covered[v] = true;
  VertexSet out;
  for (Vertex v = 0; v < order; ++v)
    if (!covered[v]) out.push_back(v);
  return out;
}

int ClassHypergraph::max_degree() const {
  std::vector<int> deg(order, 0);
  for (const auto& e : edges)
    for (Vertex v : e) ++deg[v];
  return order ? *std::max_element(deg.begin(), deg.end()) : 0;
}

ClassHypergraph class_hypergraph(const Coloring& first, const std::optional<Coloring>& second) {
  if (second && second->order() != first.order()) {
    throw PreconditionError("colourings over different vertex sets");
  }
  ClassHypergraph h;
  h.order = first.order();
  auto add = [&](const Coloring& phi) {
    for (auto& cls : phi.classes())
      if (cls.size() >= 2) h.edges.push_back(std::move(cls));
  };
  add(first);
  if (second) add(*second);
  return h;
}

bool is_closed(const Coloring& phi, const VertexSet& x) {
  std::vector<bool> in(phi.order(), false);
  for (Vertex v : x) in.at(v) = true;
  for (const auto& cls : phi.classes()) {
    const bool head = in[cls.front()];
    for (Vertex v : cls)
      if (in[v] != head) return false;
  }
  return true;
}

Coloring recombine(const Coloring& phi1, const Coloring& phi2, const VertexSet& x) {
  if (phi1.order() != phi2.order() || phi1.t() != phi2.t()) {
    throw PreconditionError("colourings over different vertex sets");
  }
  if (!is_closed(phi1, x) || !is_closed(phi2, x)) {
    throw PreconditionError("vertex set is not closed under both colourings");
  }
  const int n = phi1.order();
  std::vector<bool> in(n, false);
  for (Vertex v : x) in[v] = true;

  std::vector<int> colors(n, 0);
  std::vector<bool> taken;
  auto mark = [&](int c) {
    if (static_cast<int>(taken.size()) <= c) taken.resize(c + 1, false);
    taken[c] = true;
  };
  for (Vertex v = 0; v < n; ++v)
    if (in[v]) {
      colors[v] = phi1.color(v);
      mark(colors[v]);
    }
  std::map<int, int> moved;
  for (Vertex v = 0; v < n; ++v) {
    if (in[v]) continue;
    const int c = phi2.color(v);
    auto it = moved.find(c);
    if (it == moved.end()) {
      int target = c;
      if (c < static_cast<int>(taken.size()) && taken[c]) {
        target = 1;
        while (target < static_cast<int>(taken.size()) && taken[target]) ++target;
      }
      mark(target);
      it = moved.emplace(c, target).first;
    }
    colors[v] = it->second;
  }
  return Coloring(std::move(colors), phi1.t());
}

}  // namespace ppn
