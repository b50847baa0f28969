#include "ppn/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_set>

#include "parallel.hpp"
#include "ppn/decomposition.hpp"
#include "ppn/errors.hpp"

namespace ppn {

bool is_critical_with_k(const Multigraph& g, unsigned t, int k, const SolverOptions& opts) {
  if (k <= 0) return g.empty() && k == 0;
  if (k == 1) return g.order() == 1;
  const int n = g.order();
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 0) return false;
  if (greedy_upper_bound(g, t) < k) return false;
  if (!find_coloring(g, t, k, opts)) return false;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.mult(u, v) && !find_coloring(delete_edge(g, u, v), t, k - 1, opts)) return false;
  return !find_coloring(g, t, k - 1, opts);
}

namespace {

struct Pair {
  Vertex u;
  Vertex v;
};

// Depth-first assignment of multiplicities to the pairs in row-major order.
class Generator {
 public:
  Generator(unsigned t, int k, int n, Multiplicity cap, const SolverOptions& solver)
      : t_(t), k_(k), n_(n), cap_(cap), solver_(solver), graph_(n),
        min_degree_(t * static_cast<unsigned>(k - 1)), deg_(n, 0), open_(n, n - 1) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pairs_.push_back({u, v});
  }

  std::size_t pair_count() const { return pairs_.size(); }

  /// Explores the subtree below a fixed prefix of multiplicities.
  void run(const std::vector<Multiplicity>& prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (!assign(i, prefix[i])) return;
    }
    dfs(prefix.size());
  }

  std::map<CanonicalLabel, Multigraph>& accepted() { return accepted_; }
  const EnumerationStats& stats() const { return stats_; }

 private:
  // Applies the multiplicity of pair i; false when the branch is dead.
  bool assign(std::size_t i, Multiplicity m) {
    const auto [u, v] = pairs_[i];
    graph_.set_mult(u, v, m);
    deg_[u] += m;
    deg_[v] += m;
    --open_[u];
    --open_[v];
    if (deg_[u] + cap_ * open_[u] < min_degree_) return false;
    if (deg_[v] + cap_ * open_[v] < min_degree_) return false;
    // Rows before u are complete, so deg_[u-1] is final and bounds deg_[u].
    if (u > 0 && deg_[u] > deg_[u - 1]) return false;
    return true;
  }

  void unassign(std::size_t i, Multiplicity m) {
    const auto [u, v] = pairs_[i];
    graph_.set_mult(u, v, 0);
    deg_[u] -= m;
    deg_[v] -= m;
    ++open_[u];
    ++open_[v];
  }

  void dfs(std::size_t i) {
    if (i == pairs_.size()) {
      leaf();
      return;
    }
    for (Multiplicity m = 0; m <= cap_; ++m) {
      if (assign(i, m)) dfs(i + 1);
      unassign(i, m);
    }
  }

  void leaf() {
    for (Vertex v = 1; v < n_; ++v)
      if (deg_[v] > deg_[v - 1]) return;
    if (!is_connected(graph_)) return;
    ++stats_.leaves;
    auto label = canonical_form(graph_, std::max(n_, kCanonicalMaxOrder));
    if (!seen_.insert(label).second) return;
    ++stats_.candidates;
    Multigraph rep = from_canonical(label);
    if (is_critical_with_k(rep, t_, k_, solver_)) accepted_.emplace(std::move(label), std::move(rep));
  }

  unsigned t_;
  int k_;
  int n_;
  Multiplicity cap_;
  SolverOptions solver_;
  Multigraph graph_;
  unsigned min_degree_;
  std::vector<unsigned> deg_;
  std::vector<unsigned> open_;
  std::vector<Pair> pairs_;
  std::unordered_set<CanonicalLabel> seen_;
  std::map<CanonicalLabel, Multigraph> accepted_;
  EnumerationStats stats_;
};

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

}  // namespace

EnumerationResult enumerate_critical(unsigned t, int k, int n, std::optional<Multiplicity> m,
                                     const EnumerateOptions& opts) {
  if (t == 0) throw PreconditionError("t must be at least 1");
  if (n < 1) throw PreconditionError("enumeration needs n >= 1");
  if (k < 1) throw PreconditionError("enumeration needs k >= 1");
  EnumerationResult result;
  result.t = t;
  result.k = k;
  result.n = n;
  result.m = m.value_or(t);
  if (result.m == 0) throw PreconditionError("multiplicity cap must be at least 1");

  // Critical graphs have mu <= t.
  const Multiplicity cap = std::min<Multiplicity>(result.m, t);
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::uint64_t tree = saturating_pow(cap + 1, pairs, opts.assignment_budget);
  if (tree > opts.assignment_budget) {
    throw BudgetExceeded("enumeration of Cri_" + std::to_string(t) + "(" + std::to_string(k) +
                         "," + std::to_string(n) + ") exceeds the assignment budget of " +
                         std::to_string(opts.assignment_budget));
  }

  std::map<CanonicalLabel, Multigraph> accepted;
  if (k <= n) {
    // Split the tree on a prefix of pairs so that workers get several tasks.
    std::size_t depth = 0;
    std::uint64_t tasks = 1;
    while (opts.jobs > 1 && depth < pairs && tasks < 4ull * static_cast<std::uint64_t>(opts.jobs)) {
      tasks *= cap + 1;
      ++depth;
    }
    std::vector<std::vector<Multiplicity>> prefixes(1);
    for (std::size_t d = 0; d < depth; ++d) {
      std::vector<std::vector<Multiplicity>> next;
      for (const auto& p : prefixes)
        for (Multiplicity x = 0; x <= cap; ++x) {
          next.push_back(p);
          next.back().push_back(x);
        }
      prefixes = std::move(next);
    }

    std::mutex merge;
    detail::parallel_for(prefixes.size(), opts.jobs, [&](std::size_t i) {
      Generator gen(t, k, n, cap, opts.solver);
      gen.run(prefixes[i]);
      std::lock_guard lock(merge);
      result.stats.leaves += gen.stats().leaves;
      result.stats.candidates += gen.stats().candidates;
      accepted.merge(gen.accepted());
    });
  }

  for (auto& [label, g] : accepted) result.graphs.push_back(std::move(g));
  for (const auto& g : result.graphs) {
    const std::size_t e = g.edge_count();
    if (!result.ext || e < *result.ext) {
      result.ext = e;
      result.extremal.clear();
    }
    if (e == *result.ext) result.extremal.push_back(g);
  }
  return result;
}

ExtResult ext(unsigned t, int k, int n, std::optional<Multiplicity> m,
              const EnumerateOptions& opts) {
  auto r = enumerate_critical(t, k, n, m, opts);
  return {r.ext, std::move(r.extremal)};
}

Rational make_rational(long long num, long long den) {
  if (den == 0) throw PreconditionError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

BoundFormulas bound_formulas(unsigned t, int k, int n) {
  BoundFormulas b;
  const long long tt = t;
  const long long kk = k;
  const long long nn = n;
  const long long p = nn - kk;
  const long long pairs = nn * (nn - 1) / 2;
  if (t >= 1 && k >= 1 && n >= 1) b.trivial = make_rational(tt * (kk - 1) * nn, 2);
  if (t == 1 && n >= k && k >= 4 && n != k + 1) {
    b.kostochka_yancey = make_rational((kk + 1) * (kk - 2) * nn - kk * (kk - 3), 2 * (kk - 1));
  }
  if (t >= 1 && p >= 2 && p <= kk - 2) b.half_bound = tt * pairs - tt * p * p;
  if (t >= 2 && t % 2 == 0 && p >= 1 && p <= kk - 1) {
    b.even_t_exact = tt * pairs - (tt / 2) * (2 * p + 1) * p;
  }
  if (t == 1 && p >= 2 && p <= kk - 1) b.gallai = pairs - (p * p + 1);
  return b;
}

bool Theorem85Verdict::holds() const {
  return std::all_of(checked.begin(), checked.end(), [](const auto& m) { return m.ok; });
}

Theorem85Verdict verify_theorem_8_5(unsigned t, int k, int n, const EnumerateOptions& opts) {
  const int p = n - k;
  if (p < 2 || p > k - 2) {
    throw PreconditionError("edge bound check needs 2 <= n-k <= k-2");
  }
  Theorem85Verdict v;
  v.bound = *bound_formulas(t, k, n).half_bound;
  const auto cls = enumerate_critical(t, k, n, std::nullopt, opts);
  v.class_size = cls.graphs.size();
  for (const auto& g : cls.graphs) {
    const auto census = t_dominating_census(g, t, opts.solver);
    if (census.p != 0 || census.q != 0) continue;
    Theorem85Member m;
    m.graph = g;
    m.edges = g.edge_count();
    m.ok = static_cast<long long>(m.edges) >= v.bound;
    v.checked.push_back(std::move(m));
  }
  return v;
}

}  // namespace ppn
