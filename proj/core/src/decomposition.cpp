#include "ppn/decomposition.hpp"

#include <algorithm>

#include "ppn/constructions.hpp"
#include "ppn/criticality.hpp"
#include "ppn/errors.hpp"

namespace ppn {

namespace {

void require_mg_t(const Multigraph& g, unsigned t) {
  if (t == 0) throw PreconditionError("t must be at least 1");
  if (g.max_mult() > t) {
    throw PreconditionError("graph has a multiplicity above t");
  }
}

std::vector<Factor> factors_of(const Multigraph& g, unsigned t, bool with_criticality,
                               const SolverOptions& opts) {
  std::vector<std::pair<CanonicalLabel, Factor>> keyed;
  for (auto& part : components(t_complement(g, t))) {
    Factor f;
    auto sub = induced_subgraph(g, part);
    f.graph = std::move(sub.graph);
    f.vertices = std::move(sub.vertices);
    f.k = chi_t(f.graph, t, opts).k;
    if (with_criticality) {
      CriticalityOptions copts;
      copts.solver = opts;
      f.critical = is_critical(f.graph, t, copts).is_critical;
    }
    auto label = canonical_form(f.graph, std::max(f.graph.order(), kCanonicalMaxOrder));
    keyed.emplace_back(std::move(label), std::move(f));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first < b.first;
  });
  std::vector<Factor> out;
  for (auto& [label, f] : keyed) out.push_back(std::move(f));
  return out;
}

}  // namespace

DecompositionReport decompose(const Multigraph& g, unsigned t, const SolverOptions& opts) {
  require_mg_t(g, t);
  DecompositionReport report;
  report.t = t;
  report.factors = factors_of(g, t, true, opts);
  for (const auto& f : report.factors) {
    if (f.graph.order() == 1) ++report.p;
    else if (f.k == 2 && f.critical && f.graph.order() >= 3) ++report.q;
  }
  return report;
}

Multigraph rejoin(const DecompositionReport& report) {
  Multigraph g;
  for (const auto& f : report.factors) g = dirac_join(g, f.graph, report.t);
  return g;
}

DominatingCensus t_dominating_census(const Multigraph& g, unsigned t,
                                     const SolverOptions& opts) {
  require_mg_t(g, t);
  DominatingCensus census;
  for (const auto& f : factors_of(g, t, false, opts)) {
    if (f.graph.order() == 1) ++census.p;
    else if (f.k == 2 && f.graph.order() >= 3) ++census.q;
  }
  return census;
}

namespace {

CriticalityReport require_critical(const Multigraph& g, unsigned t, const SolverOptions& opts) {
  CriticalityOptions copts;
  copts.solver = opts;
  auto crit = is_critical(g, t, copts);
  if (!crit.is_critical) throw PreconditionError("theorem check needs a critical graph");
  return crit;
}

}  // namespace

TheoremAVerdict check_theorem_A(const Multigraph& g, unsigned t, const SolverOptions& opts) {
  require_mg_t(g, t);
  const auto crit = require_critical(g, t, opts);
  TheoremAVerdict v;
  v.k = crit.k;
  v.n = g.order();
  v.factor_count = static_cast<int>(components(t_complement(g, t)).size());
  v.hypothesis = v.n <= 2 * v.k - 2;
  v.holds = !v.hypothesis || v.factor_count >= 2;
  return v;
}

Theorem71Verdict check_theorem_7_1(const Multigraph& g, unsigned t,
                                   const SolverOptions& opts) {
  require_mg_t(g, t);
  const auto crit = require_critical(g, t, opts);
  const auto report = decompose(g, t, opts);

  Theorem71Verdict v;
  v.k = crit.k;
  v.n = g.order();
  v.p = report.p;
  v.q = report.q;

  // K_3(t) only exists for t >= 2; with no such factor the clause is vacuous.
  const auto is_k3t = [&](const Multigraph& f) {
    return t >= 2 && isomorphic(f, k3t(t));
  };
  bool rest_k3t = true;       // every non-K_1 factor is K_3(t)
  bool pair_k3t = true;       // every chi_t = 2 factor is K_3(t)
  bool rest_cri35 = true;     // every chi_t >= 3 factor lies in Cri_t(3,5)
  for (const auto& f : report.factors) {
    if (f.graph.order() == 1) continue;
    if (!is_k3t(f.graph)) rest_k3t = false;
    if (f.k == 2) {
      if (!is_k3t(f.graph)) pair_k3t = false;
    } else if (!(f.k == 3 && f.graph.order() == 5 && f.critical)) {
      rest_cri35 = false;
    }
  }

  const int bound_a = 3 * v.k - 2 * v.n;
  v.inequality_a = v.p >= bound_a;
  v.equality_a = v.p == bound_a;
  v.characterization_a = rest_k3t;

  const int bound_b = 5 * v.k - 3 * v.n;
  v.inequality_b = 2 * v.p + v.q >= bound_b;
  v.equality_b = 2 * v.p + v.q == bound_b;
  v.characterization_b = pair_k3t && rest_cri35;
  return v;
}

}  // namespace ppn
