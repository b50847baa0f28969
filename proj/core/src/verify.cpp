#include "ppn/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ppn/constructions.hpp"
#include "ppn/criticality.hpp"
#include "ppn/decomposition.hpp"

namespace ppn {

namespace {

std::string class_name(unsigned t, int k, int n) {
  return "Cri_" + std::to_string(t) + "(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

std::string member_name(unsigned t, int k, int n, std::size_t i) {
  return class_name(t, k, n) + " #" + std::to_string(i + 1);
}

struct Triple {
  unsigned t;
  int k;
  int n;
};

Triple require_tkn(const std::string& suite, const SuiteParams& p) {
  if (p.t < 1) throw PreconditionError(suite + ": t must be at least 1");
  if (!p.k || !p.n) throw PreconditionError(suite + " needs --k and --n");
  if (*p.k < 1 || *p.n < 1) throw PreconditionError(suite + ": k and n must be positive");
  if (*p.n > envelope_max_order(p.t)) {
    throw OutOfEnvelope(suite + ": n = " + std::to_string(*p.n) + " exceeds the envelope n <= " +
                        std::to_string(envelope_max_order(p.t)) + " for t = " +
                        std::to_string(p.t));
  }
  return {p.t, *p.k, *p.n};
}

EnumerationResult members(const Triple& x, const VerifyOptions& opts) {
  return enumerate_critical(x.t, x.k, x.n, std::nullopt, opts.enumeration);
}

// A passing check recording that the class is empty, so that a suite over
// an empty class is visibly vacuous.
Check vacuous(const Triple& x) {
  Check c;
  c.name = "class";
  c.subject = class_name(x.t, x.k, x.n);
  c.detail = "class is empty; holds vacuously";
  c.actual = 0;
  return c;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

bool same_classes(const std::vector<Multigraph>& a, const std::vector<Multigraph>& b) {
  std::set<CanonicalLabel> la;
  std::set<CanonicalLabel> lb;
  for (const auto& g : a) la.insert(canonical_form(g, std::max(g.order(), kCanonicalMaxOrder)));
  for (const auto& g : b) lb.insert(canonical_form(g, std::max(g.order(), kCanonicalMaxOrder)));
  return la == lb;
}

SolverOptions solver(const VerifyOptions& opts) { return opts.enumeration.solver; }

CriticalityOptions crit_options(const VerifyOptions& opts) {
  CriticalityOptions c;
  c.solver = solver(opts);
  c.jobs = opts.enumeration.jobs;
  return c;
}

// Suites --------------------------------------------------------------------

SuiteReport suite_theorem_a(const SuiteParams& params, const VerifyOptions& opts) {
  const auto x = require_tkn("theoremA", params);
  SuiteReport r;
  const auto cls = members(x, opts);
  if (cls.graphs.empty()) r.checks.push_back(vacuous(x));
  for (std::size_t i = 0; i < cls.graphs.size(); ++i) {
    const auto v = check_theorem_A(cls.graphs[i], x.t, solver(opts));
    Check c;
    c.name = "factors";
    c.subject = member_name(x.t, x.k, x.n, i);
    c.passed = v.holds;
    c.detail = "n <= 2k-2: " + yes_no(v.hypothesis) + ", factors = " +
               std::to_string(v.factor_count);
    c.actual = v.factor_count;
    c.witness = cls.graphs[i];
    r.checks.push_back(std::move(c));
  }
  return r;
}

Multigraph uniform_join_expected(unsigned t, int k, int p) {
  return dirac_join(s_clique(t, k - p - 1), s_clique(t / 2, 2 * p + 1), t);
}

SuiteReport suite_theorem_b(const SuiteParams& params, const VerifyOptions& opts) {
  const auto x = require_tkn("theoremB", params);
  const int p = x.n - x.k;
  if (p < 1 || p > x.k - 1) throw PreconditionError("theoremB needs 1 <= n-k <= k-1");
  SuiteReport r;
  const auto cls = members(x, opts);
  const auto formulas = bound_formulas(x.t, x.k, x.n);
  const std::string name = "ext_" + std::to_string(x.t) + "(" + std::to_string(x.k) + "," +
                           std::to_string(x.n) + ")";

  {
    Check c;
    c.name = "class size";
    c.subject = class_name(x.t, x.k, x.n);
    c.asserted = false;
    c.actual = static_cast<long long>(cls.graphs.size());
    c.detail = std::to_string(cls.graphs.size()) + " member(s)";
    r.checks.push_back(std::move(c));
  }

  if (cls.ext) {
    Check c;
    c.name = "trivial bound";
    c.subject = name;
    const auto& b = *formulas.trivial;
    c.passed = static_cast<long long>(*cls.ext) * b.den >= b.num;
    c.actual = static_cast<long long>(*cls.ext);
    c.detail = "ext >= " + std::to_string(b.num) + "/" + std::to_string(b.den);
    r.checks.push_back(std::move(c));
  }

  auto value_check = [&](long long expected, const std::string& what) {
    Check c;
    c.name = what;
    c.subject = name;
    c.expected = expected;
    if (cls.ext) c.actual = static_cast<long long>(*cls.ext);
    c.passed = cls.ext && static_cast<long long>(*cls.ext) == expected;
    c.detail = cls.ext ? "ext = " + std::to_string(*cls.ext) : "class is empty";
    if (!cls.extremal.empty()) c.witness = cls.extremal.front();
    r.checks.push_back(std::move(c));
  };
  auto extremal_check = [&](const std::vector<Multigraph>& expected, const std::string& what) {
    Check c;
    c.name = what;
    c.subject = "Ext_" + name.substr(4);
    c.passed = !cls.extremal.empty() && same_classes(cls.extremal, expected);
    c.actual = static_cast<long long>(cls.extremal.size());
    c.expected = static_cast<long long>(expected.size());
    c.detail = std::to_string(cls.extremal.size()) + " extremal graph(s), expected " +
               std::to_string(expected.size());
    if (!cls.extremal.empty()) c.witness = cls.extremal.front();
    r.checks.push_back(std::move(c));
  };

  if (x.t % 2 == 0) {
    value_check(*formulas.even_t_exact, "ext formula");
    const auto stated = uniform_join_expected(x.t, x.k, p);
    {
      Check c;
      c.name = "stated extremal graph";
      c.subject = "Ext_" + name.substr(4);
      c.passed = std::any_of(cls.extremal.begin(), cls.extremal.end(),
                             [&](const Multigraph& g) { return isomorphic(g, stated); });
      c.detail = c.passed ? "tK_{k-p-1} joined to (t/2)K_{2p+1} is extremal"
                          : "tK_{k-p-1} joined to (t/2)K_{2p+1} is not extremal";
      c.witness = stated;
      r.checks.push_back(std::move(c));
    }
    // tC_5 meets the Brooks-type bound with equality for k = 3, so for p = 2
    // the join with tC_5 is extremal as well.
    std::vector<Multigraph> expected{stated};
    if (p == 2) expected.push_back(dirac_join(s_clique(x.t, x.k - 3), s_cycle(x.t, 5), x.t));
    extremal_check(expected, "extremal class");
  } else if (x.t == 1 && p == 1) {
    Check c;
    c.name = "empty class";
    c.subject = class_name(x.t, x.k, x.n);
    c.passed = cls.graphs.empty();
    c.actual = static_cast<long long>(cls.graphs.size());
    c.expected = 0;
    c.detail = cls.graphs.empty() ? "no critical graph of order k+1" : "class is not empty";
    r.checks.push_back(std::move(c));
  } else if (x.t == 1) {
    value_check(*formulas.gallai, "ext formula");
    std::vector<Multigraph> expected;
    for (int y1 = 1; y1 <= p - 1; ++y1)
      expected.push_back(dirac_join(complete(x.k - p - 1), gallai_dirac(p + 1, y1), 1));
    extremal_check(expected, "extremal class");
  } else {
    // Odd t >= 3: data only.
    if (2 * p + 1 <= envelope_max_order(x.t) && 2 * p + 1 != x.n) {
      const auto core = enumerate_critical(x.t, p + 1, 2 * p + 1, std::nullopt, opts.enumeration);
      std::vector<Multigraph> predicted;
      for (const auto& g : core.extremal)
        predicted.push_back(dirac_join(s_clique(x.t, x.k - p - 1), g, x.t));
      Check c;
      c.name = "odd t conjecture";
      c.subject = "Ext_" + name.substr(4);
      c.asserted = false;
      c.passed = same_classes(cls.extremal, predicted);
      c.detail = c.passed ? "agrees with tK_{k-p-1} joined to Ext_t(p+1,2p+1)"
                          : "differs from tK_{k-p-1} joined to Ext_t(p+1,2p+1)";
      r.checks.push_back(std::move(c));
    }
    if (p == x.k - 1 && x.k >= 3 && cls.ext) {
      for (int y1 = 1; y1 <= x.k - 2; ++y1) {
        const auto g = t_uniform_inflation(gallai_dirac(x.k, y1), x.t);
        Check c;
        c.name = "tDG(k) extremal";
        c.subject = "t*DG(" + std::to_string(x.k) + "), |Y1| = " + std::to_string(y1);
        c.asserted = false;
        c.actual = static_cast<long long>(g.edge_count());
        c.expected = static_cast<long long>(*cls.ext);
        c.passed = g.edge_count() == *cls.ext;
        c.detail = "e = " + std::to_string(g.edge_count()) + ", ext = " + std::to_string(*cls.ext);
        c.witness = g;
        r.checks.push_back(std::move(c));
      }
    }
    Check c;
    c.name = "ext";
    c.subject = name;
    c.asserted = false;
    if (cls.ext) c.actual = static_cast<long long>(*cls.ext);
    c.detail = cls.ext ? "ext = " + std::to_string(*cls.ext) : "class is empty";
    if (!cls.extremal.empty()) c.witness = cls.extremal.front();
    r.checks.push_back(std::move(c));
  }
  return r;
}

SuiteReport suite_brooks(const SuiteParams& params, const VerifyOptions& opts) {
  const auto x = require_tkn("brooks", params);
  SuiteReport r;
  const auto cls = members(x, opts);
  if (cls.graphs.empty()) r.checks.push_back(vacuous(x));
  for (std::size_t i = 0; i < cls.graphs.size(); ++i) {
    const auto b = brooks_equality_classify(cls.graphs[i], x.t, solver(opts));
    Check c;
    c.name = "brooks bound";
    c.subject = member_name(x.t, x.k, x.n, i);
    c.passed = b.classification != BrooksClass::Violation;
    c.expected = b.bound;
    c.actual = b.k;
    c.detail = to_string(b.classification);
    c.witness = cls.graphs[i];
    r.checks.push_back(std::move(c));
  }
  return r;
}

SuiteReport suite_low_vertex(const SuiteParams& params, const VerifyOptions& opts) {
  const auto x = require_tkn("lowvertex", params);
  SuiteReport r;
  const auto cls = members(x, opts);
  if (cls.graphs.empty()) r.checks.push_back(vacuous(x));
  for (std::size_t i = 0; i < cls.graphs.size(); ++i) {
    const auto low = low_vertex_analysis(cls.graphs[i], x.t, solver(opts));
    Check c;
    c.name = "low vertex blocks";
    c.subject = member_name(x.t, x.k, x.n, i);
    c.passed = !low.violation();
    std::string shapes;
    for (const auto& b : low.blocks) shapes += (shapes.empty() ? "" : ", ") + to_string(b.shape);
    c.detail = std::to_string(low.low.size()) + " low vertices" +
               (shapes.empty() ? std::string() : "; blocks: " + shapes);
    c.witness = cls.graphs[i];
    r.checks.push_back(std::move(c));
  }
  return r;
}

SuiteReport suite_extreme(const SuiteParams& params, const VerifyOptions& opts) {
  const auto x = require_tkn("extreme", params);
  SuiteReport r;
  const auto cls = members(x, opts);
  if (cls.graphs.empty()) r.checks.push_back(vacuous(x));
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < cls.graphs.size(); ++i) {
    const auto& g = cls.graphs[i];
    if (!is_connected(t_complement(g, x.t))) {
      ++skipped;
      continue;
    }
    Check c;
    c.name = "singleton class at every vertex";
    c.subject = member_name(x.t, x.k, x.n, i);
    c.witness = g;
    for (Vertex v = 0; v < g.order() && c.passed; ++v) {
      const auto phi = extreme_coloring(g, x.t, v, opts.colorings);
      if (phi.singletons() != VertexSet{v}) {
        c.passed = false;
        c.detail = "vertex " + std::to_string(v + 1) + ": fewest singleton classes is " +
                   std::to_string(phi.singletons().size());
        c.coloring = phi;
      }
    }
    if (c.passed) c.detail = "I(phi) = {v} attained for all " + std::to_string(g.order()) + " vertices";
    r.checks.push_back(std::move(c));
  }
  if (skipped) {
    Check c;
    c.name = "skipped";
    c.subject = class_name(x.t, x.k, x.n);
    c.asserted = false;
    c.actual = static_cast<long long>(skipped);
    c.detail = std::to_string(skipped) + " member(s) with disconnected t-complement";
    r.checks.push_back(std::move(c));
  }
  return r;
}

SuiteReport suite_thm71(const SuiteParams& params, const VerifyOptions& opts) {
  const auto x = require_tkn("thm71", params);
  SuiteReport r;
  const auto cls = members(x, opts);
  if (cls.graphs.empty()) r.checks.push_back(vacuous(x));
  for (std::size_t i = 0; i < cls.graphs.size(); ++i) {
    const auto v = check_theorem_7_1(cls.graphs[i], x.t, solver(opts));
    Check c;
    c.name = "p and q bounds";
    c.subject = member_name(x.t, x.k, x.n, i);
    c.passed = v.holds();
    c.detail = "p = " + std::to_string(v.p) + " vs 3k-2n = " + std::to_string(3 * v.k - 2 * v.n) +
               (v.equality_a ? " (equal)" : "") + ", 2p+q = " + std::to_string(2 * v.p + v.q) +
               " vs 5k-3n = " + std::to_string(5 * v.k - 3 * v.n) +
               (v.equality_b ? " (equal)" : "");
    if (v.equality_a != v.characterization_a) c.detail += "; equality case (a) mismatch";
    if (v.equality_b != v.characterization_b) c.detail += "; equality case (b) mismatch";
    c.witness = cls.graphs[i];
    r.checks.push_back(std::move(c));
  }
  return r;
}

SuiteReport suite_thm85(const SuiteParams& params, const VerifyOptions& opts) {
  const auto x = require_tkn("thm85", params);
  const int p = x.n - x.k;
  if (p < 2 || p > x.k - 2) throw PreconditionError("thm85 needs 2 <= n-k <= k-2");
  SuiteReport r;
  const auto v = verify_theorem_8_5(x.t, x.k, x.n, opts.enumeration);
  {
    Check c;
    c.name = "filtered class";
    c.subject = class_name(x.t, x.k, x.n);
    c.asserted = false;
    c.actual = static_cast<long long>(v.checked.size());
    c.detail = std::to_string(v.checked.size()) + " of " + std::to_string(v.class_size) +
               " member(s) without a dominating K_1 or chi_t = 2 factor";
    r.checks.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < v.checked.size(); ++i) {
    const auto& m = v.checked[i];
    Check c;
    c.name = "edge bound";
    c.subject = "filtered " + member_name(x.t, x.k, x.n, i);
    c.passed = m.ok;
    c.expected = v.bound;
    c.actual = static_cast<long long>(m.edges);
    c.detail = "e = " + std::to_string(m.edges) + " >= " + std::to_string(v.bound);
    c.witness = m.graph;
    r.checks.push_back(std::move(c));
  }
  return r;
}

// Joins ---------------------------------------------------------------------

struct PoolEntry {
  Multigraph graph;
  std::string name;
  int k = 0;
  bool critical = false;
};

std::vector<PoolEntry> join_pool(unsigned t, int max_order, const VerifyOptions& opts) {
  std::vector<PoolEntry> pool;
  for (int n = 1; n <= max_order; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto cls = enumerate_critical(t, k, n, std::nullopt, opts.enumeration);
      for (std::size_t i = 0; i < cls.graphs.size(); ++i)
        pool.push_back({cls.graphs[i], member_name(t, k, n, i), k, true});
    }
  // Non-critical operands exercise the converse direction.
  std::vector<std::pair<Multigraph, std::string>> extra = {
      {edgeless(2), "2K_1 edgeless"}, {path(3), "P_3"}, {cycle(4), "C_4"}, {path(4), "P_4"}};
  Multigraph diamond = complete(4);
  diamond.set_mult(0, 1, 0);
  extra.emplace_back(diamond, "K_4 - e");
  for (auto& [g, name] : extra) {
    if (g.order() > max_order) continue;
    const auto crit = is_critical(g, t, crit_options(opts));
    if (crit.is_critical) continue;
    pool.push_back({g, name, crit.k, false});
  }
  return pool;
}

std::optional<VertexPair> first_pair(const Multigraph& g, Multiplicity l) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.mult(u, v) >= l) return VertexPair{u, v};
  return std::nullopt;
}

SuiteReport suite_joins(const SuiteParams& params, const VerifyOptions& opts) {
  const unsigned t = params.t;
  if (t < 1 || t > 2) throw OutOfEnvelope("joins: t must be 1 or 2");
  const int n = params.n.value_or(8);
  if (n < 2 || n > 8) throw OutOfEnvelope("joins: n (largest join order) must be in 2..8");
  SuiteReport r;
  const auto copts = crit_options(opts);
  const int pool_order = std::min(n - 1, t == 1 ? 6 : 5);
  const auto pool = join_pool(t, pool_order, opts);

  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j) {
      const auto& a = pool[i];
      const auto& b = pool[j];
      if (a.graph.order() + b.graph.order() > n) continue;
      const auto g = dirac_join(a.graph, b.graph, t);
      const auto crit = is_critical(g, t, copts);
      Check c;
      c.name = "dirac join";
      c.subject = a.name + " + " + b.name;
      const bool additive = crit.k == a.k + b.k;
      const bool equivalence = crit.is_critical == (a.critical && b.critical);
      c.passed = additive && equivalence;
      c.expected = a.k + b.k;
      c.actual = crit.k;
      c.detail = "chi_t = " + std::to_string(crit.k) + " (operands " + std::to_string(a.k) + ", " +
                 std::to_string(b.k) + "), critical: " + yes_no(crit.is_critical);
      c.witness = g;
      r.checks.push_back(std::move(c));
    }

  // Hajos joins of critical operands with equal chi_t: l = 1 for t = 2 and
  // k >= 2 (and the classical t = 1, k >= 4 case), l = 2 for t = 2, k >= 3.
  for (Multiplicity l = 1; l <= t; ++l)
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i; j < pool.size(); ++j) {
        const auto& a = pool[i];
        const auto& b = pool[j];
        if (!a.critical || !b.critical || a.k != b.k) continue;
        const int min_k = t == 1 ? 4 : (l == 1 ? 2 : 3);
        if (a.k < min_k) continue;
        if (a.graph.order() + b.graph.order() - 1 > n) continue;
        const auto e1 = first_pair(a.graph, l);
        const auto e2 = first_pair(b.graph, l);
        if (!e1 || !e2) continue;
        HajosSpec spec{a.graph, b.graph, e1->first, e1->second, e2->first, e2->second, l};
        const auto g = hajos_join(spec);
        const auto crit = is_critical(g, t, copts);
        Check c;
        c.name = l == 1 ? "hajos join" : "hajos 2-join";
        c.subject = a.name + " + " + b.name;
        c.passed = crit.k == a.k && crit.is_critical &&
                   g.edge_count() == a.graph.edge_count() + b.graph.edge_count() - l;
        c.expected = a.k;
        c.actual = crit.k;
        c.detail = "chi_t = " + std::to_string(crit.k) + ", critical: " + yes_no(crit.is_critical);
        c.witness = g;
        r.checks.push_back(std::move(c));
      }

  if (t == 2) {
    const auto k5 = complete(5);
    const auto g = hajos_join({k5, k5, 0, 1, 0, 1, 1});
    const auto crit = is_critical(g, t, copts);
    Check c;
    c.name = "hajos join";
    c.subject = "K_5 + K_5";
    c.passed = crit.is_critical && crit.k == 3 && g.order() == 9;
    c.expected = 3;
    c.actual = crit.k;
    c.detail = "order " + std::to_string(g.order()) + ", critical: " + yes_no(crit.is_critical);
    c.witness = g;
    r.checks.push_back(std::move(c));

    const auto base = dirac_join(complete(1), k3t(2), 2);
    const auto e = *first_pair(base, 2);
    const auto h = hajos_join({base, base, e.first, e.second, e.first, e.second, 2});
    const auto hcrit = is_critical(h, t, copts);
    Check d;
    d.name = "hajos 2-join";
    d.subject = "two copies of K_1 + K_3(2)";
    d.passed = hcrit.is_critical && hcrit.k == 3;
    d.expected = 3;
    d.actual = hcrit.k;
    d.detail = "order " + std::to_string(h.order()) + ", critical: " + yes_no(hcrit.is_critical);
    d.witness = h;
    r.checks.push_back(std::move(d));
  }
  return r;
}

using SuiteFn = std::function<SuiteReport(const SuiteParams&, const VerifyOptions&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"theoremA", suite_theorem_a}, {"theoremB", suite_theorem_b},
      {"brooks", suite_brooks},      {"lowvertex", suite_low_vertex},
      {"extreme", suite_extreme},    {"thm71", suite_thm71},
      {"thm85", suite_thm85},        {"joins", suite_joins},
  };
  return suites;
}

}  // namespace

int envelope_max_order(unsigned t) {
  switch (t) {
    case 0: return 0;
    case 1: return 8;
    case 2: return 6;
    case 3: return 5;
    default: return 4;
  }
}

std::size_t SuiteReport::violations() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) {
    return c.asserted && !c.passed;
  }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"theoremA", "theoremB", "brooks", "lowvertex",
                                                 "extreme",  "thm71",    "thm85",  "joins"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params,
                      const VerifyOptions& opts) {
  const auto& suites = registry();
  const auto it = suites.find(name);
  if (it == suites.end()) throw PreconditionError("unknown suite '" + name + "'");
  SuiteReport r = it->second(params, opts);
  r.suite = name;
  r.params = params;
  return r;
}

}  // namespace ppn
