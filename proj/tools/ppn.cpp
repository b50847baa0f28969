// ppn: command-line front end for the point partition library.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ppn/coloring.hpp"
#include "ppn/constructions.hpp"
#include "ppn/criticality.hpp"
#include "ppn/decomposition.hpp"
#include "ppn/enumeration.hpp"
#include "ppn/errors.hpp"
#include "ppn/io.hpp"
#include "ppn/report.hpp"
#include "ppn/verify.hpp"

namespace {

enum Exit { kPass = 0, kViolation = 1, kInputError = 2, kBudget = 3 };

struct Globals {
  bool json = false;
  std::uint64_t budget = ppn::SolverOptions{}.node_budget;
  std::uint64_t assignment_budget = ppn::EnumerateOptions{}.assignment_budget;
  int jobs = 1;
};

std::uint64_t env_budget(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(raw, &used);
    if (used == std::string(raw).size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  throw ppn::PreconditionError(std::string(name) + " must be a positive integer");
}

ppn::SolverOptions solver(const Globals& g) {
  ppn::SolverOptions s;
  s.node_budget = g.budget;
  return s;
}

ppn::EnumerateOptions enumeration(const Globals& g) {
  ppn::EnumerateOptions e;
  e.assignment_budget = g.assignment_budget;
  e.solver = solver(g);
  e.jobs = g.jobs;
  return e;
}

std::string colors_line(const ppn::Coloring& c) {
  std::string out;
  for (int x : c.colors()) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

std::string vertices_line(const ppn::VertexSet& s) {
  std::string out;
  for (auto v : s) out += (out.empty() ? "" : " ") + std::to_string(v + 1);
  return out;
}

void emit_graph(const Globals& g, const ppn::Multigraph& graph) {
  std::cout << (g.json ? ppn::graph_report(graph) : ppn::write_graph(graph));
}

int cmd_chi(const Globals& g, const std::string& file, unsigned t) {
  const auto graph = ppn::read_graph_file(file);
  const auto r = ppn::chi_t(graph, t, solver(g));
  if (g.json) {
    std::cout << ppn::chi_report(graph, t, r);
  } else {
    std::cout << "chi_t = " << r.k << "\n";
    if (graph.order() > 0) std::cout << "coloring: " << colors_line(r.witness) << "\n";
  }
  return kPass;
}

int cmd_check_critical(const Globals& g, const std::string& file, unsigned t) {
  const auto graph = ppn::read_graph_file(file);
  ppn::CriticalityOptions opts;
  opts.solver = solver(g);
  opts.jobs = g.jobs;
  const auto r = ppn::is_critical(graph, t, opts);
  if (g.json) {
    std::cout << ppn::criticality_report(graph, t, r);
    return kPass;
  }
  std::cout << (r.is_critical ? "critical" : "not critical") << ", k = " << r.k << "\n";
  if (r.failing_edge) {
    std::cout << "deleting an edge " << r.failing_edge->first + 1 << " "
              << r.failing_edge->second + 1 << " keeps chi_t = " << r.k << "\n";
  }
  if (!r.is_critical) {
    std::cout << "vertex critical: " << (r.is_vertex_critical ? "yes" : "no") << "\n";
  }
  return kPass;
}

int cmd_decompose(const Globals& g, const std::string& file, unsigned t) {
  const auto graph = ppn::read_graph_file(file);
  const auto r = ppn::decompose(graph, t, solver(g));
  if (g.json) {
    std::cout << ppn::decomposition_report(graph, r);
    return kPass;
  }
  std::cout << "factors: " << r.factors.size() << ", p = " << r.p << ", q = " << r.q << "\n";
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    const auto& f = r.factors[i];
    std::cout << "factor " << i + 1 << ": vertices " << vertices_line(f.vertices)
              << ", chi_t = " << f.k << (f.critical ? ", critical" : ", not critical") << "\n";
  }
  return kPass;
}

int cmd_complement(const Globals& g, const std::string& file, unsigned t) {
  emit_graph(g, ppn::t_complement(ppn::read_graph_file(file), t));
  return kPass;
}

struct JoinArgs {
  std::string kind;
  std::string first;
  std::string second;
  unsigned l = 1;
  int u1 = 1, v1 = 2, u2 = 1, v2 = 2;
};

int cmd_join(const Globals& g, const JoinArgs& a) {
  if (a.first == "-" && a.second == "-") {
    throw ppn::PreconditionError("only one operand can be read from standard input");
  }
  const auto g1 = ppn::read_graph_file(a.first);
  const auto g2 = ppn::read_graph_file(a.second);
  if (a.kind == "dirac") {
    emit_graph(g, ppn::dirac_join(g1, g2, a.l));
  } else {
    ppn::HajosSpec spec{g1, g2, a.u1 - 1, a.v1 - 1, a.u2 - 1, a.v2 - 1, a.l};
    emit_graph(g, ppn::hajos_join(spec));
  }
  return kPass;
}

int cmd_construct(const Globals& g, const std::string& family, const std::vector<int>& args) {
  auto need = [&](std::size_t count, const char* usage) {
    if (args.size() != count) {
      throw ppn::PreconditionError("usage: construct " + family + " " + usage);
    }
    for (int x : args)
      if (x < 0) throw ppn::PreconditionError("construct parameters must be non-negative");
  };
  ppn::Multigraph graph;
  if (family == "complete") {
    need(1, "<k>");
    graph = ppn::complete(args[0]);
  } else if (family == "cycle") {
    need(1, "<n>");
    graph = ppn::cycle(args[0]);
  } else if (family == "s-clique") {
    need(2, "<s> <n>");
    graph = ppn::s_clique(args[0], args[1]);
  } else if (family == "s-cycle") {
    need(2, "<s> <n>");
    graph = ppn::s_cycle(args[0], args[1]);
  } else if (family == "k3t") {
    need(1, "<t>");
    graph = ppn::k3t(args[0]);
  } else if (family == "gallai-dirac") {
    need(2, "<k> <|Y1|>");
    graph = ppn::gallai_dirac(args[0], args[1]);
  } else if (family == "path") {
    need(1, "<n>");
    graph = ppn::path(args[0]);
  } else if (family == "edgeless") {
    need(1, "<n>");
    graph = ppn::edgeless(args[0]);
  } else {
    throw ppn::PreconditionError("unknown family '" + family + "'");
  }
  emit_graph(g, graph);
  return kPass;
}

struct EnumerateArgs {
  unsigned t = 1;
  int k = 1;
  int n = 1;
  unsigned m = 0;
  bool ext_only = false;
};

int cmd_enumerate(const Globals& g, const EnumerateArgs& a) {
  std::optional<ppn::Multiplicity> m;
  if (a.m > 0) m = a.m;
  const auto r = ppn::enumerate_critical(a.t, a.k, a.n, m, enumeration(g));
  if (g.json) {
    std::cout << ppn::enumeration_report(r, a.ext_only);
    return kPass;
  }
  std::cout << "Cri_" << r.t << "(" << r.k << "," << r.n << ")";
  if (r.m < r.t) std::cout << " with multiplicity <= " << r.m;
  std::cout << ": " << r.graphs.size() << " graph(s)\n";
  if (r.ext) {
    std::cout << "ext = " << *r.ext << ", extremal: " << r.extremal.size() << "\n";
  } else {
    std::cout << "ext undefined (empty class)\n";
  }
  const auto& shown = a.ext_only ? r.extremal : r.graphs;
  for (const auto& graph : shown) std::cout << "\n" << ppn::write_graph(graph);
  return kPass;
}

struct VerifyArgs {
  std::string suite;
  unsigned t = 1;
  std::optional<int> k;
  std::optional<int> n;
};

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  ppn::VerifyOptions opts;
  opts.enumeration = enumeration(g);
  const auto r = ppn::run_suite(a.suite, {a.t, a.k, a.n}, opts);
  if (g.json) {
    std::cout << ppn::suite_report(r);
  } else {
    for (const auto& c : r.checks) {
      const char* tag = !c.asserted ? "INFO" : c.passed ? "PASS" : "FAIL";
      std::cout << tag << "  " << c.name << "  " << c.subject << ": " << c.detail << "\n";
      if (c.asserted && !c.passed && c.witness) {
        std::istringstream lines(ppn::write_graph(*c.witness));
        for (std::string line; std::getline(lines, line);) std::cout << "      " << line << "\n";
      }
    }
    std::cout << a.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks.size()
              << " checks, " << r.violations() << " violations)\n";
  }
  return r.passed() ? kPass : kViolation;
}

int fail(const Globals& g, int code, const std::string& message) {
  std::cerr << "ppn: " << message << "\n";
  if (g.json) std::cout << ppn::error_report(code, message);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point partition numbers and critical multigraphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_flag("--json", globals.json, "Emit a JSON report");
  app.add_option("--budget", globals.budget,
                 "Search nodes per exact solve (default: $PPN_BUDGET or 200000000)");
  app.add_option("--assignment-budget", globals.assignment_budget,
                 "Largest unpruned enumeration tree (default: $PPN_ASSIGNMENT_BUDGET or 300000000)");
  app.add_option("--jobs", globals.jobs, "Worker threads")->check(CLI::Range(1, 256));

  std::string file = "-";
  unsigned t = 1;
  auto add_graph_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Graph file, '-' for standard input");
    sub->add_option("--t", t, "Degeneracy parameter")->required()->check(CLI::PositiveNumber);
    return sub;
  };
  auto* chi = add_graph_command("chi", "Point partition number with a witness colouring");
  auto* crit = add_graph_command("check-critical", "Test chi_t-criticality");
  auto* dec = add_graph_command("decompose", "Factorization along the t-complement");
  auto* comp = add_graph_command("complement", "t-complement of a graph");

  JoinArgs join;
  auto* join_cmd = app.add_subcommand("join", "Dirac or Hajos join of two graph files");
  join_cmd->add_option("kind", join.kind, "dirac or hajos")
      ->required()
      ->check(CLI::IsMember({"dirac", "hajos"}));
  join_cmd->add_option("first", join.first, "First operand")->required();
  join_cmd->add_option("second", join.second, "Second operand")->required();
  join_cmd->add_option("--l", join.l, "Join multiplicity")->required();
  join_cmd->add_option("--u1", join.u1, "Hajos: u1 (1-indexed)");
  join_cmd->add_option("--v1", join.v1, "Hajos: v1, merged with v2");
  join_cmd->add_option("--u2", join.u2, "Hajos: u2");
  join_cmd->add_option("--v2", join.v2, "Hajos: v2");

  std::string family;
  std::vector<int> family_args;
  auto* construct = app.add_subcommand("construct", "Write a named graph");
  construct
      ->add_option("family", family,
                   "complete, cycle, s-clique, s-cycle, k3t, gallai-dirac, path, edgeless")
      ->required();
  construct->add_option("params", family_args, "Integer parameters of the family");

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "All chi_t-critical graphs of given order");
  enumerate->add_option("--t", en.t, "Degeneracy parameter")->required();
  enumerate->add_option("--k", en.k, "chi_t")->required();
  enumerate->add_option("--n", en.n, "Order")->required();
  enumerate->add_option("--m", en.m, "Multiplicity cap (default t)");
  enumerate->add_flag("--ext-only", en.ext_only, "Only list extremal graphs");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a theorem verification suite");
  verify->add_option("--suite", va.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(ppn::suite_names()));
  verify->add_option("--t", va.t, "Degeneracy parameter")->required();
  verify->add_option("--k", va.k, "chi_t of the class");
  verify->add_option("--n", va.n, "Order of the class");

  try {
    globals.budget = env_budget("PPN_BUDGET", globals.budget);
    globals.assignment_budget = env_budget("PPN_ASSIGNMENT_BUDGET", globals.assignment_budget);
  } catch (const ppn::PreconditionError& e) {
    return fail(globals, kInputError, e.what());
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kInputError;
  }

  try {
    if (*chi) return cmd_chi(globals, file, t);
    if (*crit) return cmd_check_critical(globals, file, t);
    if (*dec) return cmd_decompose(globals, file, t);
    if (*comp) return cmd_complement(globals, file, t);
    if (*join_cmd) return cmd_join(globals, join);
    if (*construct) return cmd_construct(globals, family, family_args);
    if (*enumerate) return cmd_enumerate(globals, en);
    if (*verify) return cmd_verify(globals, va);
  } catch (const ppn::BudgetExceeded& e) {
    return fail(globals, kBudget, e.what());
  } catch (const ppn::ParseError& e) {
    return fail(globals, kInputError, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(globals, kInputError, e.what());
  } catch (const std::exception& e) {
    return fail(globals, kInputError, std::string("internal error: ") + e.what());
  }
  return kInputError;
}
