#include "ppn/report.hpp"

#include <json.hpp>

namespace ppn {

namespace {

using nlohmann::json;

json envelope(const char* kind) {
  return json{{"format", "ppn-report"}, {"version", kReportVersion}, {"kind", kind}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json graph_json(const Multigraph& g) {
  json edges = json::array();
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (const auto m = g.mult(u, v)) edges.push_back({u + 1, v + 1, m});
  return json{{"n", g.order()}, {"edges", std::move(edges)}};
}

json vertex_set_json(const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(v + 1);
  return out;
}

json coloring_json(const Coloring& c) { return json(c.colors()); }

}  // namespace

std::string graph_report(const Multigraph& g) {
  auto j = envelope("graph");
  j["graph"] = graph_json(g);
  return dump(j);
}

std::string chi_report(const Multigraph& g, unsigned t, const ChiResult& r) {
  auto j = envelope("chi");
  j["t"] = t;
  j["graph"] = graph_json(g);
  j["chi"] = r.k;
  j["coloring"] = coloring_json(r.witness);
  return dump(j);
}

std::string criticality_report(const Multigraph& g, unsigned t, const CriticalityReport& r) {
  auto j = envelope("criticality");
  j["t"] = t;
  j["graph"] = graph_json(g);
  j["chi"] = r.k;
  j["critical"] = r.is_critical;
  j["vertex_critical"] = r.is_vertex_critical;
  json witnesses = json::array();
  for (const auto& [pair, phi] : r.edge_witnesses) {
    witnesses.push_back(
        {{"edge", {pair.first + 1, pair.second + 1}}, {"coloring", coloring_json(phi)}});
  }
  j["edge_witnesses"] = std::move(witnesses);
  if (r.failing_edge) {
    j["failing_edge"] = {r.failing_edge->first + 1, r.failing_edge->second + 1};
  } else {
    j["failing_edge"] = nullptr;
  }
  return dump(j);
}

std::string decomposition_report(const Multigraph& g, const DecompositionReport& r) {
  auto j = envelope("decomposition");
  j["t"] = r.t;
  j["graph"] = graph_json(g);
  j["p"] = r.p;
  j["q"] = r.q;
  j["indecomposable"] = r.indecomposable();
  json factors = json::array();
  for (const auto& f : r.factors) {
    factors.push_back({{"vertices", vertex_set_json(f.vertices)},
                       {"graph", graph_json(f.graph)},
                       {"chi", f.k},
                       {"critical", f.critical}});
  }
  j["factors"] = std::move(factors);
  return dump(j);
}

std::string enumeration_report(const EnumerationResult& r, bool ext_only) {
  auto j = envelope("enumeration");
  j["t"] = r.t;
  j["k"] = r.k;
  j["n"] = r.n;
  j["m"] = r.m;
  j["count"] = r.graphs.size();
  j["ext"] = r.ext ? json(*r.ext) : json(nullptr);
  json extremal = json::array();
  for (const auto& g : r.extremal) extremal.push_back(graph_json(g));
  j["extremal"] = std::move(extremal);
  if (!ext_only) {
    json graphs = json::array();
    for (const auto& g : r.graphs) graphs.push_back(graph_json(g));
    j["graphs"] = std::move(graphs);
  }
  j["stats"] = {{"leaves", r.stats.leaves}, {"candidates", r.stats.candidates}};
  return dump(j);
}

std::string suite_report(const SuiteReport& r) {
  auto j = envelope("verify");
  j["suite"] = r.suite;
  j["t"] = r.params.t;
  j["k"] = r.params.k ? json(*r.params.k) : json(nullptr);
  j["n"] = r.params.n ? json(*r.params.n) : json(nullptr);
  j["passed"] = r.passed();
  j["violations"] = r.violations();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj{{"name", c.name},         {"subject", c.subject},
            {"passed", c.passed},     {"asserted", c.asserted},
            {"detail", c.detail}};
    cj["expected"] = c.expected ? json(*c.expected) : json(nullptr);
    cj["actual"] = c.actual ? json(*c.actual) : json(nullptr);
    cj["witness"] = c.witness ? graph_json(*c.witness) : json(nullptr);
    cj["coloring"] = c.coloring ? coloring_json(*c.coloring) : json(nullptr);
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return dump(j);
}

std::string error_report(int exit_code, const std::string& message) {
  auto j = envelope("error");
  j["exit_code"] = exit_code;
  j["message"] = message;
  return dump(j);
}

}  // namespace ppn
