#include "ppn/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

#include "ppn/errors.hpp"

namespace ppn {

namespace {

// Dense storage: n^2 multiplicities.
constexpr long long kMaxOrder = 4096;

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line, const char* what) {
  long long x = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(line, std::string("expected an integer ") + what + ", got '" + std::string(tok) + "'");
  }
  return x;
}

}  // namespace

Multigraph parse_graph(std::istream& in) {
  std::optional<Multigraph> g;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto tok = split(raw);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (tok[0] == "mgraph") {
      if (g) fail(line, "duplicate header");
      if (tok.size() != 2) fail(line, "header must be 'mgraph <n>'");
      const long long n = to_int(tok[1], line, "order");
      if (n < 0 || n > kMaxOrder) fail(line, "order out of range");
      g.emplace(static_cast<int>(n));
    } else if (tok[0] == "e") {
      if (!g) fail(line, "edge before header");
      if (tok.size() != 3 && tok.size() != 4) fail(line, "edge must be 'e <u> <v> [mult]'");
      const long long u = to_int(tok[1], line, "vertex");
      const long long v = to_int(tok[2], line, "vertex");
      const long long m = tok.size() == 4 ? to_int(tok[3], line, "multiplicity") : 1;
      if (u < 1 || u > g->order() || v < 1 || v > g->order()) {
        fail(line, "vertex out of range 1.." + std::to_string(g->order()));
      }
      if (u == v) fail(line, "loops are not allowed");
      if (m < 1) fail(line, "multiplicity must be positive");
      const long long total = static_cast<long long>(g->mult(u - 1, v - 1)) + m;
      if (total > std::numeric_limits<std::uint16_t>::max()) fail(line, "multiplicity too large");
      g->set_mult(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1),
                  static_cast<Multiplicity>(total));
    } else {
      fail(line, "unknown directive '" + std::string(tok[0]) + "'");
    }
  }
  if (!g) throw ParseError("missing 'mgraph <n>' header");
  return *g;
}

Multigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string write_graph(const Multigraph& g) {
  std::string out = "mgraph " + std::to_string(g.order()) + "\n";
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (const auto m = g.mult(u, v)) {
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + " " +
               std::to_string(m) + "\n";
      }
  return out;
}

Multigraph read_graph_file(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_graph(in);
}

}  // namespace ppn
