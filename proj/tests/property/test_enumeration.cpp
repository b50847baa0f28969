#include <doctest.h>

#include <map>
#include <set>

#include "../support/oracle.hpp"
#include "ppn/coloring.hpp"
#include "ppn/enumeration.hpp"

using namespace ppn;

namespace {

/// Every labelled multigraph with mu <= t, no pruning, filtered at the end.
std::map<int, std::set<CanonicalLabel>> naive_classes(unsigned t, int n) {
  std::map<int, std::set<CanonicalLabel>> by_k;
  for (std::uint64_t c = 0; c < oracle::code_count(n, t); ++c) {
    const auto g = oracle::from_code(n, t, c);
    const int k = chi_t(g, t).k;
    if (is_critical_with_k(g, t, k)) by_k[k].insert(canonical_form(g));
  }
  return by_k;
}

void cross_check(unsigned t, int n) {
  CAPTURE(t);
  CAPTURE(n);
  const auto naive = naive_classes(t, n);
  for (int k = 1; k <= n; ++k) {
    CAPTURE(k);
    std::set<CanonicalLabel> pruned;
    for (const auto& g : enumerate_critical(t, k, n).graphs) pruned.insert(canonical_form(g));
    const auto it = naive.find(k);
    CHECK(pruned == (it == naive.end() ? std::set<CanonicalLabel>{} : it->second));
  }
}

}  // namespace

// (t+1)^C(n,2) <= 10^7 throughout.
TEST_CASE("pruned enumeration equals the naive one, t = 1") {
  for (int n = 1; n <= 7; ++n) cross_check(1, n);
}
TEST_CASE("pruned enumeration equals the naive one, t = 2") {
  for (int n = 1; n <= 5; ++n) cross_check(2, n);
}
TEST_CASE("pruned enumeration equals the naive one, t = 3") {
  for (int n = 1; n <= 5; ++n) cross_check(3, n);
}
TEST_CASE("pruned enumeration equals the naive one, t = 4") {
  for (int n = 1; n <= 5; ++n) cross_check(4, n);
}

TEST_CASE("ext respects the trivial bound and the even-t closed form") {
  for (unsigned t = 1; t <= 3; ++t)
    for (int n = 1; n <= (t == 3 ? 5 : 6); ++n)
      for (int k = 1; k <= n; ++k) {
        const auto r = enumerate_critical(t, k, n);
        if (!r.ext) continue;
        const auto b = bound_formulas(t, k, n);
        CAPTURE(t);
        CAPTURE(k);
        CAPTURE(n);
        REQUIRE(b.trivial);
        CHECK(static_cast<long long>(*r.ext) * b.trivial->den >= b.trivial->num);
        if (b.even_t_exact) CHECK(static_cast<long long>(*r.ext) == *b.even_t_exact);
        if (b.gallai) CHECK(static_cast<long long>(*r.ext) == *b.gallai);
        for (const auto& g : r.extremal) CHECK(g.edge_count() == *r.ext);
      }
}

TEST_CASE("output does not depend on the number of jobs") {
  EnumerateOptions serial, parallel;
  parallel.jobs = 4;
  for (auto [t, k, n] : {std::tuple{2u, 3, 5}, {1u, 4, 6}, {3u, 2, 5}}) {
    const auto a = enumerate_critical(t, k, n, std::nullopt, serial);
    const auto b = enumerate_critical(t, k, n, std::nullopt, parallel);
    CHECK(a.graphs == b.graphs);
    CHECK(a.extremal == b.extremal);
  }
}
