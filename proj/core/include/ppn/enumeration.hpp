#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ppn/coloring.hpp"
#include "ppn/multigraph.hpp"

namespace ppn {

struct EnumerateOptions {
  /// Upper limit on (cap+1)^(n choose 2), the size of the unpruned
  /// assignment tree; larger requests fail with BudgetExceeded up front.
  std::uint64_t assignment_budget = 300'000'000;
  SolverOptions solver;
  int jobs = 1;
};

struct EnumerationStats {
  std::uint64_t leaves = 0;      ///< complete assignments passing the pruning
  std::uint64_t candidates = 0;  ///< distinct isomorphism classes examined
};

/// Cri_t(k,n) restricted to multiplicity <= m, up to isomorphism.
struct EnumerationResult {
  unsigned t = 1;
  int k = 0;
  int n = 0;
  Multiplicity m = 1;
  std::vector<Multigraph> graphs;  ///< canonical representatives, sorted by label
  std::optional<std::size_t> ext;  ///< minimum edge count, absent if empty
  std::vector<Multigraph> extremal;
  EnumerationStats stats;
};

/// Exhaustive generation with pruning by the necessary conditions
/// mu <= min(m, t), delta >= t(k-1), non-increasing degree sequence and
/// connectivity; then canonical deduplication and an exact criticality test.
/// m defaults to t.
EnumerationResult enumerate_critical(unsigned t, int k, int n,
                                     std::optional<Multiplicity> m = std::nullopt,
                                     const EnumerateOptions& opts = {});

/// G is chi_t-critical with chi_t(G) = k.
bool is_critical_with_k(const Multigraph& g, unsigned t, int k,
                        const SolverOptions& opts = {});

struct ExtResult {
  std::optional<std::size_t> value;  ///< absent iff the class is empty
  std::vector<Multigraph> extremal;
};

ExtResult ext(unsigned t, int k, int n, std::optional<Multiplicity> m = std::nullopt,
              const EnumerateOptions& opts = {});

struct Rational {
  long long num = 0;
  long long den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(long long num, long long den);

/// Closed-form reference values; each field is absent outside the
/// parameter range of its formula. p = n - k.
struct BoundFormulas {
  std::optional<Rational> trivial;           ///< t(k-1)n / 2
  std::optional<Rational> kostochka_yancey;  ///< t = 1, n >= k >= 4, n != k+1
  std::optional<long long> half_bound;       ///< t C(n,2) - t p^2, 2 <= p <= k-2
  std::optional<long long> even_t_exact;     ///< t even, 1 <= p <= k-1
  std::optional<long long> gallai;           ///< t = 1, 2 <= p <= k-1
};

BoundFormulas bound_formulas(unsigned t, int k, int n);

struct Theorem85Member {
  Multigraph graph;
  std::size_t edges = 0;
  bool ok = true;
};

struct Theorem85Verdict {
  long long bound = 0;
  std::size_t class_size = 0;
  std::vector<Theorem85Member> checked;  ///< members with census (0, 0)
  bool holds() const;
};

/// Members of Cri_t(k,n) without a t-dominating subgraph in Cri_t(1) or
/// Cri_t(2) have at least t C(n,2) - t p^2 edges. Requires 2 <= p <= k-2.
Theorem85Verdict verify_theorem_8_5(unsigned t, int k, int n,
                                    const EnumerateOptions& opts = {});

}  // namespace ppn
