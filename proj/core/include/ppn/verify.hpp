#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppn/coloring.hpp"
#include "ppn/enumeration.hpp"
#include "ppn/errors.hpp"
#include "ppn/multigraph.hpp"

namespace ppn {

/// A suite request outside the parameter envelope of its enumeration.
class OutOfEnvelope : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Largest order enumerated exhaustively for a given t.
int envelope_max_order(unsigned t);

struct Check {
  std::string name;     ///< what is being checked
  std::string subject;  ///< which instance
  bool passed = true;
  /// Informational checks report data and never fail a suite.
  bool asserted = true;
  std::string detail;
  std::optional<long long> expected;
  std::optional<long long> actual;
  std::optional<Multigraph> witness;
  std::optional<Coloring> coloring;
};

struct SuiteParams {
  unsigned t = 1;
  std::optional<int> k;
  std::optional<int> n;
};

struct VerifyOptions {
  EnumerateOptions enumeration;
  EnumerationOptions colorings;
};

struct SuiteReport {
  std::string suite;
  SuiteParams params;
  std::vector<Check> checks;

  std::size_t violations() const;
  bool passed() const { return violations() == 0; }
};

/// theoremA, theoremB, brooks, lowvertex, extreme, thm71, thm85, joins.
const std::vector<std::string>& suite_names();

/// Runs one suite. Unknown names, missing parameters and requests outside
/// the envelope throw PreconditionError (OutOfEnvelope for the latter);
/// search limits surface as BudgetExceeded.
SuiteReport run_suite(const std::string& name, const SuiteParams& params,
                      const VerifyOptions& opts = {});

}  // namespace ppn
