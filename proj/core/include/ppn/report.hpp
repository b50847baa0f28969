#pragma once

#include <string>

#include "ppn/coloring.hpp"
#include "ppn/criticality.hpp"
#include "ppn/decomposition.hpp"
#include "ppn/enumeration.hpp"
#include "ppn/multigraph.hpp"
#include "ppn/verify.hpp"

namespace ppn {

/// Version written into every report as "version".
inline constexpr int kReportVersion = 1;

// Each function returns one JSON document (two-space indent, keys sorted,
// trailing newline). Vertices are 1-indexed as in graph files.

std::string graph_report(const Multigraph& g);
std::string chi_report(const Multigraph& g, unsigned t, const ChiResult& r);
std::string criticality_report(const Multigraph& g, unsigned t, const CriticalityReport& r);
std::string decomposition_report(const Multigraph& g, const DecompositionReport& r);
std::string enumeration_report(const EnumerationResult& r, bool ext_only);
std::string suite_report(const SuiteReport& r);
std::string error_report(int exit_code, const std::string& message);

}  // namespace ppn
