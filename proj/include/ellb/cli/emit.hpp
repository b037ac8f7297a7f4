#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ellb/hopfext/ext_chart.hpp"
#include "ellb/moduli3/bundle.hpp"
#include "ellb/reps/decompose.hpp"

namespace ellb::cli {

// Key order matters for byte-stable output, so every writer builds
// ordered_json and serializes through finish_json.
using Json = nlohmann::ordered_json;

// Compact dump with the trailing newline the output contract requires.
std::string finish_json(const Json& j);

// Chart as {"bidegrees":[{s,n,free,torsion,classes}]} listing only the
// nonzero localized cells; a chart with none collapses to {}.
Json ext_chart_to_json(const hopfext::ExtChartData& chart);

// Fixed-width grid, one row per cohomological degree s (top row s_max),
// one column per internal degree n, with a legend for named classes.
std::string ext_chart_to_ascii(const hopfext::ExtChartData& chart);

// Decomposition report under a caller-provided header (the echoed
// invocation parameters), listing per class the rank, multiplicity and
// endomorphism certificates.
Json decomposition_to_json(const Json& header,
                           const reps::DecompositionReport& report);
std::string decomposition_to_ascii(const reps::DecompositionReport& report);

// Bundle normal forms with rank and the twelve-column H^1/H^2 tables.
Json normal_forms_to_json(const std::vector<moduli3::StandardBundle>& forms);
std::string normal_forms_to_ascii(
    const std::vector<moduli3::StandardBundle>& forms);

} // namespace ellb::cli
