#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "ellb/hopfext/ext_chart.hpp"

namespace ellb::cli {

using Json = nlohmann::ordered_json;

// Heavyweight state shared across checks: the stabilized-chart check and
// the bundle-comparison check read the same chart, so whichever runs first
// pays for the build and the other reuses every cached elimination.
class CheckState {
public:
  hopfext::ExtChartData& chart();

private:
  std::unique_ptr<hopfext::ExtChartData> chart_;
};

// Outcome of one named check.  `details` carries only deterministic
// content (observed values); wall time goes to stderr, never into a
// report, so identical inputs keep producing identical bytes.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

// Check names in canonical suite order.
std::vector<std::string> check_names();

// Runs one check against its manifest entry (expected values and budget).
// An unknown name yields a failed result rather than a throw, so a stale
// manifest reports line by line instead of aborting the suite.
CheckResult run_check(const std::string& name, const Json& entry,
                      CheckState& state);

// Parses a manifest document and validates its structure: unique check
// names, every expected value tagged with a provenance in {pinned,
// derived, trivial}, tolerance "exact" throughout.  Throws
// std::invalid_argument on a malformed document, std::runtime_error when
// the file cannot be read.
Json load_manifest(const std::string& path);

// Runs every check in the manifest in order, enforcing each entry's
// budget_seconds (an overrun fails that check).
std::vector<CheckResult> run_suite(const Json& manifest, CheckState& state);

} // namespace ellb::cli
