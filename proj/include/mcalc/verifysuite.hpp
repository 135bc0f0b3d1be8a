#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mcalc/report.hpp"

namespace mcalc {

/// Where an expected value comes from.
enum class ExpectationBasis { kDefinition, kHandComputation, kWorkedExample };

std::string_view expectation_basis_name(ExpectationBasis b);

/// Expected outcome of a scenario. There is deliberately no default
/// constructor: a scenario without a stated basis does not compile.
struct Expectation {
  Expectation(ExpectationBasis basis, Verdict verdict, std::vector<long long> left, std::vector<long long> right)
      : basis(basis), verdict(verdict), left(std::move(left)), right(std::move(right)) {}

  ExpectationBasis basis;
  Verdict verdict;
  std::vector<long long> left;
  std::vector<long long> right;
};

struct Scenario {
  std::string id;
  std::string citation;
  /// Subset of {lemma, theorem, example, property}.
  std::vector<std::string> tags;
  std::string setup;
  Expectation expectation;
  std::function<Report()> body;
};

/// All registered scenarios, sorted by id.
const std::vector<Scenario>& scenarios();

/// Runs the scenario and checks the engine's report against the stated
/// expectation; the verdict is VERIFIED only if both agree. Throws
/// kUnknownScenario.
Report run_scenario(std::string_view id);

struct SuiteResult {
  std::string id;
  Report report;
};

struct SuiteSummary {
  std::vector<SuiteResult> results;
  std::size_t verified = 0;
  std::size_t refuted = 0;
  std::size_t inconclusive = 0;

  bool ok() const { return refuted == 0; }
  nlohmann::json to_json() const;
  /// Fixed-width table, one row per scenario.
  std::string to_table() const;
};

/// Runs every scenario carrying `tag` (all when empty), concurrently on
/// MCALC_THREADS workers; results are ordered by id.
SuiteSummary run_all(std::string_view tag = "");

}  // namespace mcalc
