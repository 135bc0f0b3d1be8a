#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace mcalc {

enum class Verdict { kVerified, kRefuted, kInconclusive };

std::string_view verdict_name(Verdict v);

/// Outcome of checking an identity: both sides as exact integers plus the
/// intermediate data that produced them.
struct Report {
  std::string claim;
  std::vector<long long> left;
  std::vector<long long> right;
  Verdict verdict = Verdict::kInconclusive;
  nlohmann::json certificate = nlohmann::json::object();

  /// VERIFIED iff left == right entrywise, REFUTED otherwise.
  static Report compare(std::string claim, std::vector<long long> left, std::vector<long long> right,
                        nlohmann::json certificate = nlohmann::json::object());

  nlohmann::json to_json() const;
};

}  // namespace mcalc
