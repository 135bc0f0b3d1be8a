#include "mcalc/report.hpp"

namespace mcalc {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kVerified: return "VERIFIED";
    case Verdict::kRefuted: return "REFUTED";
    case Verdict::kInconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Report Report::compare(std::string claim, std::vector<long long> left, std::vector<long long> right,
                       nlohmann::json certificate) {
  Report r{std::move(claim), std::move(left), std::move(right), Verdict::kRefuted, std::move(certificate)};
  if (r.left == r.right) r.verdict = Verdict::kVerified;
  return r;
}

nlohmann::json Report::to_json() const {
  return {{"claim", claim},
          {"left", left},
          {"right", right},
          {"verdict", std::string(verdict_name(verdict))},
          {"certificate", certificate}};
}

}  // namespace mcalc
