#include "lorentz/report.hpp"

namespace lorentz {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::HypothesisViolation: return "hypothesis-violation";
    case CheckStatus::NotCheckable: return "one-sided-not-checkable";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

} // namespace lorentz
