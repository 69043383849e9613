#pragma once

#include <stdexcept>
#include <string>

namespace pmlab {

struct NotPositiveDefinite : std::runtime_error {
  explicit NotPositiveDefinite(const std::string& msg)
      : std::runtime_error(msg) {}
};

struct DegenerateTrace : std::runtime_error {
  explicit DegenerateTrace(const std::string& msg) : std::runtime_error(msg) {}
};

struct EstimatorFailure : std::runtime_error {
  explicit EstimatorFailure(const std::string& msg)
      : std::runtime_error(msg) {}
};

struct ConditionViolated : std::runtime_error {
  explicit ConditionViolated(const std::string& msg)
      : std::runtime_error(msg) {}
};

struct NonConvergence : std::runtime_error {
  explicit NonConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pmlab
