#pragma once

#include "deloop/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace deloop {

struct VerifyConfig {
  Scalar q = 2;
  std::uint64_t seed = 0;
  std::size_t n_max = 2;
};

enum class CheckStatus { pass, fail, inconclusive };
std::string to_string(CheckStatus s);

struct Check {
  std::string id;
  std::string paper_anchor;
  CheckStatus status = CheckStatus::fail;
  io::Json detail;
  bool mandatory = true;
};

struct VerificationReport {
  std::vector<Check> checks;
  VerifyConfig config;
  std::string version;

  /// Every mandatory check passed and nothing failed.
  bool mandatory_pass() const;
  /// 0 all mandatory pass, 1 some failure, 3 only inconclusive deviations.
  int exit_code() const;
  io::Json to_json() const;
};

/// Replays the ten stages in order. Throws UsageError for q ∈ {0, 1, −1} or n_max < 2 before any check runs.
/// A stage that throws is recorded as a failed check carrying the error, and the run stops there.
VerificationReport run_paper_verification(const VerifyConfig& config);

}  // namespace deloop
