#pragma once

// Verification suites: each one checks an identity between two independent
// computations over a family of instances and reports the mismatches.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace meander {

struct VerifyParams {
  int n = 3;
  int d = 2;
  std::uint64_t seed = 1;
  /// Randomized instances, where a suite has any.
  int instances = 200;
};

struct VerifyReport {
  std::string suite;
  long long instances = 0;
  nlohmann::json failures = nlohmann::json::array();
  std::uint64_t seed = 0;

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

std::vector<std::string> suite_names();
/// Throws DomainError for an unknown suite name.
VerifyReport run_suite(const std::string& name, const VerifyParams& params);

VerifyReport verify_wick(const VerifyParams& params);
VerifyReport verify_theorem14(const VerifyParams& params);
VerifyReport verify_prop18(const VerifyParams& params);
VerifyReport verify_prop310(const VerifyParams& params);
VerifyReport verify_lemma415(const VerifyParams& params);
VerifyReport verify_cor412(const VerifyParams& params);
VerifyReport verify_commutator(const VerifyParams& params);
VerifyReport verify_q0bnc(const VerifyParams& params);

}  // namespace meander
