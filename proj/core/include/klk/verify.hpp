#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace klk {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckRecord {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // offending indices and both sides on failure, reason on skip
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> checks;  // sorted by id
  bool ok() const;
  std::string to_json() const;
};

struct VerifyBounds {
  int n = 3;              // largest complex dimension exercised
  std::uint64_t seed = 0;
  int samples = 5;        // random draws per randomized check
};

const std::vector<std::string>& suite_names();  // gray, weyl, unitary, transfer, glob, kinematic, all
// Throws DomainError for an unknown suite.
Report run_suite(const std::string& suite, const VerifyBounds& bounds);

}  // namespace klk
