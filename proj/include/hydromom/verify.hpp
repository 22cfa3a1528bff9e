#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hydromom::verify {

struct VerifyOptions {
  double charge = 1.0;
  /// Replaces every criterion's pinned tolerance when set.
  std::optional<double> tolerance;
  std::uint64_t seed = 20240601;
};

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst deviation found
  double tolerance = 0.0;  // pass threshold it was compared with
  std::string detail;      // worst case, or the failing cases
};

CheckResult check_energy_spectrum(const VerifyOptions& o);   // 1
CheckResult check_degeneracy(const VerifyOptions& o);        // 2
CheckResult check_tabulated_forms(const VerifyOptions& o);   // 3
CheckResult check_normalization(const VerifyOptions& o);     // 4
CheckResult check_residue_engine(const VerifyOptions& o);    // 5
CheckResult check_transform_oracle(const VerifyOptions& o);  // 6
CheckResult check_expectations(const VerifyOptions& o);      // 7
CheckResult check_structure(const VerifyOptions& o);         // 8
CheckResult check_orthogonality(const VerifyOptions& o);     // 9

/// all, spectrum, golden, normalization, algebra, oracle. DomainError for other names.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& o);
const std::vector<std::string>& suite_names();

}  // namespace hydromom::verify
