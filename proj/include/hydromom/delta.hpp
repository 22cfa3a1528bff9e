#pragma once

#include <cstdlib>
#include <string>

namespace hydromom {

/// Symbolic delta(p_phi +- m). Carried as a label only; never evaluated.
struct DeltaFactor {
  int m = 0;                    // |m|
  bool signed_support = false;  // true when both +m and -m supports exist (m != 0)

  std::string label() const {
    if (m == 0) return "delta(p_phi)";
    return "delta(p_phi +- " + std::to_string(m) + ")";
  }

  friend bool operator==(const DeltaFactor&, const DeltaFactor&) = default;
};

inline DeltaFactor rho_delta(int m) { return DeltaFactor{std::abs(m), m != 0}; }

}  // namespace hydromom
