#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wsz {

struct VerifyOptions {
  std::size_t tree_max = 16;     // DP vs exhaustive trees for n = 2..tree_max
  std::size_t branch_max = 12;   // DP vs exhaustive branches for m = 2..branch_max
  std::size_t branch_n_max = 40; // total orders checked per branch size
  std::size_t random_trees = 200;
  std::uint64_t seed = 20240611;
};

struct VerifyCheck {
  std::string name;
  bool passed = true;
  std::string detail; // witness on failure, summary otherwise
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_passed() const;
};

// DP-versus-oracle equivalence plus the structural invariants of every
// module. Each check stops at its first failure and records the witness.
VerifyReport run_verification(const VerifyOptions& options = {});

} // namespace wsz
