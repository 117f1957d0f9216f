#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace leinster::search {

struct InvariantResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string counterexample;  // first failure, empty when passed
};

struct VerifyReport {
  std::vector<InvariantResult> results;

  bool all_passed() const;
  /// One "PASS"/"FAIL" line per invariant.
  std::string text() const;
};

/// Builds the oracle corpus up to max_order and checks every closed form and
/// structural identity against brute force. Throws ResourceError above the cap.
VerifyReport run_verify(std::size_t max_order);

}  // namespace leinster::search
