// SPDX-License-Identifier: Apache-2.0
//
// The twelve end-to-end checks run by `qcg verify-paper` and by the
// acceptance test binary. Each is exact; the time limits are the budgets the
// acceptance binary enforces.

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qcg {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct CriterionInfo {
  int id;
  const char* name;
  double limit_seconds;
};

const std::vector<CriterionInfo>& acceptance_criteria();

using CriterionCallback = std::function<void(const CriterionResult&)>;

/// Runs the selected criteria (all when `only` is empty) in id order. `jobs`
/// threads share the sweep items inside each criterion.
std::vector<CriterionResult> run_acceptance(int jobs, const std::vector<int>& only = {},
                                            const CriterionCallback& on_done = {});

}  // namespace qcg
