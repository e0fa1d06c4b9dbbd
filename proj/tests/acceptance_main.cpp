// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate. Runs every criterion through the C API and prints one
// PASS/FAIL line each. A criterion also fails when it overruns its time
// limit. Usage: qcg_acceptance [jobs] [ids]

#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "qcg/qcg.h"

namespace {

// wall-clock ceilings in seconds, criteria 1..12
const std::map<int, double> kLimits{{1, 60},  {2, 60}, {3, 1},  {4, 30},  {5, 5},   {6, 30},
                                    {7, 30},  {8, 5},  {9, 300}, {10, 60}, {11, 60}, {12, 300}};

struct Tally {
  std::map<int, double> seconds;
};

void on_done(int id, const char* name, int pass, double seconds, void* user) {
  static_cast<Tally*>(user)->seconds[id] = seconds;
  std::printf("C%-2d %s %s (%.2fs)\n", id, pass ? "PASS" : "FAIL", name, seconds);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = argc > 1 ? std::atoi(argv[1]) : 1;
  const char* only = argc > 2 ? argv[2] : nullptr;
  Tally tally;
  qcg_result* r = nullptr;
  qcg_status st = qcg_run_acceptance(jobs, only, on_done, &tally, &r);
  if (st != QCG_OK && st != QCG_ERR_PROPERTY_FAILED) {
    std::fprintf(stderr, "acceptance: %s\n", qcg_last_error());
    return 2;
  }
  auto doc = nlohmann::json::parse(qcg_result_json(r));
  qcg_result_free(r);
  bool ok = st == QCG_OK;
  for (const auto& c : doc["criteria"]) {
    int id = c["id"];
    if (!c["pass"].get<bool>()) std::printf("  C%d detail: %s\n", id, c["detail"].get<std::string>().c_str());
    if (tally.seconds[id] > kLimits.at(id)) {
      std::printf("  C%d over time limit: %.2fs > %.0fs\n", id, tally.seconds[id], kLimits.at(id));
      ok = false;
    }
  }
  std::printf("%s\n", ok ? "ALL PASS" : "FAILURES");
  return ok ? 0 : 1;
}
