#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yangian/central.hpp"
#include "yangian/graded.hpp"
#include "yangian/serieslab.hpp"
#include "yangian/shift.hpp"

#include <json.hpp>

namespace yang {

struct Check {
  std::string name;
  nlohmann::json params;
  bool ok = false;
  std::string witness;  // empty unless the check failed
};

struct VerifyConfig {
  int n = 2;
  long p = 2;
  int trunc = 8;
  int smax = 4;
  unsigned seed = 1;
  std::optional<ShiftMatrix> sigma;
};

// Evaluates every defining relation of the diagonal/root generator
// presentation on coefficients with superscripts up to R. Requires
// trunc >= 2R - 1 because the right-hand sides reach that depth.
std::vector<Check> verify_drinfeld_relations(const Ctx& cx, int R, int trunc);

// Named suites: drinfeld | gauss-identities | center | graded | serieslab |
// shifted | all.
std::vector<Check> run_suite(const std::string& name, const VerifyConfig& cfg);

bool all_passed(const std::vector<Check>& checks);

// {config, checks: [{name, params, status, witness?}]}; checks sorted by
// (name, params) so the report is independent of evaluation order.
nlohmann::json report_json(const VerifyConfig& cfg, std::vector<Check> checks);

}  // namespace yang
