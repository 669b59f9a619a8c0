#pragma once

#include <cstdint>

#include "qf2/equiv.hpp"
#include "qf2/functor_eval.hpp"
#include "qf2/lifts.hpp"

namespace qf2 {

// One checked statement: expected and actual rendered as short strings.
struct CaseResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;
  bool passed = false;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 12345;
  int span_bound = kDefaultSpanBound;
  int apex_bound = kDefaultApexBound;
  Exec exec = Exec::parallel;
};

// Fixed order; every name is one verification suite of the structural laws.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

// All suites, scheduled over a worker pool (the heavyweight suites keep the
// pool busy while the light ones finish); results come back in the fixed
// suite_names order regardless of completion order.
std::vector<SuiteResult> run_all(const VerifyOptions& opt);

}  // namespace qf2
