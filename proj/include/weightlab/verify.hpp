#pragma once

#include <string>
#include <vector>

#include "weightlab/scalar.hpp"

namespace weightlab {

struct VerifyResult {
  std::string suite;
  bool passed = true;
  std::vector<std::string> lines;
};

const std::vector<std::string>& verify_suite_names();

// K is the truncation used by suites that take one; "all" runs every suite.
std::vector<VerifyResult> run_verify(const std::string& suite, long K);

}  // namespace weightlab
