#pragma once

#include <string>
#include <vector>

namespace pqclab::selftest {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Options {
  bool quick = false;
  bool inject_fault = false;  // corrupts one expected value; the run must then fail
};

std::vector<Check> run(const Options& options);
bool all_passed(const std::vector<Check>& checks);

}  // namespace pqclab::selftest
