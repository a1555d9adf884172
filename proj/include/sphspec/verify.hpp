#pragma once

#include <string>
#include <vector>

namespace sphspec {

struct Assertion {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<Assertion> assertions;

  std::size_t failures() const;
  bool pass() const { return !assertions.empty() && failures() == 0; }
};

// table1, dims, casimir, branching, gelfand, oracle, infchar, hyperboloid,
// spin81, range, reducibility.
const std::vector<std::string>& suite_names();
// Throws DomainError for an unknown suite.  Exceptions raised by the code
// under test are recorded as failed assertions.
VerifyReport run_suite(const std::string& suite);

}  // namespace sphspec
