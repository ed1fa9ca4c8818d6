#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partlab {

  // One line of a regression corpus:  name | check | key=value ... | expected
  struct Fact {
    std::size_t line = 0;
    std::string name;
    std::string check;
    std::string arguments;
    std::string expected;
  };

  enum class FactOutcome { pass, fail, inconclusive };
  std::string to_string(FactOutcome o);

  struct FactResult {
    Fact        fact;
    std::string actual;
    FactOutcome outcome = FactOutcome::fail;
  };

  // Blank lines and lines starting with '#' are skipped.
  std::vector<Fact> read_facts(std::istream& in);
  FactResult        run_fact(Fact const& f, unsigned workers = 1);
  std::vector<std::string> fact_checks();

}  // namespace partlab
