#pragma once

// Named verification suites shared by the CLI and the acceptance runner.
// Every check records its measured value against a threshold; reports are
// ordered by check name so identical configurations give identical output.

#include <string>
#include <vector>

#include "su11/errors.hpp"
#include "su11/json_io.hpp"

namespace su11::suite {

enum class Relation {
  less,     // value < threshold
  greater,  // value > threshold
  equal,    // value == threshold
  within,   // threshold ≤ value ≤ upper
  report,   // informational, always passes
};

const char* to_string(Relation r);

struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  double upper = 0.0;  // only for Relation::within
  Relation relation = Relation::report;
  bool passed = true;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;  // sorted by name
  Warnings warnings;

  bool passed() const;
  const Check* find(const std::string& name) const;
};

/// "core", "haar", "rep", "hopf", "transform".
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws ConfigError on an
/// unknown name.
Report run_suite(const std::string& name, const io::Config& cfg);

/// Deterministic JSON form. The timestamp is the caller's business.
io::Json to_json(const Report& r, const io::Config& cfg);

}  // namespace su11::suite
