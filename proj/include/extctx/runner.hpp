#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "extctx/theorems.hpp"

namespace extctx {

inline constexpr int kBoundCap = 5;

/// Bad flags, unknown names, unreadable object files. Maps to exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string context = "finset";
  std::vector<std::string> families;  // empty: every family of the context
  int bound = 3;
  std::optional<int> heavy_bound;  // E, G and H; default min(bound, 2)
  std::vector<std::string> theorems{"all"};
  std::string objects_path;
  std::string report_path;
  std::string format = "text";
  bool timings = false;
};

/// Known theorem ids in run order.
const std::vector<std::string>& theorem_ids();

struct CheckerRun {
  Verdict verdict;
  double seconds = 0.0;
};

struct RunReport {
  RunConfig config;
  std::vector<CheckerRun> runs;
  bool passed = true;  // no verdict refuted
};

/// Throws UsageError describing the first problem.
void validate_config(const RunConfig& cfg);

/// Reads {"objects": [{"id", "carrier", "order"}]}. Syntax errors carry the
/// line and column; field errors carry the path of the offending field.
/// Throws UsageError.
std::vector<ObjectRef> load_objects(const std::string& path, bool ordered);

/// Validates, loads objects, runs every selected checker in a fixed order.
RunReport run(const RunConfig& cfg);

nlohmann::json to_json(const RunReport& r);
std::string to_text(const RunReport& r);

inline int exit_code(const RunReport& r) { return r.passed ? 0 : 1; }

}  // namespace extctx
