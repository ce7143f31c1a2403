#pragma once

#include <string>
#include <deque>
#include <vector>

#include <json.hpp>

namespace extctx {

/// One named check inside a validator run. Violations are data, not faults.
struct CheckEntry {
  std::string id;
  bool passed = true;
  bool required = true;  // informational entries never fail a report
  long instances = 0;
  std::string witness;          // human-readable first violation
  nlohmann::json witness_data;  // serialized objects/morphisms of that violation
};

struct Report {
  std::string name;
  std::deque<CheckEntry> checks;  // stable references across add()

  bool passed() const {
    for (const auto& c : checks) {
      if (c.required && !c.passed) return false;
    }
    return true;
  }

  const CheckEntry* find(const std::string& id) const {
    for (const auto& c : checks) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }

  CheckEntry& add(std::string id) {
    CheckEntry e;
    e.id = std::move(id);
    checks.push_back(std::move(e));
    return checks.back();
  }
};

/// Records a violation on `entry` (keeping only the first witness).
inline void fail(CheckEntry& entry, std::string witness, nlohmann::json data = {}) {
  if (entry.passed) {
    entry.witness = std::move(witness);
    entry.witness_data = std::move(data);
  }
  entry.passed = false;
}

nlohmann::json to_json(const Report& r);

}  // namespace extctx
