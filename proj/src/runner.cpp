#include "extctx/runner.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "extctx/serialize.hpp"

namespace extctx {

using nlohmann::json;

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"validate", "A", "B", "C", "D", "E",
                                            "F", "G", "H", "adjunctions", "biproduct"};
  return ids;
}

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::vector<std::string> selected_theorems(const RunConfig& cfg) {
  if (contains(cfg.theorems, "all")) return theorem_ids();
  std::vector<std::string> out;
  for (const auto& id : theorem_ids()) {
    if (contains(cfg.theorems, id)) out.push_back(id);
  }
  return out;
}

std::vector<std::string> selected_families(const RunConfig& cfg, const Context& ctx) {
  return cfg.families.empty() ? ctx.families() : cfg.families;
}

int heavy(const RunConfig& cfg) { return cfg.heavy_bound.value_or(std::min(cfg.bound, 2)); }

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

void validate_config(const RunConfig& cfg) {
  if (!contains(builtin_names(), cfg.context)) {
    throw UsageError("unknown context '" + cfg.context + "' (expected finset or finpre)");
  }
  if (cfg.bound < 1) throw UsageError("bound must be at least 1");
  if (cfg.bound > kBoundCap) {
    throw UsageError("refusing bound " + std::to_string(cfg.bound) + ": the safety cap is " +
                     std::to_string(kBoundCap));
  }
  if (cfg.heavy_bound && (*cfg.heavy_bound < 1 || *cfg.heavy_bound > kBoundCap)) {
    throw UsageError("heavy bound must be between 1 and " + std::to_string(kBoundCap));
  }
  for (const auto& f : cfg.families) {
    if (!contains(closure_family_names(), f)) {
      throw UsageError("unknown closure family '" + f +
                       "' (expected alexandrov, identity or indiscrete)");
    }
  }
  if (cfg.theorems.empty()) throw UsageError("no theorem selected");
  for (const auto& t : cfg.theorems) {
    if (t != "all" && !contains(theorem_ids(), t)) {
      throw UsageError("unknown theorem '" + t + "'");
    }
  }
  if (cfg.format != "text" && cfg.format != "structured") {
    throw UsageError("unknown format '" + cfg.format + "' (expected text or structured)");
  }
}

std::vector<ObjectRef> load_objects(const std::string& path, bool ordered) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read object file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) +
                     ": malformed document");
  }
  if (!doc.is_object() || !doc.contains("objects") || !doc["objects"].is_array()) {
    throw UsageError(path + ": field 'objects' must be a list");
  }
  std::vector<ObjectRef> out;
  const auto& list = doc["objects"];
  for (std::size_t k = 0; k < list.size(); ++k) {
    try {
      auto obj = object_from_json(list[k], ordered);
      if (obj->ordered() != ordered) {
        throw CategoryError("an order is given but the context has plain sets");
      }
      out.push_back(obj);
    } catch (const CategoryError& e) {
      throw UsageError(path + ": objects[" + std::to_string(k) + "]: " + e.what());
    }
  }
  return out;
}

RunReport run(const RunConfig& cfg) {
  validate_config(cfg);
  auto ctx = builtin(cfg.context);
  if (!cfg.objects_path.empty()) ctx.add_objects(load_objects(cfg.objects_path, ctx.ordered()));
  const auto families = selected_families(cfg, ctx);

  RunReport report;
  report.config = cfg;
  report.config.families = families;
  auto timed = [&](auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v = fn();
    auto t1 = std::chrono::steady_clock::now();
    report.runs.push_back(CheckerRun{std::move(v), std::chrono::duration<double>(t1 - t0).count()});
  };
  const int b = cfg.bound;
  const int hb = heavy(cfg);
  for (const auto& id : selected_theorems(cfg)) {
    if (id == "validate") timed([&] { return check_validators(ctx, families, b); });
    if (id == "A") timed([&] { return check_sum_admissible(ctx, b); });
    if (id == "E") timed([&] { return check_factorization_of_sums(ctx, hb); });
    for (const auto& f : families) {
      if (id == "B") timed([&] { return check_sum_closed_embeddings(ctx, f, b); });
      if (id == "C") timed([&] { return check_cor_sum_closed_morphisms(ctx, f, b); });
      if (id == "D") timed([&] { return check_lemma_componentwise_closure(ctx, f, b); });
      if (id == "F") timed([&] { return check_pb_stability_closed_E_monos(ctx, f, b); });
      if (id == "G") timed([&] { return check_sum_proper(ctx, f, hb); });
      if (id == "H") timed([&] { return check_sum_separated(ctx, f, hb); });
      if (id == "adjunctions") timed([&] { return check_adjunctions(ctx, f, b); });
      if (id == "biproduct") timed([&] { return check_biproducts(ctx, f, b); });
    }
  }
  for (const auto& r : report.runs) {
    if (r.verdict.status == Status::refuted) report.passed = false;
  }
  return report;
}

json to_json(const RunReport& r) {
  const auto& c = r.config;
  json config{{"context", c.context},
              {"closures", c.families},
              {"bound", c.bound},
              {"heavy_bound", heavy(c)},
              {"theorems", c.theorems},
              {"objects", c.objects_path}};
  json verdicts = json::array();
  for (const auto& run : r.runs) {
    auto v = to_json(run.verdict);
    if (c.timings) v["seconds"] = run.seconds;
    verdicts.push_back(std::move(v));
  }
  return json{{"config", std::move(config)},
              {"verdicts", std::move(verdicts)},
              {"passed", r.passed}};
}

std::string to_text(const RunReport& r) {
  std::ostringstream os;
  const auto& c = r.config;
  os << "context " << c.context << ", bound " << c.bound << ", heavy bound " << heavy(c) << "\n";
  for (const auto& run : r.runs) {
    const auto& v = run.verdict;
    os << (v.status == Status::refuted ? "FAIL " : "ok   ") << v.theorem;
    if (!v.family.empty()) os << " [" << v.family << "]";
    os << " @" << v.bound << ": " << to_string(v.status);
    if (c.timings) os << " (" << run.seconds << " s)";
    os << "\n";
    if (!v.note.empty()) os << "     " << v.note << "\n";
    for (const auto& s : v.sides) {
      os << "     side  " << s.id << " = " << (s.value ? "true" : "false") << " ("
         << v.counts.at(s.id) << " instances)\n";
    }
    for (const auto& s : v.claims) {
      os << "     claim " << s.id << " = " << (s.value ? "true" : "false") << " ("
         << v.counts.at(s.id) << " instances)\n";
    }
    for (const auto& w : v.witnesses) {
      if (w.claimed) continue;
      os << "     counterexample to " << w.condition << ": " << w.text << "\n";
    }
  }
  os << (r.passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace extctx
