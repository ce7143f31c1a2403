#include "extctx/serialize.hpp"

#include "extctx/report.hpp"

namespace extctx {

using nlohmann::json;

json to_json(const FiniteObject& x) {
  json j;
  j["id"] = x.id();
  j["carrier"] = x.labels();
  if (x.ordered()) {
    json pairs = json::array();
    for (const auto& [a, b] : x.strict_pairs()) pairs.push_back({a, b});
    j["order"] = std::move(pairs);
  }
  return j;
}

json to_json(const Morphism& f) {
  json images = json::array();
  for (auto t : f.table()) images.push_back(f.target()->label(t));
  return json{{"source", to_json(*f.source())},
              {"target", to_json(*f.target())},
              {"map", std::move(images)}};
}

json subset_json(const FiniteObject& x, Mask m) {
  json out = json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (has(m, i)) out.push_back(x.label(i));
  }
  return out;
}

ObjectRef object_from_json(const json& j, bool ordered) {
  if (!j.is_object()) throw CategoryError("object description must be a mapping");
  std::string id = j.value("id", std::string("obj"));
  if (!j.contains("carrier") || !j["carrier"].is_array()) {
    throw CategoryError("object '" + id + "': field 'carrier' must be a list of strings");
  }
  std::vector<std::string> labels;
  for (const auto& l : j["carrier"]) {
    if (!l.is_string()) {
      throw CategoryError("object '" + id + "': carrier entries must be strings");
    }
    labels.push_back(l.get<std::string>());
  }
  if (j.contains("order")) {
    const auto& order = j["order"];
    if (!order.is_array()) {
      throw CategoryError("object '" + id + "': field 'order' must be a list of pairs");
    }
    FiniteObject::OrderPairs pairs;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto& p = order[k];
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        throw CategoryError("object '" + id + "': order[" + std::to_string(k) +
                            "] must be a pair of strings");
      }
      pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    return FiniteObject::make_preorder(std::move(id), std::move(labels), pairs);
  }
  if (ordered) return FiniteObject::make_preorder(std::move(id), std::move(labels), FiniteObject::OrderPairs{});
  return FiniteObject::make_set(std::move(id), std::move(labels));
}

Morphism morphism_from_json(const json& j) {
  bool ordered = j.at("source").contains("order") || j.at("target").contains("order");
  auto s = object_from_json(j.at("source"), ordered);
  auto t = object_from_json(j.at("target"), ordered);
  return Morphism::from_labels(s, t, j.at("map").get<std::vector<std::string>>());
}

Mask subset_from_json(const FiniteObject& x, const json& j) {
  Mask m = 0;
  for (const auto& l : j) {
    auto idx = x.index_of(l.get<std::string>());
    if (!idx) throw CategoryError("'" + l.get<std::string>() + "' is not in " + x.id());
    m |= bit(*idx);
  }
  return m;
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"id", c.id}, {"passed", c.passed}, {"instances", c.instances}};
    if (!c.passed) {
      e["witness"] = c.witness;
      if (!c.witness_data.is_null()) e["witness_data"] = c.witness_data;
    }
    checks.push_back(std::move(e));
  }
  return json{{"name", r.name}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

}  // namespace extctx
