#include "extctx/object.hpp"

#include <set>
#include <sstream>

namespace extctx {

FiniteObject::FiniteObject(std::string id, std::vector<std::string> labels,
                           bool ordered, std::vector<Mask> up)
    : id_(std::move(id)), labels_(std::move(labels)), ordered_(ordered),
      up_(std::move(up)), down_(labels_.size(), 0) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = 0; j < labels_.size(); ++j) {
      if (has(up_[i], j)) down_[j] |= bit(i);
    }
  }
}

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.size() > kMaxCarrier) {
    throw CategoryError("carrier exceeds " + std::to_string(kMaxCarrier) +
                        " elements");
  }
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw CategoryError("duplicate element label '" + l + "'");
    }
  }
}

}  // namespace

ObjectRef FiniteObject::make_set(std::string id, std::vector<std::string> labels) {
  check_labels(labels);
  std::vector<Mask> up(labels.size());
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = bit(i);
  return ObjectRef(new FiniteObject(std::move(id), std::move(labels), false,
                                    std::move(up)));
}

ObjectRef FiniteObject::make_preorder(std::string id,
                                      std::vector<std::string> labels,
                                      const OrderPairs& order) {
  check_labels(labels);
  std::vector<Mask> up(labels.size());
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = bit(i);
  auto find = [&](const std::string& l) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == l) return i;
    }
    throw CategoryError("order pair mentions unknown element '" + l + "'");
  };
  for (const auto& [x, y] : order) up[find(x)] |= bit(find(y));
  return make_preorder(std::move(id), std::move(labels), std::move(up));
}

ObjectRef FiniteObject::make_preorder(std::string id,
                                      std::vector<std::string> labels,
                                      std::vector<Mask> up) {
  check_labels(labels);
  const std::size_t n = labels.size();
  if (up.size() != n) throw CategoryError("order table size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if ((up[i] & ~full_mask(n)) != 0) {
      throw CategoryError("order table mentions elements outside the carrier");
    }
    if (!has(up[i], i)) {
      throw CategoryError("order is not reflexive at '" + labels[i] + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!has(up[i], j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (has(up[j], k) && !has(up[i], k)) {
          throw CategoryError("order is not transitive: missing pair (" +
                              labels[i] + ", " + labels[k] + ") from (" +
                              labels[i] + ", " + labels[j] + ") and (" +
                              labels[j] + ", " + labels[k] + ")");
        }
      }
    }
  }
  return ObjectRef(
      new FiniteObject(std::move(id), std::move(labels), true, std::move(up)));
}

std::optional<std::size_t> FiniteObject::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

Mask FiniteObject::down_closure(Mask m) const {
  Mask out = 0;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1U) out |= down_[i];
  }
  return out;
}

FiniteObject::OrderPairs FiniteObject::strict_pairs() const {
  OrderPairs out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (i != j && leq(i, j)) out.emplace_back(labels_[i], labels_[j]);
    }
  }
  return out;
}

bool FiniteObject::same_structure(const FiniteObject& other) const {
  return ordered_ == other.ordered_ && labels_ == other.labels_ &&
         up_ == other.up_;
}

ObjectRef FiniteObject::restrict_to(Mask m) const {
  std::vector<std::size_t> keep;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size(); ++i) {
    if (has(m, i)) {
      keep.push_back(i);
      labels.push_back(labels_[i]);
    }
  }
  std::string id = id_ + "|" + mask_to_string(*this, m);
  std::vector<Mask> up(keep.size(), 0);
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (leq(keep[a], keep[b])) up[a] |= bit(b);
    }
  }
  return ObjectRef(
      new FiniteObject(std::move(id), std::move(labels), ordered_, std::move(up)));
}

std::string FiniteObject::describe() const {
  std::ostringstream os;
  os << id_ << " = {";
  for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << labels_[i];
  os << "}";
  if (ordered_) {
    auto pairs = strict_pairs();
    if (!pairs.empty()) {
      os << " with";
      for (const auto& [x, y] : pairs) os << " " << x << "<=" << y;
    }
  }
  return os.str();
}

std::string mask_to_string(const FiniteObject& x, Mask m) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!has(m, i)) continue;
    if (!first) out += ",";
    out += x.label(i);
    first = false;
  }
  return out + "}";
}

}  // namespace extctx
