#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace extctx {

/// Subsets of a carrier are bitmasks over element indices.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxCarrier = 64;

/// Raised for malformed objects/morphisms and mismatched endpoints.
class CategoryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
inline constexpr Mask full_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}
inline bool has(Mask m, std::size_t i) { return (m >> i) & 1U; }

class FiniteObject;
using ObjectRef = std::shared_ptr<const FiniteObject>;

/// A finite carrier of labelled elements, optionally carrying a preorder.
///
/// Unordered objects live in the set-flavoured context, ordered ones in the
/// preorder-flavoured context. `x <= y` is stored as the up-set of x and the
/// down-set of y; both always contain the element itself.
class FiniteObject {
 public:
  using OrderPairs = std::vector<std::pair<std::string, std::string>>;

  static ObjectRef make_set(std::string id, std::vector<std::string> labels);

  /// Reflexive pairs are implied. Throws CategoryError naming the first
  /// missing pair when the relation is not transitive.
  static ObjectRef make_preorder(std::string id, std::vector<std::string> labels,
                                 const OrderPairs& order);

  /// `up[i]` must hold every j with i <= j; validated.
  static ObjectRef make_preorder(std::string id, std::vector<std::string> labels,
                                 std::vector<Mask> up);

  const std::string& id() const { return id_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  bool ordered() const { return ordered_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  Mask all() const { return full_mask(size()); }
  bool leq(std::size_t i, std::size_t j) const { return has(up_[i], j); }
  Mask up(std::size_t i) const { return up_[i]; }
  Mask down(std::size_t i) const { return down_[i]; }
  Mask down_closure(Mask m) const;
  bool is_down_set(Mask m) const { return down_closure(m) == m; }

  /// Strict pairs (x, y) with x <= y and x != y, in index order.
  OrderPairs strict_pairs() const;

  /// Same labels in the same order and the same relation; ids are ignored.
  bool same_structure(const FiniteObject& other) const;

  /// Sub-carrier selected by `m`, in carrier order, with the restricted order.
  ObjectRef restrict_to(Mask m) const;

  std::string describe() const;

 private:
  FiniteObject(std::string id, std::vector<std::string> labels, bool ordered,
               std::vector<Mask> up);

  std::string id_;
  std::vector<std::string> labels_;
  bool ordered_ = false;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

/// Structural equality through handles (pointer equality short-circuits).
inline bool same_object(const ObjectRef& a, const ObjectRef& b) {
  return a == b || (a && b && a->same_structure(*b));
}

std::string mask_to_string(const FiniteObject& x, Mask m);

}  // namespace extctx
