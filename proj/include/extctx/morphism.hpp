#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extctx/object.hpp"

namespace extctx {

/// A total map between carriers, monotone whenever both ends are ordered.
class Morphism {
 public:
  using Table = std::vector<std::size_t>;

  /// Throws CategoryError on a partial/out-of-range table, a flavour
  /// mismatch, or a non-monotone map between ordered objects.
  static Morphism make(ObjectRef source, ObjectRef target, Table table);
  static std::optional<Morphism> try_make(ObjectRef source, ObjectRef target,
                                          Table table);
  /// Same as make() but looks elements up by label.
  static Morphism from_labels(ObjectRef source, ObjectRef target,
                              const std::vector<std::string>& images);
  static Morphism identity(ObjectRef x);

  const ObjectRef& source() const { return source_; }
  const ObjectRef& target() const { return target_; }
  const Table& table() const { return table_; }
  std::size_t operator()(std::size_t i) const { return table_[i]; }

  Mask image_of(Mask m) const;
  Mask preimage_of(Mask n) const;
  Mask image() const { return image_of(source_->all()); }

  bool injective() const;
  bool surjective() const;
  /// Injective and order-reflecting.
  bool embedding() const;

  std::string describe() const;

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.table_ == b.table_ && same_object(a.source_, b.source_) &&
           same_object(a.target_, b.target_);
  }

 private:
  Morphism(ObjectRef s, ObjectRef t, Table table)
      : source_(std::move(s)), target_(std::move(t)), table_(std::move(table)) {}
  static std::optional<std::string> defect(const FiniteObject& s,
                                           const FiniteObject& t,
                                           const Table& table);

  ObjectRef source_;
  ObjectRef target_;
  Table table_;
};

/// g after f. Throws CategoryError when target(f) != source(g).
Morphism compose(const Morphism& g, const Morphism& f);

bool is_mono(const Morphism& f);
bool is_epi(const Morphism& f);
bool is_iso(const Morphism& f);

/// Restrictions for morphism enumeration. `allowed[i]` limits the image of
/// source element i (empty vector: unrestricted).
struct MapConstraints {
  std::vector<Mask> allowed;
  bool injective = false;
};

/// Visits every morphism X -> Y in lexicographic order of map tables. The
/// visitor returns false to stop early; the function returns false iff it
/// was stopped.
bool visit_morphisms(const ObjectRef& x, const ObjectRef& y,
                     const std::function<bool(const Morphism&)>& visit,
                     const MapConstraints& constraints = {});

std::vector<Morphism> all_morphisms(const ObjectRef& x, const ObjectRef& y,
                                    const MapConstraints& constraints = {});

}  // namespace extctx
