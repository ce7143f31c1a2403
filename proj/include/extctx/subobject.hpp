#pragma once

#include "extctx/morphism.hpp"

namespace extctx {

/// An admissible subobject, held by its canonical representative: the
/// inclusion of a sub-carrier (in ambient carrier order, with the restricted
/// order). Equality is carrier equality.
struct Subobject {
  ObjectRef ambient;
  Mask bits = 0;

  static Subobject bottom(ObjectRef x) { return Subobject{std::move(x), 0}; }
  static Subobject top(ObjectRef x) {
    Mask all = x->all();
    return Subobject{std::move(x), all};
  }

  ObjectRef domain() const { return ambient->restrict_to(bits); }
  /// The canonical inclusion domain() -> ambient.
  Morphism rep() const;
  std::size_t size() const;
  std::string describe() const;

  friend bool operator==(const Subobject& a, const Subobject& b) {
    return a.bits == b.bits && same_object(a.ambient, b.ambient);
  }
};

/// Subobject of target(f) given by the image of an injective morphism.
Subobject subobject_of(const Morphism& injective);

}  // namespace extctx
