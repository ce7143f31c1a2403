#pragma once

#include <optional>
#include <span>

#include "extctx/morphism.hpp"

namespace extctx {

/// X + Y with injections. Carriers are tagged "L:x" / "R:y" so the
/// injections are literal inclusions.
struct Coproduct {
  ObjectRef object;
  Morphism inl;
  Morphism inr;

  const ObjectRef& left() const { return inl.source(); }
  const ObjectRef& right() const { return inr.source(); }
  /// Elements of the left / right summand inside the coproduct.
  Mask left_part() const { return inl.image(); }
  Mask right_part() const { return inr.image(); }
};

/// Apex of a span with its two legs. For pullback(f, g) the apex elements
/// are pairs (a, b) with f(a) = g(b), in lexicographic index order; `first`
/// goes to source(f) and `second` to source(g).
struct Cone {
  ObjectRef apex;
  Morphism first;
  Morphism second;
};

ObjectRef initial_object(bool ordered);
ObjectRef terminal_object(bool ordered);
Morphism initial_map(const ObjectRef& x);
Morphism terminal_map(const ObjectRef& x);

Coproduct coproduct(const ObjectRef& x, const ObjectRef& y);

/// Throws CategoryError unless f and g share a target.
Cone pullback(const Morphism& f, const Morphism& g);
Cone product(const ObjectRef& x, const ObjectRef& y);
Cone kernel_pair(const Morphism& f);
/// The inclusion of {x : f(x) = g(x)}. Throws unless f, g are parallel.
Morphism equalizer(const Morphism& f, const Morphism& g);

/// <f|g> out of the standard coproduct. Throws on target mismatch.
Morphism copair(const Morphism& f, const Morphism& g);
/// <f|g> out of a given coproduct object; nullopt when the resulting table
/// is not a morphism (possible only for non-standard coproduct objects).
std::optional<Morphism> copair(const Coproduct& c, const Morphism& f,
                               const Morphism& g);

/// f + g = <inl . f | inr . g> between standard coproducts.
Morphism sum_morphisms(const Morphism& f, const Morphism& g);
/// As above, with both coproducts supplied (their summands must match).
Morphism sum_morphisms(const Coproduct& source, const Coproduct& target,
                       const Morphism& f, const Morphism& g);

/// The codiagonal <id|id> : X + X -> X.
Morphism fold(const Coproduct& xx);

/// Exhaustive bijection search with order check.
std::optional<Morphism> find_isomorphism(const ObjectRef& x, const ObjectRef& y);
inline bool is_isomorphic(const ObjectRef& x, const ObjectRef& y) {
  return find_isomorphism(x, y).has_value();
}

/// Copairing universal property of `c`, checked by exhaustive search: for
/// every f: X -> Z, g: Y -> Z (Z in `tests`) exactly one h: X+Y -> Z with
/// h.inl = f, h.inr = g.
bool coproduct_is_universal(const Coproduct& c, std::span<const ObjectRef> tests);

/// Pullback universal property of `cone` over the cospan (f, g): every
/// commuting cone from an object in `tests` has a unique mediating map.
bool pullback_is_universal(const Cone& cone, const Morphism& f, const Morphism& g,
                           std::span<const ObjectRef> tests);

}  // namespace extctx
