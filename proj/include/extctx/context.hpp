#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "extctx/closure.hpp"
#include "extctx/factorization.hpp"
#include "extctx/limits.hpp"

namespace extctx {

/// Representatives of every object with at most `max_size` elements, one
/// per isomorphism class. Sets are "S0".."Sn"; preorders are "Pn.k" with
/// k ranking the lexicographically largest row-major off-diagonal relation
/// code among relabelings (so "P2.1" is the Sierpinski space a <= b).
/// Labels are "a", "b", ... Supported up to size 5.
std::vector<ObjectRef> canonical_objects(bool ordered, int max_size);

/// A concrete category with a factorization system and closure families.
class Context {
 public:
  using CoproductFn = std::function<Coproduct(const ObjectRef&, const ObjectRef&)>;

  Context(std::string name, bool ordered, FactorizationSystem system,
          std::vector<std::string> families, CoproductFn coproduct_fn = {});

  const std::string& name() const { return name_; }
  bool ordered() const { return ordered_; }
  const FactorizationSystem& system() const { return system_; }
  const std::vector<std::string>& families() const { return families_; }
  /// Throws std::invalid_argument when `name` is not registered here.
  ClosureAssignment family(std::string_view name) const;

  Coproduct coproduct(const ObjectRef& x, const ObjectRef& y) const;

  /// Every object up to iso with at most `bound` elements. Loaded objects
  /// stand in for the canonical representative of their class.
  std::vector<ObjectRef> objects(int bound) const;
  /// Throws CategoryError on a flavour mismatch.
  void add_objects(const std::vector<ObjectRef>& objs);

  std::vector<Morphism> morphisms(const ObjectRef& x, const ObjectRef& y) const {
    return all_morphisms(x, y);
  }

  /// Family spaces on all objects up to `bound`, for properness tests.
  ProperBound proper_bound(std::string_view family, int bound) const;

 private:
  std::string name_;
  bool ordered_ = false;
  FactorizationSystem system_;
  std::vector<std::string> families_;
  CoproductFn coproduct_fn_;
  std::vector<ObjectRef> loaded_;
};

/// "finset" or "finpre"; throws std::invalid_argument otherwise.
Context builtin(std::string_view name);
const std::vector<std::string>& builtin_names();

/// Self-test contexts that must fail specific checks.
/// Finite sets with E = injections and M = surjections.
Context swapped_classes_context();
/// Finite preorders with E = surjections and M = split monomorphisms.
Context split_mono_context();
/// Finite preorders whose coproducts add every pair L:x <= R:y.
Context ordinal_sum_context();

/// Split monomorphism: injective with a retraction.
bool is_split_mono(const Morphism& f);

/// Extensivity at `bound`: coproducts pullback-stable and disjoint, strict
/// initial object, injections in M, 0 -> 1 in M, (1+1) x X = X + X, zero
/// reflection, injections recovered by pulling back along 1+1, and the
/// universal properties of coproducts and pullbacks (test objects up to
/// min(bound, 2)).
Report validate_extensive(const Context& ctx, int bound);

}  // namespace extctx
