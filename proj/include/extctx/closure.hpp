#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extctx/limits.hpp"
#include "extctx/report.hpp"
#include "extctx/subobject.hpp"

namespace extctx {

/// An object with a closure operator on its admissible subobjects. Both
/// built-in contexts admit every subset, so the operator acts on masks.
class Space {
 public:
  using Closure = std::function<Mask(Mask)>;

  /// `additive` promises cls(a v b) = cls a v cls b, which lets continuity
  /// and closedness checks look at singletons only.
  Space(ObjectRef object, Closure cls, bool additive, std::string family);

  const ObjectRef& object() const { return object_; }
  Mask closure(Mask m) const { return cls_(m); }
  bool additive() const { return additive_; }
  const std::string& family() const { return family_; }
  bool is_closed(Mask m) const { return cls_(m) == m; }

 private:
  ObjectRef object_;
  Closure cls_;
  bool additive_ = true;
  std::string family_;
};

/// A closure operator on every object of a context, given by one formula.
class ClosureAssignment {
 public:
  using Formula = std::function<Mask(const FiniteObject&, Mask)>;

  ClosureAssignment(std::string name, Formula formula, bool additive);

  const std::string& name() const { return name_; }
  Space on(const ObjectRef& x) const;

 private:
  std::string name_;
  Formula formula_;
  bool additive_ = true;
};

/// "alexandrov" (down-closure; discrete on unordered objects), "identity",
/// "indiscrete" (cls(0) = 0, otherwise top). Throws std::invalid_argument
/// for other names.
ClosureAssignment closure_family(std::string_view name);
const std::vector<std::string>& closure_family_names();

/// Extensive, monotone, idempotent and additive on every object, checked
/// over all subsets. Groundedness is reported but not required.
Report validate_closure(const ClosureAssignment& c, std::span<const ObjectRef> objects);
Report validate_space(const Space& s);

/// image(f, cls m) <= cls(image(f, m)) for every m. Throws CategoryError
/// when the endpoints do not match the spaces.
bool is_continuous(const Morphism& f, const Space& src, const Space& tgt);

/// A continuous morphism between spaces.
class SpaceMorphism {
 public:
  /// Throws CategoryError on endpoint mismatch or when f is not continuous.
  SpaceMorphism(Morphism f, Space source, Space target);

  const Morphism& map() const { return map_; }
  const Space& source() const { return source_; }
  const Space& target() const { return target_; }

 private:
  Morphism map_;
  Space source_;
  Space target_;
};

bool is_closed_subobject(const Space& s, Mask m);
/// All fixed points of the closure, in increasing mask order.
std::vector<Mask> closed_lattice(const Space& s);

/// image(f, cls p) = cls(image(f, p)) for every p.
bool is_closed_morphism(const SpaceMorphism& f);
/// The first p violating the closed-morphism equation, if any.
std::optional<Mask> closed_morphism_violation(const SpaceMorphism& f);
/// cls(image f) = top.
bool is_dense(const SpaceMorphism& f);

/// f = (closed embedding of cls(image f)) . (dense corestriction).
std::pair<SpaceMorphism, SpaceMorphism> dense_closed_factorize(const SpaceMorphism& f);

/// Subspace on the sub-carrier m: cls_M(u) = preimage of cls_X(image u).
Space subspace(const Space& s, Mask m);
/// The componentwise closure on the coproduct `c` of the two carriers.
Space sum_space(const Coproduct& c, const Space& s, const Space& t);

/// Test data for the bounded properness semi-decision: spaces built by
/// `family` on `test_objects` (the identity pullback is always included).
struct ProperBound {
  ClosureAssignment family;
  std::vector<ObjectRef> test_objects;
};

/// A failing test map w (possibly the identity) together with the
/// pullback leg that is not closed.
struct ProperWitness {
  Morphism w;
  Morphism leg;
};

/// Every pullback of f along a continuous w: (Z, family) -> target(f),
/// Z a test object, is a closed morphism. Pullback apexes carry the family
/// closure.
bool is_proper(const SpaceMorphism& f, const ProperBound& pb);
std::optional<ProperWitness> proper_violation(const SpaceMorphism& f, const ProperBound& pb);

/// The equalizer of the kernel-pair projections as a morphism of family
/// spaces.
SpaceMorphism separation_diagonal(const SpaceMorphism& f, const ClosureAssignment& family);
bool is_separated(const SpaceMorphism& f, const ProperBound& pb);

/// Terminal map proper / separated; the terminal space carries the family
/// closure.
bool is_compact(const Space& s, const ProperBound& pb);
bool is_hausdorff(const Space& s, const ProperBound& pb);

}  // namespace extctx
