#pragma once

#include <utility>
#include <vector>

#include "extctx/factorization.hpp"
#include "extctx/limits.hpp"

namespace extctx {

/// p <= q iff p factors through q (exhaustive search for the mediating map).
bool factors_through(const Subobject& p, const Subobject& q);

/// Sub_M(X): all admissible subobjects of X up to iso, as canonical
/// inclusions in increasing mask order.
class SubobjectLattice {
 public:
  static SubobjectLattice enumerate(const FactorizationSystem& sys, const ObjectRef& x);

  const ObjectRef& ambient() const { return ambient_; }
  const std::vector<Subobject>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  /// Order by factorization search, memoized per pair.
  bool leq(std::size_t i, std::size_t j) const;
  bool is_distributive() const;

 private:
  ObjectRef ambient_;
  std::vector<Subobject> elements_;
  mutable std::vector<signed char> leq_cache_;
};

/// Throws CategoryError when the ambients differ.
Subobject meet(const Subobject& p, const Subobject& q);
/// The image of <p|q>, i.e. the union of the carriers.
Subobject join(const Subobject& p, const Subobject& q);
inline Subobject bottom(const ObjectRef& x) { return Subobject::bottom(x); }
inline Subobject top(const ObjectRef& x) { return Subobject::top(x); }

/// Preimages of p along both injections. Throws when p does not live in c.
std::pair<Subobject, Subobject> iota_map(const Coproduct& c, const Subobject& p);
/// Image of m along inl joined with image of n along inr.
Subobject sum_join(const Coproduct& c, const Subobject& m, const Subobject& n);
/// m + (bottom of Y), as a subobject of X + Y.
Subobject L_map(const Coproduct& c, const Subobject& m);
/// (bottom of X) + n, as a subobject of X + Y.
Subobject R_map(const Coproduct& c, const Subobject& n);

struct SubobjectSum {
  Morphism sum;                 // a + b : A + B -> X + Y
  Factorization factorization;  // (image(inl,a) v image(inr,b)) . e'
  bool admissible = false;      // a + b is iso to the join
};

/// a + b together with its E-M factorization through the join of the
/// injected subobjects.
SubobjectSum sum_subobjects(const FactorizationSystem& sys, const Subobject& a,
                            const Subobject& b);

/// (m, n) <= iota(p)  <=>  image(inl, m) v image(inr, n) <= p, for all triples.
Report check_adjunction_admissible(const FactorizationSystem& sys, const ObjectRef& x,
                                   const ObjectRef& y);

}  // namespace extctx
