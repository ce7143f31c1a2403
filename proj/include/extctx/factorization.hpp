#pragma once

#include <functional>
#include <span>
#include <string>

#include "extctx/report.hpp"
#include "extctx/subobject.hpp"

namespace extctx {

/// f = m_part . e_part with e_part in E and m_part in M.
struct Factorization {
  Morphism e_part;
  Morphism m_part;

  const ObjectRef& mid() const { return e_part.target(); }
};

/// A proper (E, M) factorization system on a concrete category.
struct FactorizationSystem {
  std::string name;
  std::function<bool(const Morphism&)> in_e;
  std::function<bool(const Morphism&)> in_m;
  std::function<Factorization(const Morphism&)> factorize;
};

/// f = (image inclusion) . (corestriction onto the image), the image
/// carrying the structure induced from target(f).
Factorization image_factorization(const Morphism& f);

/// (surjections, injections) on sets; (surjections, embeddings) on preorders.
FactorizationSystem surjection_injection_system();
FactorizationSystem surjection_embedding_system();

inline Factorization factorize(const FactorizationSystem& sys, const Morphism& f) {
  return sys.factorize(f);
}

/// e is orthogonal to m: every commuting square v.e = m.u has exactly one
/// diagonal w with m.w = v and w.e = u. Exhaustive over all u, v, w.
bool down_arrow(const Morphism& e, const Morphism& m);

/// Subobject of target(f): the M-part of f . m. Throws CategoryError when
/// m is not admissible or not a subobject of source(f).
Subobject image(const FactorizationSystem& sys, const Morphism& f, const Subobject& m);
/// Subobject of source(f): pullback of n along f.
Subobject preimage(const FactorizationSystem& sys, const Morphism& f, const Subobject& n);
/// The E-part of f . m, from the domain of m onto the domain of image(f, m).
Morphism restriction(const FactorizationSystem& sys, const Morphism& f, const Subobject& m);
/// The pullback leg from the domain of preimage(f, n) to the domain of n.
Morphism corestriction(const FactorizationSystem& sys, const Morphism& f, const Subobject& n);

/// True iff f1 and f2 factor the same morphism and some iso between the
/// middle objects makes both triangles commute.
bool same_factorization_up_to_iso(const Factorization& f1, const Factorization& f2);

/// Checks properness (E epi, M mono), E cap M = iso, isos in both classes,
/// closure under composition, factorization correctness, pullback stability
/// of M, E = M-up and M = E-down over all morphisms among `objects`.
Report validate_system(const FactorizationSystem& sys, std::span<const ObjectRef> objects);

}  // namespace extctx
