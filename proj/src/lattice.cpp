#include "extctx/lattice.hpp"

#include "extctx/serialize.hpp"

namespace extctx {

using nlohmann::json;

namespace {

void same_ambient(const Subobject& p, const Subobject& q) {
  if (!same_object(p.ambient, q.ambient)) {
    throw CategoryError("subobjects of different objects: " + p.describe() + " vs " +
                        q.describe());
  }
}

std::size_t rank_in(Mask m, std::size_t t) {
  return static_cast<std::size_t>(__builtin_popcountll(m & (bit(t) - 1)));
}

}  // namespace

bool factors_through(const Subobject& p, const Subobject& q) {
  same_ambient(p, q);
  auto pr = p.rep();
  auto qr = q.rep();
  MapConstraints c;
  c.allowed.resize(pr.source()->size());
  for (std::size_t i = 0; i < c.allowed.size(); ++i) {
    c.allowed[i] = qr.preimage_of(bit(pr(i)));
  }
  bool found = false;
  visit_morphisms(
      pr.source(), qr.source(),
      [&](const Morphism& d) {
        found = compose(qr, d) == pr;
        return !found;
      },
      c);
  return found;
}

SubobjectLattice SubobjectLattice::enumerate(const FactorizationSystem& sys,
                                             const ObjectRef& x) {
  if (x->size() > 20) throw CategoryError("subobject lattice of " + x->id() + " is too large");
  SubobjectLattice l;
  l.ambient_ = x;
  const Mask end = Mask{1} << x->size();
  for (Mask m = 0; m < end; ++m) {
    Subobject s{x, m};
    if (sys.in_m(s.rep())) l.elements_.push_back(s);
  }
  l.leq_cache_.assign(l.elements_.size() * l.elements_.size(), -1);
  return l;
}

bool SubobjectLattice::leq(std::size_t i, std::size_t j) const {
  auto& slot = leq_cache_[i * elements_.size() + j];
  if (slot < 0) slot = factors_through(elements_[i], elements_[j]) ? 1 : 0;
  return slot == 1;
}

bool SubobjectLattice::is_distributive() const {
  const std::size_t n = size();
  // Least upper / greatest lower bounds by search over the order.
  auto bound = [&](std::size_t a, std::size_t b, bool upper) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < n; ++c) {
      bool is_bound = upper ? (leq(a, c) && leq(b, c)) : (leq(c, a) && leq(c, b));
      if (!is_bound) continue;
      if (!best || (upper ? leq(c, *best) : leq(*best, c))) best = c;
    }
    if (best) {
      for (std::size_t c = 0; c < n; ++c) {
        bool is_bound = upper ? (leq(a, c) && leq(b, c)) : (leq(c, a) && leq(c, b));
        if (is_bound && !(upper ? leq(*best, c) : leq(c, *best))) return std::nullopt;
      }
    }
    return best;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        auto bc = bound(b, c, true);
        auto ab = bound(a, b, false);
        auto ac = bound(a, c, false);
        if (!bc || !ab || !ac) return false;
        auto lhs = bound(a, *bc, false);
        auto rhs = bound(*ab, *ac, true);
        if (!lhs || !rhs || *lhs != *rhs) return false;
      }
    }
  }
  return true;
}

Subobject meet(const Subobject& p, const Subobject& q) {
  same_ambient(p, q);
  return Subobject{p.ambient, p.bits & q.bits};
}

Subobject join(const Subobject& p, const Subobject& q) {
  same_ambient(p, q);
  return Subobject{p.ambient, p.bits | q.bits};
}

std::pair<Subobject, Subobject> iota_map(const Coproduct& c, const Subobject& p) {
  if (!same_object(p.ambient, c.object)) {
    throw CategoryError("iota_map: " + p.describe() + " is not a subobject of " +
                        c.object->id());
  }
  return {Subobject{c.left(), c.inl.preimage_of(p.bits)},
          Subobject{c.right(), c.inr.preimage_of(p.bits)}};
}

Subobject sum_join(const Coproduct& c, const Subobject& m, const Subobject& n) {
  if (!same_object(m.ambient, c.left()) || !same_object(n.ambient, c.right())) {
    throw CategoryError("sum_join: subobjects do not match the coproduct summands");
  }
  return Subobject{c.object, c.inl.image_of(m.bits) | c.inr.image_of(n.bits)};
}

Subobject L_map(const Coproduct& c, const Subobject& m) {
  return sum_join(c, m, Subobject::bottom(c.right()));
}

Subobject R_map(const Coproduct& c, const Subobject& n) {
  return sum_join(c, Subobject::bottom(c.left()), n);
}

SubobjectSum sum_subobjects(const FactorizationSystem& sys, const Subobject& a,
                            const Subobject& b) {
  auto src = coproduct(a.domain(), b.domain());
  auto tgt = coproduct(a.ambient, b.ambient);
  auto sum = sum_morphisms(src, tgt, a.rep(), b.rep());
  auto joined = join(image(sys, tgt.inl, a), image(sys, tgt.inr, b));
  auto m = joined.rep();
  Morphism::Table e(src.object->size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = rank_in(joined.bits, sum(k));
  auto e_part = Morphism::make(src.object, m.source(), std::move(e));
  const bool admissible = is_iso(e_part) && sys.in_m(m);
  return SubobjectSum{sum, Factorization{e_part, m}, admissible};
}

Report check_adjunction_admissible(const FactorizationSystem& sys, const ObjectRef& x,
                                   const ObjectRef& y) {
  Report r{"adjunction " + x->id() + "," + y->id(), {}};
  auto& entry = r.add("join-image-left-adjoint-to-iota");
  auto c = coproduct(x, y);
  auto lx = SubobjectLattice::enumerate(sys, x);
  auto ly = SubobjectLattice::enumerate(sys, y);
  auto lxy = SubobjectLattice::enumerate(sys, c.object);
  auto sub = [](Mask a, Mask b) { return (a & ~b) == 0; };
  for (const auto& m : lx.elements()) {
    for (const auto& n : ly.elements()) {
      const auto j = sum_join(c, m, n);
      for (const auto& p : lxy.elements()) {
        ++entry.instances;
        auto [px, py] = iota_map(c, p);
        const bool lhs = sub(m.bits, px.bits) && sub(n.bits, py.bits);
        const bool rhs = sub(j.bits, p.bits);
        if (lhs != rhs) {
          fail(entry,
               "m=" + m.describe() + " n=" + n.describe() + " p=" + p.describe(),
               json{{"m", subset_json(*x, m.bits)},
                    {"n", subset_json(*y, n.bits)},
                    {"p", subset_json(*c.object, p.bits)}});
        }
      }
    }
  }
  return r;
}

}  // namespace extctx
