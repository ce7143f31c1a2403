#include "extctx/limits.hpp"

namespace extctx {

namespace {

void require_same_flavour(const ObjectRef& x, const ObjectRef& y) {
  if (x->ordered() != y->ordered()) {
    throw CategoryError("objects " + x->id() + " and " + y->id() +
                        " differ in flavour");
  }
}

ObjectRef make_like(bool ordered, std::string id, std::vector<std::string> labels,
                    std::vector<Mask> up) {
  if (ordered) return FiniteObject::make_preorder(std::move(id), std::move(labels), std::move(up));
  return FiniteObject::make_set(std::move(id), std::move(labels));
}

}  // namespace

ObjectRef initial_object(bool ordered) {
  return make_like(ordered, "0", {}, {});
}

ObjectRef terminal_object(bool ordered) {
  return make_like(ordered, "1", {"*"}, {bit(0)});
}

Morphism initial_map(const ObjectRef& x) {
  return Morphism::make(initial_object(x->ordered()), x, {});
}

Morphism terminal_map(const ObjectRef& x) {
  return Morphism::make(x, terminal_object(x->ordered()),
                        Morphism::Table(x->size(), 0));
}

Coproduct coproduct(const ObjectRef& x, const ObjectRef& y) {
  require_same_flavour(x, y);
  const std::size_t nx = x->size();
  const std::size_t n = nx + y->size();
  if (n > kMaxCarrier) throw CategoryError("coproduct carrier too large");
  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<Mask> up(n, 0);
  for (std::size_t i = 0; i < nx; ++i) {
    labels.push_back("L:" + x->label(i));
    up[i] = x->up(i);
  }
  for (std::size_t j = 0; j < y->size(); ++j) {
    labels.push_back("R:" + y->label(j));
    up[nx + j] = y->up(j) << nx;
  }
  auto obj = make_like(x->ordered(), "(" + x->id() + "+" + y->id() + ")",
                       std::move(labels), std::move(up));
  Morphism::Table l(nx), r(y->size());
  for (std::size_t i = 0; i < nx; ++i) l[i] = i;
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = nx + j;
  return Coproduct{obj, Morphism::make(x, obj, std::move(l)),
                   Morphism::make(y, obj, std::move(r))};
}

namespace {

Cone pair_cone(const ObjectRef& a, const ObjectRef& b, std::string id,
               const std::function<bool(std::size_t, std::size_t)>& keep) {
  require_same_flavour(a, b);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < a->size(); ++i) {
    for (std::size_t j = 0; j < b->size(); ++j) {
      if (keep(i, j)) pairs.emplace_back(i, j);
    }
  }
  if (pairs.size() > kMaxCarrier) throw CategoryError("limit carrier too large");
  std::vector<std::string> labels;
  labels.reserve(pairs.size());
  std::vector<Mask> up(pairs.size(), 0);
  Morphism::Table p1(pairs.size()), p2(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    labels.push_back("(" + a->label(i) + "," + b->label(j) + ")");
    p1[k] = i;
    p2[k] = j;
    for (std::size_t l = 0; l < pairs.size(); ++l) {
      if (a->leq(i, pairs[l].first) && b->leq(j, pairs[l].second)) up[k] |= bit(l);
    }
  }
  auto apex = make_like(a->ordered(), std::move(id), std::move(labels), std::move(up));
  return Cone{apex, Morphism::make(apex, a, std::move(p1)),
              Morphism::make(apex, b, std::move(p2))};
}

}  // namespace

Cone pullback(const Morphism& f, const Morphism& g) {
  if (!same_object(f.target(), g.target())) {
    throw CategoryError("pullback needs a cospan: " + f.describe() + " vs " +
                        g.describe());
  }
  return pair_cone(f.source(), g.source(),
                   "(" + f.source()->id() + " x_" + f.target()->id() + " " +
                       g.source()->id() + ")",
                   [&](std::size_t i, std::size_t j) { return f(i) == g(j); });
}

Cone product(const ObjectRef& x, const ObjectRef& y) {
  return pair_cone(x, y, "(" + x->id() + " x " + y->id() + ")",
                   [](std::size_t, std::size_t) { return true; });
}

Cone kernel_pair(const Morphism& f) { return pullback(f, f); }

Morphism equalizer(const Morphism& f, const Morphism& g) {
  if (!same_object(f.source(), g.source()) || !same_object(f.target(), g.target())) {
    throw CategoryError("equalizer needs a parallel pair");
  }
  Mask m = 0;
  for (std::size_t i = 0; i < f.source()->size(); ++i) {
    if (f(i) == g(i)) m |= bit(i);
  }
  auto sub = f.source()->restrict_to(m);
  Morphism::Table incl;
  for (std::size_t i = 0; i < f.source()->size(); ++i) {
    if (has(m, i)) incl.push_back(i);
  }
  return Morphism::make(sub, f.source(), std::move(incl));
}

std::optional<Morphism> copair(const Coproduct& c, const Morphism& f,
                               const Morphism& g) {
  if (!same_object(f.target(), g.target())) {
    throw CategoryError("copair needs a common target");
  }
  if (!same_object(f.source(), c.left()) || !same_object(g.source(), c.right())) {
    throw CategoryError("copair summands do not match the coproduct");
  }
  Morphism::Table table(c.object->size());
  for (std::size_t i = 0; i < f.source()->size(); ++i) table[c.inl(i)] = f(i);
  for (std::size_t j = 0; j < g.source()->size(); ++j) table[c.inr(j)] = g(j);
  return Morphism::try_make(c.object, f.target(), std::move(table));
}

Morphism copair(const Morphism& f, const Morphism& g) {
  auto c = coproduct(f.source(), g.source());
  auto h = copair(c, f, g);
  if (!h) throw CategoryError("copairing failed on a standard coproduct");
  return *h;
}

Morphism sum_morphisms(const Coproduct& source, const Coproduct& target,
                       const Morphism& f, const Morphism& g) {
  if (!same_object(source.left(), f.source()) ||
      !same_object(source.right(), g.source()) ||
      !same_object(target.left(), f.target()) ||
      !same_object(target.right(), g.target())) {
    throw CategoryError("sum_morphisms: coproducts do not match the summands");
  }
  Morphism::Table table(source.object->size());
  for (std::size_t i = 0; i < f.source()->size(); ++i) {
    table[source.inl(i)] = target.inl(f(i));
  }
  for (std::size_t j = 0; j < g.source()->size(); ++j) {
    table[source.inr(j)] = target.inr(g(j));
  }
  return Morphism::make(source.object, target.object, std::move(table));
}

Morphism sum_morphisms(const Morphism& f, const Morphism& g) {
  return sum_morphisms(coproduct(f.source(), g.source()),
                       coproduct(f.target(), g.target()), f, g);
}

Morphism fold(const Coproduct& xx) {
  if (!same_object(xx.left(), xx.right())) {
    throw CategoryError("fold needs a coproduct X + X");
  }
  auto id = Morphism::identity(xx.left());
  auto h = copair(xx, id, id);
  if (!h) throw CategoryError("fold is not a morphism out of this coproduct");
  return *h;
}

std::optional<Morphism> find_isomorphism(const ObjectRef& x, const ObjectRef& y) {
  if (x->size() != y->size() || x->ordered() != y->ordered()) return std::nullopt;
  std::optional<Morphism> found;
  visit_morphisms(
      x, y,
      [&](const Morphism& f) {
        if (is_iso(f)) {
          found = f;
          return false;
        }
        return true;
      },
      MapConstraints{{}, true});
  return found;
}

bool coproduct_is_universal(const Coproduct& c, std::span<const ObjectRef> tests) {
  for (const auto& z : tests) {
    if (z->ordered() != c.object->ordered()) continue;
    auto fs = all_morphisms(c.left(), z);
    auto gs = all_morphisms(c.right(), z);
    for (const auto& f : fs) {
      for (const auto& g : gs) {
        MapConstraints mc;
        mc.allowed.assign(c.object->size(), 0);
        for (std::size_t i = 0; i < f.source()->size(); ++i) mc.allowed[c.inl(i)] |= bit(f(i));
        for (std::size_t j = 0; j < g.source()->size(); ++j) mc.allowed[c.inr(j)] |= bit(g(j));
        int count = 0;
        visit_morphisms(
            c.object, z,
            [&](const Morphism& h) {
              if (compose(h, c.inl) == f && compose(h, c.inr) == g) ++count;
              return count < 2;
            },
            mc);
        if (count != 1) return false;
      }
    }
  }
  return true;
}

bool pullback_is_universal(const Cone& cone, const Morphism& f, const Morphism& g,
                           std::span<const ObjectRef> tests) {
  if (!(compose(f, cone.first) == compose(g, cone.second))) return false;
  for (const auto& q : tests) {
    if (q->ordered() != cone.apex->ordered()) continue;
    for (const auto& q1 : all_morphisms(q, f.source())) {
      MapConstraints c2;
      c2.allowed.resize(q->size());
      for (std::size_t i = 0; i < q->size(); ++i) {
        Mask m = 0;
        for (std::size_t b = 0; b < g.source()->size(); ++b) {
          if (g(b) == f(q1(i))) m |= bit(b);
        }
        c2.allowed[i] = m;
      }
      bool ok = visit_morphisms(
          q, g.source(),
          [&](const Morphism& q2) {
            MapConstraints ch;
            ch.allowed.resize(q->size());
            for (std::size_t i = 0; i < q->size(); ++i) {
              Mask m = 0;
              for (std::size_t k = 0; k < cone.apex->size(); ++k) {
                if (cone.first(k) == q1(i) && cone.second(k) == q2(i)) m |= bit(k);
              }
              ch.allowed[i] = m;
            }
            int count = 0;
            visit_morphisms(
                q, cone.apex,
                [&](const Morphism&) { return ++count < 2; }, ch);
            return count == 1;
          },
          c2);
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace extctx
