#include "extctx/morphism.hpp"

#include <sstream>

namespace extctx {

std::optional<std::string> Morphism::defect(const FiniteObject& s,
                                            const FiniteObject& t,
                                            const Table& table) {
  if (s.ordered() != t.ordered()) {
    return "endpoints " + s.id() + " and " + t.id() + " differ in flavour";
  }
  if (table.size() != s.size()) {
    return "map table is not total on " + s.id();
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= t.size()) {
      return "element '" + s.label(i) + "' maps outside " + t.id();
    }
  }
  if (s.ordered()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (s.leq(i, j) && !t.leq(table[i], table[j])) {
          return "map is not monotone: " + s.label(i) + "<=" + s.label(j) +
                 " but " + t.label(table[i]) + "!<=" + t.label(table[j]);
        }
      }
    }
  }
  return std::nullopt;
}

Morphism Morphism::make(ObjectRef source, ObjectRef target, Table table) {
  if (!source || !target) throw CategoryError("null endpoint");
  if (auto d = defect(*source, *target, table)) throw CategoryError(*d);
  return Morphism(std::move(source), std::move(target), std::move(table));
}

std::optional<Morphism> Morphism::try_make(ObjectRef source, ObjectRef target,
                                           Table table) {
  if (!source || !target || defect(*source, *target, table)) return std::nullopt;
  return Morphism(std::move(source), std::move(target), std::move(table));
}

Morphism Morphism::from_labels(ObjectRef source, ObjectRef target,
                               const std::vector<std::string>& images) {
  Table table;
  table.reserve(images.size());
  for (const auto& l : images) {
    auto idx = target->index_of(l);
    if (!idx) throw CategoryError("'" + l + "' is not an element of " + target->id());
    table.push_back(*idx);
  }
  return make(std::move(source), std::move(target), std::move(table));
}

Morphism Morphism::identity(ObjectRef x) {
  Table table(x->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  auto y = x;
  return Morphism(std::move(x), std::move(y), std::move(table));
}

Mask Morphism::image_of(Mask m) const {
  Mask out = 0;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1U) out |= bit(table_[i]);
  }
  return out;
}

Mask Morphism::preimage_of(Mask n) const {
  Mask out = 0;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (has(n, table_[i])) out |= bit(i);
  }
  return out;
}

bool Morphism::injective() const {
  Mask seen = 0;
  for (auto t : table_) {
    if (has(seen, t)) return false;
    seen |= bit(t);
  }
  return true;
}

bool Morphism::surjective() const { return image() == target_->all(); }

bool Morphism::embedding() const {
  if (!injective()) return false;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    for (std::size_t j = 0; j < table_.size(); ++j) {
      if (source_->leq(i, j) != target_->leq(table_[i], table_[j])) return false;
    }
  }
  return true;
}

std::string Morphism::describe() const {
  std::ostringstream os;
  os << source_->id() << " -> " << target_->id() << " [";
  for (std::size_t i = 0; i < table_.size(); ++i) {
    os << (i ? ", " : "") << source_->label(i) << "->" << target_->label(table_[i]);
  }
  os << "]";
  return os.str();
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!same_object(f.target(), g.source())) {
    throw CategoryError("cannot compose: target of " + f.describe() +
                        " is not the source of " + g.describe());
  }
  Morphism::Table table(f.table().size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = g(f(i));
  return Morphism::make(f.source(), g.target(), std::move(table));
}

bool is_mono(const Morphism& f) { return f.injective(); }
bool is_epi(const Morphism& f) { return f.surjective(); }
bool is_iso(const Morphism& f) {
  return f.injective() && f.surjective() && f.embedding();
}

namespace {

struct Enumerator {
  const FiniteObject& x;
  const FiniteObject& y;
  const ObjectRef& xr;
  const ObjectRef& yr;
  const MapConstraints& c;
  const std::function<bool(const Morphism&)>& visit;
  Morphism::Table table;
  Mask used = 0;

  bool consistent(std::size_t i, std::size_t t) const {
    if (!x.ordered()) return true;
    for (std::size_t j = 0; j < i; ++j) {
      if (x.leq(j, i) && !y.leq(table[j], t)) return false;
      if (x.leq(i, j) && !y.leq(t, table[j])) return false;
    }
    return true;
  }

  bool run(std::size_t i) {
    if (i == x.size()) {
      return visit(Morphism::make(xr, yr, table));
    }
    Mask allowed = c.allowed.empty() ? y.all() : c.allowed[i];
    if (c.injective) allowed &= ~used;
    for (std::size_t t = 0; t < y.size(); ++t) {
      if (!has(allowed, t) || !consistent(i, t)) continue;
      table[i] = t;
      used |= bit(t);
      bool go_on = run(i + 1);
      used &= ~bit(t);
      if (!go_on) return false;
    }
    return true;
  }
};

}  // namespace

bool visit_morphisms(const ObjectRef& x, const ObjectRef& y,
                     const std::function<bool(const Morphism&)>& visit,
                     const MapConstraints& constraints) {
  if (x->ordered() != y->ordered()) {
    throw CategoryError("cannot enumerate morphisms across flavours");
  }
  if (!constraints.allowed.empty() && constraints.allowed.size() != x->size()) {
    throw CategoryError("constraint table size mismatch");
  }
  if (constraints.injective && x->size() > y->size()) return true;
  Enumerator e{*x, *y, x, y, constraints, visit, Morphism::Table(x->size()), 0};
  return e.run(0);
}

std::vector<Morphism> all_morphisms(const ObjectRef& x, const ObjectRef& y,
                                    const MapConstraints& constraints) {
  std::vector<Morphism> out;
  visit_morphisms(
      x, y,
      [&](const Morphism& f) {
        out.push_back(f);
        return true;
      },
      constraints);
  return out;
}

}  // namespace extctx
