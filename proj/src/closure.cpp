#include "extctx/closure.hpp"

#include <stdexcept>

#include "extctx/serialize.hpp"

namespace extctx {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxBruteForce = 20;

// Bits of `sub` (indexed over the set bits of `m`) spread back into `m`.
Mask scatter(Mask sub, Mask m) {
  Mask out = 0;
  for (std::size_t k = 0; m != 0; ++k) {
    const Mask low = m & (~m + 1);
    if (has(sub, k)) out |= low;
    m &= m - 1;
  }
  return out;
}

// Inverse of scatter: the bits of `x` at the positions of `m`, packed.
Mask gather(Mask x, Mask m) {
  Mask out = 0;
  for (std::size_t k = 0; m != 0; ++k) {
    const Mask low = m & (~m + 1);
    if (x & low) out |= bit(k);
    m &= m - 1;
  }
  return out;
}

void require_space(const Morphism& f, const Space& src, const Space& tgt) {
  if (!same_object(f.source(), src.object()) || !same_object(f.target(), tgt.object())) {
    throw CategoryError("morphism " + f.describe() + " does not match spaces on " +
                        src.object()->id() + " and " + tgt.object()->id());
  }
}

// Visits the subsets that decide a property: 0 and singletons when both
// closures are additive, every subset otherwise. Stops when `fn` is false.
template <typename Fn>
bool for_test_subsets(const FiniteObject& x, bool additive, Fn fn) {
  if (additive) {
    if (!fn(Mask{0})) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!fn(bit(i))) return false;
    }
    return true;
  }
  if (x.size() > kMaxBruteForce) {
    throw CategoryError("closure check on " + x.id() + " is too large");
  }
  const Mask end = Mask{1} << x.size();
  for (Mask m = 0; m < end; ++m) {
    if (!fn(m)) return false;
  }
  return true;
}

bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

}  // namespace

Space::Space(ObjectRef object, Closure cls, bool additive, std::string family)
    : object_(std::move(object)),
      cls_(std::move(cls)),
      additive_(additive),
      family_(std::move(family)) {}

ClosureAssignment::ClosureAssignment(std::string name, Formula formula, bool additive)
    : name_(std::move(name)), formula_(std::move(formula)), additive_(additive) {}

Space ClosureAssignment::on(const ObjectRef& x) const {
  auto formula = formula_;
  return Space(
      x, [x, formula](Mask m) { return formula(*x, m); }, additive_, name_);
}

ClosureAssignment closure_family(std::string_view name) {
  if (name == "alexandrov") {
    return ClosureAssignment(
        "alexandrov", [](const FiniteObject& x, Mask m) { return x.down_closure(m); }, true);
  }
  if (name == "identity") {
    return ClosureAssignment(
        "identity", [](const FiniteObject&, Mask m) { return m; }, true);
  }
  if (name == "indiscrete") {
    // Additive: cls(a v b) is top as soon as either side is nonempty.
    return ClosureAssignment(
        "indiscrete", [](const FiniteObject& x, Mask m) { return m == 0 ? m : x.all(); }, true);
  }
  throw std::invalid_argument("unknown closure family: " + std::string(name));
}

const std::vector<std::string>& closure_family_names() {
  static const std::vector<std::string> names{"alexandrov", "identity", "indiscrete"};
  return names;
}

Report validate_space(const Space& s) {
  const auto& x = *s.object();
  Report r{"closure " + s.family() + " on " + x.id(), {}};
  auto& extensive = r.add("extensive");
  auto& monotone = r.add("monotone");
  auto& idempotent = r.add("idempotent");
  auto& additive = r.add("additive");
  auto& grounded = r.add("grounded");
  grounded.required = false;
  if (x.size() > kMaxBruteForce / 2) {
    throw CategoryError("closure validation on " + x.id() + " is too large");
  }
  const Mask end = Mask{1} << x.size();
  auto sub = [&](Mask m) { return subset_json(x, m); };
  for (Mask m = 0; m < end; ++m) {
    const Mask c = s.closure(m);
    ++extensive.instances;
    ++idempotent.instances;
    if (!subset_of(m, c)) fail(extensive, "m=" + mask_to_string(x, m), json{{"m", sub(m)}});
    if (s.closure(c) != c) fail(idempotent, "m=" + mask_to_string(x, m), json{{"m", sub(m)}});
    for (Mask n = 0; n < end; ++n) {
      const Mask d = s.closure(n);
      if (subset_of(m, n)) {
        ++monotone.instances;
        if (!subset_of(c, d)) {
          fail(monotone, "m=" + mask_to_string(x, m) + " n=" + mask_to_string(x, n),
               json{{"m", sub(m)}, {"n", sub(n)}});
        }
      }
      ++additive.instances;
      if (s.closure(m | n) != (c | d)) {
        fail(additive, "a=" + mask_to_string(x, m) + " b=" + mask_to_string(x, n),
             json{{"a", sub(m)}, {"b", sub(n)}});
      }
    }
  }
  ++grounded.instances;
  if (s.closure(0) != 0) fail(grounded, "cls(0) is not 0");
  return r;
}

Report validate_closure(const ClosureAssignment& c, std::span<const ObjectRef> objects) {
  Report r{"closure family " + c.name(), {}};
  for (const auto& x : objects) {
    auto part = validate_space(c.on(x));
    for (auto& entry : part.checks) {
      CheckEntry* into = nullptr;
      for (auto& e : r.checks) {
        if (e.id == entry.id) into = &e;
      }
      if (!into) {
        into = &r.add(entry.id);
        into->required = entry.required;
      }
      into->instances += entry.instances;
      if (!entry.passed) {
        auto data = entry.witness_data;
        data["object"] = to_json(*x);
        fail(*into, x->id() + ": " + entry.witness, std::move(data));
      }
    }
  }
  return r;
}

bool is_continuous(const Morphism& f, const Space& src, const Space& tgt) {
  require_space(f, src, tgt);
  return for_test_subsets(*src.object(), src.additive() && tgt.additive(), [&](Mask m) {
    return subset_of(f.image_of(src.closure(m)), tgt.closure(f.image_of(m)));
  });
}

SpaceMorphism::SpaceMorphism(Morphism f, Space source, Space target)
    : map_(std::move(f)), source_(std::move(source)), target_(std::move(target)) {
  if (!is_continuous(map_, source_, target_)) {
    throw CategoryError("not continuous: " + map_.describe() + " (" + source_.family() +
                        " -> " + target_.family() + ")");
  }
}

bool is_closed_subobject(const Space& s, Mask m) { return s.is_closed(m); }

std::vector<Mask> closed_lattice(const Space& s) {
  const auto& x = *s.object();
  if (x.size() > kMaxBruteForce) throw CategoryError("closed lattice of " + x.id() + " is too large");
  std::vector<Mask> out;
  const Mask end = Mask{1} << x.size();
  for (Mask m = 0; m < end; ++m) {
    if (s.is_closed(m)) out.push_back(m);
  }
  return out;
}

std::optional<Mask> closed_morphism_violation(const SpaceMorphism& f) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  const auto& g = f.map();
  std::optional<Mask> bad;
  for_test_subsets(*src.object(), src.additive() && tgt.additive(), [&](Mask p) {
    if (g.image_of(src.closure(p)) != tgt.closure(g.image_of(p))) {
      bad = p;
      return false;
    }
    return true;
  });
  return bad;
}

bool is_closed_morphism(const SpaceMorphism& f) { return !closed_morphism_violation(f); }

bool is_dense(const SpaceMorphism& f) {
  return f.target().closure(f.map().image()) == f.target().object()->all();
}

Space subspace(const Space& s, Mask m) {
  if (!subset_of(m, s.object()->all())) {
    throw CategoryError("subspace: mask outside " + s.object()->id());
  }
  auto sub = s.object()->restrict_to(m);
  Space ambient = s;
  return Space(
      sub, [ambient, m](Mask u) { return gather(ambient.closure(scatter(u, m)), m); },
      s.additive(), s.family());
}

std::pair<SpaceMorphism, SpaceMorphism> dense_closed_factorize(const SpaceMorphism& f) {
  const auto& tgt = f.target();
  const Mask c = tgt.closure(f.map().image());
  Space mid = subspace(tgt, c);
  Morphism::Table table(f.source().object()->size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = static_cast<std::size_t>(__builtin_popcountll(c & (bit(f.map()(i)) - 1)));
  }
  auto dense = Morphism::make(f.source().object(), mid.object(), std::move(table));
  auto closed = Subobject{tgt.object(), c}.rep();
  return {SpaceMorphism(std::move(dense), f.source(), mid),
          SpaceMorphism(std::move(closed), mid, tgt)};
}

Space sum_space(const Coproduct& c, const Space& s, const Space& t) {
  if (!same_object(c.left(), s.object()) || !same_object(c.right(), t.object())) {
    throw CategoryError("sum_space: spaces do not match the summands of " + c.object->id());
  }
  const Mask lp = c.left_part();
  const Mask rp = c.right_part();
  return Space(
      c.object,
      [s, t, lp, rp](Mask p) {
        return scatter(s.closure(gather(p, lp)), lp) | scatter(t.closure(gather(p, rp)), rp);
      },
      s.additive() && t.additive(), s.family() == t.family() ? s.family() : s.family() + "+" + t.family());
}

std::optional<ProperWitness> proper_violation(const SpaceMorphism& f, const ProperBound& pb) {
  const auto& x = f.target();
  if (!is_closed_morphism(f)) {
    return ProperWitness{Morphism::identity(x.object()), f.map()};
  }
  std::optional<ProperWitness> bad;
  for (const auto& z : pb.test_objects) {
    if (z->ordered() != x.object()->ordered()) continue;
    Space zs = pb.family.on(z);
    visit_morphisms(z, x.object(), [&](const Morphism& w) {
      if (!is_continuous(w, zs, x)) return true;
      auto cone = pullback(w, f.map());
      SpaceMorphism leg(cone.first, pb.family.on(cone.apex), zs);
      if (!is_closed_morphism(leg)) {
        bad = ProperWitness{w, cone.first};
        return false;
      }
      return true;
    });
    if (bad) break;
  }
  return bad;
}

bool is_proper(const SpaceMorphism& f, const ProperBound& pb) {
  return !proper_violation(f, pb);
}

SpaceMorphism separation_diagonal(const SpaceMorphism& f, const ClosureAssignment& family) {
  auto k = kernel_pair(f.map());
  auto d = equalizer(k.first, k.second);
  return SpaceMorphism(d, family.on(d.source()), family.on(k.apex));
}

bool is_separated(const SpaceMorphism& f, const ProperBound& pb) {
  return is_proper(separation_diagonal(f, pb.family), pb);
}

namespace {

SpaceMorphism terminal_space_map(const Space& s, const ClosureAssignment& family) {
  auto t = terminal_map(s.object());
  return SpaceMorphism(t, s, family.on(t.target()));
}

}  // namespace

bool is_compact(const Space& s, const ProperBound& pb) {
  return is_proper(terminal_space_map(s, pb.family), pb);
}

bool is_hausdorff(const Space& s, const ProperBound& pb) {
  return is_separated(terminal_space_map(s, pb.family), pb);
}

}  // namespace extctx
