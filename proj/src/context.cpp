#include "extctx/context.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "extctx/serialize.hpp"

namespace extctx {

using nlohmann::json;

namespace {

constexpr int kMaxCanonical = 5;

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

// Row-major off-diagonal code of the relation given by up-sets; the pair
// (0, 1) is the most significant bit.
std::uint32_t relation_code(const std::vector<Mask>& up, const std::vector<std::size_t>& perm) {
  const std::size_t n = up.size();
  // inv[new] = old
  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      code = (code << 1) | (has(up[inv[i]], inv[j]) ? 1U : 0U);
    }
  }
  return code;
}

std::vector<Mask> decode(std::uint32_t code, std::size_t n) {
  std::vector<Mask> up(n);
  std::size_t pos = n * (n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    up[i] |= bit(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      --pos;
      if ((code >> pos) & 1U) up[i] |= bit(j);
    }
  }
  return up;
}

bool transitive(const std::vector<Mask>& up) {
  for (std::size_t i = 0; i < up.size(); ++i) {
    for (std::size_t j = 0; j < up.size(); ++j) {
      if (has(up[i], j) && (up[j] & ~up[i]) != 0) return false;
    }
  }
  return true;
}

std::vector<ObjectRef> preorders_of_size(std::size_t n) {
  const std::size_t pairs = n * (n - 1);
  std::vector<std::size_t> perm(n);
  std::vector<std::uint32_t> classes;
  for (std::uint32_t code = 0; code < (1U << pairs); ++code) {
    auto up = decode(code, n);
    if (!transitive(up)) continue;
    std::iota(perm.begin(), perm.end(), 0);
    bool canonical = true;
    do {
      if (relation_code(up, perm) > code) {
        canonical = false;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (canonical) classes.push_back(code);
  }
  std::vector<ObjectRef> out;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    out.push_back(FiniteObject::make_preorder(
        "P" + std::to_string(n) + "." + std::to_string(k), default_labels(n),
        decode(classes[k], n)));
  }
  return out;
}

}  // namespace

std::vector<ObjectRef> canonical_objects(bool ordered, int max_size) {
  if (max_size > kMaxCanonical) {
    throw std::invalid_argument("object enumeration is limited to size " +
                                std::to_string(kMaxCanonical));
  }
  static std::mutex mu;
  static std::array<std::vector<ObjectRef>, kMaxCanonical + 1> sets, pres;
  static std::array<bool, kMaxCanonical + 1> have_sets{}, have_pres{};
  std::lock_guard<std::mutex> lock(mu);
  std::vector<ObjectRef> out;
  for (int n = 0; n <= max_size; ++n) {
    auto& cache = ordered ? pres[n] : sets[n];
    auto& have = ordered ? have_pres[n] : have_sets[n];
    if (!have) {
      if (ordered) {
        cache = preorders_of_size(static_cast<std::size_t>(n));
      } else {
        cache = {FiniteObject::make_set("S" + std::to_string(n),
                                        default_labels(static_cast<std::size_t>(n)))};
      }
      have = true;
    }
    out.insert(out.end(), cache.begin(), cache.end());
  }
  return out;
}

Context::Context(std::string name, bool ordered, FactorizationSystem system,
                 std::vector<std::string> families, CoproductFn coproduct_fn)
    : name_(std::move(name)),
      ordered_(ordered),
      system_(std::move(system)),
      families_(std::move(families)),
      coproduct_fn_(std::move(coproduct_fn)) {}

ClosureAssignment Context::family(std::string_view name) const {
  if (std::find(families_.begin(), families_.end(), name) == families_.end()) {
    throw std::invalid_argument("closure family " + std::string(name) +
                                " is not registered for context " + name_);
  }
  return closure_family(name);
}

Coproduct Context::coproduct(const ObjectRef& x, const ObjectRef& y) const {
  return coproduct_fn_ ? coproduct_fn_(x, y) : extctx::coproduct(x, y);
}

std::vector<ObjectRef> Context::objects(int bound) const {
  auto out = canonical_objects(ordered_, bound);
  for (const auto& l : loaded_) {
    if (l->size() > static_cast<std::size_t>(bound)) continue;
    for (auto& o : out) {
      if (o->size() == l->size() && is_isomorphic(o, l)) {
        o = l;
        break;
      }
    }
  }
  return out;
}

void Context::add_objects(const std::vector<ObjectRef>& objs) {
  for (const auto& o : objs) {
    if (o->ordered() != ordered_) {
      throw CategoryError("object " + o->id() + " does not belong to context " + name_);
    }
    if (o->size() > static_cast<std::size_t>(kMaxCanonical)) {
      throw CategoryError("object " + o->id() + " exceeds the size cap " +
                          std::to_string(kMaxCanonical));
    }
    bool dup = false;
    for (const auto& l : loaded_) dup = dup || (l->size() == o->size() && is_isomorphic(l, o));
    if (!dup) loaded_.push_back(o);
  }
}

ProperBound Context::proper_bound(std::string_view family_name, int bound) const {
  return ProperBound{family(family_name), objects(bound)};
}

Context builtin(std::string_view name) {
  if (name == "finset") {
    return Context("finset", false, surjection_injection_system(), closure_family_names());
  }
  if (name == "finpre") {
    return Context("finpre", true, surjection_embedding_system(), closure_family_names());
  }
  throw std::invalid_argument("unknown context: " + std::string(name));
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"finset", "finpre"};
  return names;
}

Context swapped_classes_context() {
  FactorizationSystem sys{
      "injections/surjections (swapped)",
      [](const Morphism& f) { return f.injective(); },
      [](const Morphism& f) { return f.surjective(); },
      [](const Morphism& f) {
        auto c = coproduct(f.source(), f.target());
        return Factorization{c.inl, copair(f, Morphism::identity(f.target()))};
      }};
  return Context("swapped-classes", false, std::move(sys), {"identity"});
}

bool is_split_mono(const Morphism& f) {
  if (!f.injective()) return false;
  MapConstraints c;
  c.allowed.assign(f.target()->size(), f.source()->all());
  for (std::size_t i = 0; i < f.source()->size(); ++i) c.allowed[f(i)] = bit(i);
  return !visit_morphisms(f.target(), f.source(), [](const Morphism&) { return false; }, c);
}

Context split_mono_context() {
  FactorizationSystem sys{"surjections/split monos",
                          [](const Morphism& f) { return f.surjective(); }, is_split_mono,
                          image_factorization};
  return Context("split-mono", true, std::move(sys), closure_family_names());
}

Context ordinal_sum_context() {
  auto ordinal = [](const ObjectRef& x, const ObjectRef& y) {
    auto c = coproduct(x, y);
    std::vector<Mask> up;
    for (std::size_t i = 0; i < c.object->size(); ++i) {
      up.push_back(c.object->up(i) | (has(c.left_part(), i) ? c.right_part() : 0));
    }
    auto obj = FiniteObject::make_preorder("(" + x->id() + "<" + y->id() + ")",
                                           c.object->labels(), std::move(up));
    return Coproduct{obj, Morphism::make(x, obj, c.inl.table()),
                     Morphism::make(y, obj, c.inr.table())};
  };
  return Context("ordinal-sum", true, surjection_embedding_system(), {"alexandrov"}, ordinal);
}

Report validate_extensive(const Context& ctx, int bound) {
  Report r{"extensive " + ctx.name() + "@" + std::to_string(bound), {}};
  const auto& sys = ctx.system();
  const auto objs = ctx.objects(bound);
  const auto zero = initial_object(ctx.ordered());
  const auto one = terminal_object(ctx.ordered());

  auto& stable = r.add("coproducts-pullback-stable");
  auto& disjoint = r.add("coproducts-disjoint");
  auto& inj_m = r.add("injections-in-M");
  auto& via_one = r.add("injections-from-1+1");
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      auto c = ctx.coproduct(x, y);
      ++inj_m.instances;
      if (!sys.in_m(c.inl) || !sys.in_m(c.inr)) {
        fail(inj_m, "injections of " + c.object->id(), json{{"X", to_json(*x)}, {"Y", to_json(*y)}});
      }
      ++disjoint.instances;
      if (!pullback(c.inl, c.inr).apex->empty()) {
        fail(disjoint, "injections of " + c.object->id() + " meet",
             json{{"X", to_json(*x)}, {"Y", to_json(*y)}});
      }
      ++via_one.instances;
      auto c11 = ctx.coproduct(one, one);
      auto bang = copair(c, compose(c11.inl, terminal_map(x)), compose(c11.inr, terminal_map(y)));
      bool ok = false;
      if (bang) {
        auto px = pullback(*bang, c11.inl);
        auto py = pullback(*bang, c11.inr);
        ok = px.first.image() == c.left_part() && py.first.image() == c.right_part();
      }
      if (!ok) {
        fail(via_one, "pulling back along 1+1 misses the injections of " + c.object->id(),
             json{{"X", to_json(*x)}, {"Y", to_json(*y)}});
      }
      for (const auto& z : objs) {
        visit_morphisms(z, c.object, [&](const Morphism& f) {
          ++stable.instances;
          auto p1 = pullback(f, c.inl);
          auto p2 = pullback(f, c.inr);
          auto zz = ctx.coproduct(p1.apex, p2.apex);
          auto h = copair(zz, p1.first, p2.first);
          bool good = h && is_iso(*h);
          if (good) {
            auto fx = compose(c.inl, p1.second);
            auto fy = compose(c.inr, p2.second);
            auto k = copair(zz, fx, fy);
            good = k && compose(f, *h) == *k;
          }
          if (!good) {
            fail(stable, "f = " + f.describe() + " does not split along " + c.object->id(),
                 json{{"f", to_json(f)}, {"coproduct", to_json(*c.object)}});
            return false;
          }
          return true;
        });
      }
    }
  }

  auto& strict = r.add("initial-strict");
  auto& reflect = r.add("zero-reflection");
  for (const auto& z : objs) {
    for (const auto& f : all_morphisms(z, zero)) {
      ++strict.instances;
      if (!is_iso(f)) fail(strict, "non-iso into 0: " + f.describe(), to_json(f));
    }
    for (const auto& w : objs) {
      visit_morphisms(z, w, [&](const Morphism& f) {
        ++reflect.instances;
        if (f.preimage_of(0) != 0) fail(reflect, "preimage of 0 along " + f.describe(), to_json(f));
        return true;
      });
    }
  }

  auto& quasi = r.add("zero-to-one-in-M");
  ++quasi.instances;
  if (!sys.in_m(initial_map(one))) fail(quasi, "0 -> 1 is not in M");

  auto& dist = r.add("distributive");
  auto two = ctx.coproduct(one, one).object;
  for (const auto& x : objs) {
    ++dist.instances;
    auto lhs = product(two, x).apex;
    auto rhs = ctx.coproduct(x, x).object;
    if (!is_isomorphic(lhs, rhs)) {
      fail(dist, "(1+1) x " + x->id() + " is not " + x->id() + "+" + x->id(), to_json(*x));
    }
  }

  // Universal properties by exhaustive mediating-map search on small objects.
  auto& co_univ = r.add("coproduct-universal");
  auto& pb_univ = r.add("pullback-universal");
  const auto small = ctx.objects(std::min(bound, 2));
  for (const auto& x : small) {
    for (const auto& y : small) {
      ++co_univ.instances;
      auto c = ctx.coproduct(x, y);
      if (!coproduct_is_universal(c, small)) {
        fail(co_univ, c.object->id() + " is not a coproduct",
             json{{"X", to_json(*x)}, {"Y", to_json(*y)}});
      }
    }
  }
  for (const auto& z : small) {
    for (const auto& x : small) {
      for (const auto& f : all_morphisms(x, z)) {
        for (const auto& y : small) {
          for (const auto& g : all_morphisms(y, z)) {
            ++pb_univ.instances;
            if (!pullback_is_universal(pullback(f, g), f, g, small)) {
              fail(pb_univ, "pullback of " + f.describe() + ", " + g.describe(),
                   json{{"f", to_json(f)}, {"g", to_json(g)}});
            }
          }
        }
      }
    }
  }
  return r;
}

}  // namespace extctx
