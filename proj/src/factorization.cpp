#include "extctx/factorization.hpp"

#include "extctx/limits.hpp"
#include "extctx/serialize.hpp"

namespace extctx {

using nlohmann::json;

Morphism Subobject::rep() const {
  Morphism::Table incl;
  for (std::size_t i = 0; i < ambient->size(); ++i) {
    if (has(bits, i)) incl.push_back(i);
  }
  return Morphism::make(domain(), ambient, std::move(incl));
}

std::size_t Subobject::size() const {
  return static_cast<std::size_t>(__builtin_popcountll(bits));
}

std::string Subobject::describe() const {
  return mask_to_string(*ambient, bits) + " in " + ambient->id();
}

Subobject subobject_of(const Morphism& injective) {
  if (!injective.injective()) {
    throw CategoryError("not a monomorphism: " + injective.describe());
  }
  return Subobject{injective.target(), injective.image()};
}

namespace {

// Index of element `t` among the set bits of `m`.
std::size_t rank_in(Mask m, std::size_t t) {
  return static_cast<std::size_t>(__builtin_popcountll(m & (bit(t) - 1)));
}

}  // namespace

Factorization image_factorization(const Morphism& f) {
  const Mask img = f.image();
  Subobject im{f.target(), img};
  auto m = im.rep();
  Morphism::Table e(f.table().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = rank_in(img, f(i));
  return Factorization{Morphism::make(f.source(), m.source(), std::move(e)), m};
}

FactorizationSystem surjection_injection_system() {
  return FactorizationSystem{
      "surjections/injections",
      [](const Morphism& f) { return f.surjective(); },
      [](const Morphism& f) { return f.injective(); },
      image_factorization};
}

FactorizationSystem surjection_embedding_system() {
  return FactorizationSystem{
      "surjections/embeddings",
      [](const Morphism& f) { return f.surjective(); },
      [](const Morphism& f) { return f.embedding(); },
      image_factorization};
}

bool down_arrow(const Morphism& e, const Morphism& m) {
  const auto& a = e.source();
  const auto& b = e.target();
  const auto& c = m.source();
  const auto& d = m.target();
  if (a->ordered() != c->ordered()) throw CategoryError("down_arrow across flavours");
  return visit_morphisms(a, c, [&](const Morphism& u) {
    // v is pinned on the image of e by v(e(x)) = m(u(x)).
    MapConstraints vc;
    vc.allowed.assign(b->size(), d->all());
    for (std::size_t x = 0; x < a->size(); ++x) vc.allowed[e(x)] &= bit(m(u(x)));
    return visit_morphisms(
        b, d,
        [&](const Morphism& v) {
          MapConstraints wc;
          wc.allowed.assign(b->size(), 0);
          for (std::size_t y = 0; y < b->size(); ++y) {
            wc.allowed[y] = m.preimage_of(bit(v(y)));
          }
          for (std::size_t x = 0; x < a->size(); ++x) wc.allowed[e(x)] &= bit(u(x));
          int diagonals = 0;
          visit_morphisms(
              b, c, [&](const Morphism&) { return ++diagonals < 2; }, wc);
          return diagonals == 1;
        },
        vc);
  });
}

namespace {

void require_admissible(const FactorizationSystem& sys, const Subobject& s,
                        const ObjectRef& expected, const char* what) {
  if (!same_object(s.ambient, expected)) {
    throw CategoryError(std::string(what) + ": subobject lives in " +
                        s.ambient->id() + ", expected " + expected->id());
  }
  if (!sys.in_m(s.rep())) {
    throw CategoryError(std::string(what) + ": " + s.describe() +
                        " is not an admissible subobject");
  }
}

}  // namespace

Subobject image(const FactorizationSystem& sys, const Morphism& f, const Subobject& m) {
  require_admissible(sys, m, f.source(), "image");
  return subobject_of(sys.factorize(compose(f, m.rep())).m_part);
}

Subobject preimage(const FactorizationSystem& sys, const Morphism& f, const Subobject& n) {
  require_admissible(sys, n, f.target(), "preimage");
  auto cone = pullback(f, n.rep());
  return Subobject{f.source(), cone.first.image()};
}

Morphism restriction(const FactorizationSystem& sys, const Morphism& f, const Subobject& m) {
  require_admissible(sys, m, f.source(), "restriction");
  return sys.factorize(compose(f, m.rep())).e_part;
}

Morphism corestriction(const FactorizationSystem& sys, const Morphism& f, const Subobject& n) {
  auto pre = preimage(sys, f, n);
  Morphism::Table table;
  for (std::size_t i = 0; i < f.source()->size(); ++i) {
    if (has(pre.bits, i)) table.push_back(rank_in(n.bits, f(i)));
  }
  return Morphism::make(pre.domain(), n.domain(), std::move(table));
}

bool same_factorization_up_to_iso(const Factorization& f1, const Factorization& f2) {
  if (!same_object(f1.e_part.source(), f2.e_part.source()) ||
      !same_object(f1.m_part.target(), f2.m_part.target())) {
    return false;
  }
  if (!(compose(f1.m_part, f1.e_part) == compose(f2.m_part, f2.e_part))) return false;
  if (!f2.m_part.injective()) return false;
  Morphism::Table phi(f1.mid()->size());
  for (std::size_t k = 0; k < phi.size(); ++k) {
    const Mask pre = f2.m_part.preimage_of(bit(f1.m_part(k)));
    if (pre == 0) return false;
    phi[k] = static_cast<std::size_t>(__builtin_ctzll(pre));
  }
  auto iso = Morphism::try_make(f1.mid(), f2.mid(), std::move(phi));
  return iso && is_iso(*iso) && compose(*iso, f1.e_part) == f2.e_part &&
         compose(f2.m_part, *iso) == f1.m_part;
}

Report validate_system(const FactorizationSystem& sys, std::span<const ObjectRef> objects) {
  Report r{"factorization-system " + sys.name, {}};
  const std::size_t n = objects.size();
  std::vector<std::vector<std::vector<Morphism>>> hom(n, std::vector<std::vector<Morphism>>(n));
  std::vector<Morphism> all, es, ms;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      hom[i][j] = all_morphisms(objects[i], objects[j]);
      for (const auto& f : hom[i][j]) {
        all.push_back(f);
        if (sys.in_e(f)) es.push_back(f);
        if (sys.in_m(f)) ms.push_back(f);
      }
    }
  }

  auto& e_epi = r.add("E-epi");
  auto& m_mono = r.add("M-mono");
  auto& both_iso = r.add("E-and-M-are-iso");
  auto& iso_both = r.add("iso-in-E-and-M");
  auto& fact = r.add("factorization");
  for (const auto& f : all) {
    const bool e = sys.in_e(f), m = sys.in_m(f), iso = is_iso(f);
    ++e_epi.instances;
    ++m_mono.instances;
    ++both_iso.instances;
    ++iso_both.instances;
    if (e && !is_epi(f)) fail(e_epi, "E-morphism not epi: " + f.describe(), to_json(f));
    if (m && !is_mono(f)) fail(m_mono, "M-morphism not mono: " + f.describe(), to_json(f));
    if (e && m && !iso) fail(both_iso, "in E and M but not iso: " + f.describe(), to_json(f));
    if (iso && !(e && m)) fail(iso_both, "iso outside E or M: " + f.describe(), to_json(f));
    ++fact.instances;
    auto fe = sys.factorize(f);
    bool ok = same_object(fe.e_part.source(), f.source()) &&
              same_object(fe.m_part.target(), f.target()) &&
              same_object(fe.e_part.target(), fe.m_part.source()) &&
              compose(fe.m_part, fe.e_part) == f && sys.in_e(fe.e_part) &&
              sys.in_m(fe.m_part);
    if (!ok) fail(fact, "bad factorization of " + f.describe(), to_json(f));
  }

  auto& e_comp = r.add("E-closed-under-composition");
  auto& m_comp = r.add("M-closed-under-composition");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (const auto& f : hom[i][j]) {
          const bool fe = sys.in_e(f), fm = sys.in_m(f);
          if (!fe && !fm) continue;
          for (const auto& g : hom[j][k]) {
            if (fe && sys.in_e(g)) {
              ++e_comp.instances;
              if (!sys.in_e(compose(g, f))) {
                fail(e_comp, "E not closed: " + g.describe() + " . " + f.describe(),
                     json{{"f", to_json(f)}, {"g", to_json(g)}});
              }
            }
            if (fm && sys.in_m(g)) {
              ++m_comp.instances;
              if (!sys.in_m(compose(g, f))) {
                fail(m_comp, "M not closed: " + g.describe() + " . " + f.describe(),
                     json{{"f", to_json(f)}, {"g", to_json(g)}});
              }
            }
          }
        }
      }
    }
  }

  auto& m_pb = r.add("M-pullback-stable");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < n; ++a) {
      for (const auto& m : hom[a][x]) {
        if (!sys.in_m(m)) continue;
        for (std::size_t y = 0; y < n; ++y) {
          for (const auto& f : hom[y][x]) {
            ++m_pb.instances;
            auto cone = pullback(f, m);
            if (!sys.in_m(cone.first)) {
              fail(m_pb, "pullback of " + m.describe() + " along " + f.describe() +
                             " is not in M",
                   json{{"m", to_json(m)}, {"f", to_json(f)}});
            }
          }
        }
      }
    }
  }

  auto& e_up = r.add("E-equals-M-up");
  for (const auto& f : all) {
    ++e_up.instances;
    const bool in_e = sys.in_e(f);
    std::optional<Morphism> blocker;
    if (!in_e) {
      auto own_m = sys.factorize(f).m_part;
      if (sys.in_m(own_m) && !down_arrow(f, own_m)) blocker = own_m;
    }
    if (!blocker) {
      for (const auto& m : ms) {
        if (!down_arrow(f, m)) {
          blocker = m;
          break;
        }
      }
    }
    if (in_e && blocker) {
      fail(e_up, "E-morphism " + f.describe() + " not orthogonal to M-morphism " +
                     blocker->describe(),
           json{{"e", to_json(f)}, {"m", to_json(*blocker)}});
    } else if (!in_e && !blocker) {
      fail(e_up, f.describe() + " is orthogonal to all of M but not in E", to_json(f));
    }
  }

  auto& m_down = r.add("M-equals-E-down");
  for (const auto& f : all) {
    ++m_down.instances;
    const bool in_m = sys.in_m(f);
    std::optional<Morphism> blocker;
    if (!in_m) {
      auto own_e = sys.factorize(f).e_part;
      if (sys.in_e(own_e) && !down_arrow(own_e, f)) blocker = own_e;
    }
    if (!blocker) {
      for (const auto& e : es) {
        if (!down_arrow(e, f)) {
          blocker = e;
          break;
        }
      }
    }
    if (in_m && blocker) {
      fail(m_down, "M-morphism " + f.describe() + " not orthogonal to E-morphism " +
                       blocker->describe(),
           json{{"e", to_json(*blocker)}, {"m", to_json(f)}});
    } else if (!in_m && !blocker) {
      fail(m_down, f.describe() + " is orthogonal to all of E but not in M", to_json(f));
    }
  }
  return r;
}

}  // namespace extctx
