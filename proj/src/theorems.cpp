#include "extctx/theorems.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

#include "extctx/lattice.hpp"
#include "extctx/semilattice.hpp"
#include "extctx/serialize.hpp"

namespace extctx {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::confirmed:
      return "confirmed";
    case Status::refuted:
      return "refuted";
    case Status::hypothesis_failed:
      return "hypothesis-failed";
  }
  return "unknown";
}

const Condition* Verdict::side(const std::string& id) const {
  for (const auto& c : sides) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const Condition* Verdict::claim(const std::string& id) const {
  for (const auto& c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const Witness* Verdict::witness_for(const std::string& condition) const {
  for (const auto& w : witnesses) {
    if (w.condition == condition) return &w;
  }
  return nullptr;
}

json to_json(const Verdict& v) {
  json sides = json::array();
  for (const auto& c : v.sides) sides.push_back({{"id", c.id}, {"value", c.value}});
  json claims = json::array();
  for (const auto& c : v.claims) claims.push_back({{"id", c.id}, {"value", c.value}});
  json witnesses = json::array();
  for (const auto& w : v.witnesses) {
    witnesses.push_back({{"kind", w.kind},
                         {"condition", w.condition},
                         {"claimed", w.claimed},
                         {"text", w.text},
                         {"data", w.data}});
  }
  json out{{"theorem", v.theorem},
           {"context", v.context},
           {"family", v.family},
           {"bound", v.bound},
           {"status", to_string(v.status)},
           {"sides", std::move(sides)},
           {"claims", std::move(claims)},
           {"equivalence_ok", v.equivalence_ok},
           {"witnesses", std::move(witnesses)},
           {"counts", v.counts}};
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Condition bookkeeping

struct Instance {
  std::string text;
  json data;
};

class Tracker {
 public:
  Tracker(std::string id, std::string kind) : id_(std::move(id)), kind_(std::move(kind)) {}

  template <typename Make>
  void record(bool value, Make make) {
    ++count_;
    if (!value) {
      if (value_) bad_ = make();
      value_ = false;
    } else if (!good_) {
      good_ = make();
    }
  }

  const std::string& id() const { return id_; }
  bool value() const { return value_; }
  long count() const { return count_; }

  void add_to(Verdict& v, bool as_side) const {
    (as_side ? v.sides : v.claims).push_back(Condition{id_, value_});
    v.counts[id_] = count_;
    const auto& inst = value_ ? good_ : bad_;
    if (inst) v.witnesses.push_back(Witness{kind_, id_, value_, inst->text, inst->data});
  }

 private:
  std::string id_;
  std::string kind_;
  bool value_ = true;
  long count_ = 0;
  std::optional<Instance> bad_;
  std::optional<Instance> good_;
};

void finish(Verdict& v) {
  v.equivalence_ok = true;
  for (const auto& s : v.sides) v.equivalence_ok = v.equivalence_ok && s.value == v.sides.front().value;
  bool claims_ok = true;
  for (const auto& c : v.claims) claims_ok = claims_ok && c.value;
  v.status = v.equivalence_ok && claims_ok ? Status::confirmed : Status::refuted;
}

Verdict start(const std::string& theorem, const Context& ctx, const std::string& family,
              int bound) {
  Verdict v;
  v.theorem = theorem;
  v.context = ctx.name();
  v.family = family;
  v.bound = bound;
  return v;
}

Verdict gated(Verdict v, const std::string& why) {
  v.status = Status::hypothesis_failed;
  v.equivalence_ok = true;
  v.note = "hypothesis failed: " + why;
  return v;
}

json obj(const ObjectRef& x) { return to_json(*x); }

json table_json(const Morphism& f) {
  json out = json::array();
  for (auto t : f.table()) out.push_back(f.target()->label(t));
  return out;
}

std::string sum_name(const ObjectRef& x, const ObjectRef& y) {
  return x->id() + "+" + y->id();
}

// ---------------------------------------------------------------------------
// Single instances, shared by the checkers and by replay()

std::optional<SpaceMorphism> space_map(const ClosureAssignment& fam, const Morphism& f) {
  auto s = fam.on(f.source());
  auto t = fam.on(f.target());
  if (!is_continuous(f, s, t)) return std::nullopt;
  return SpaceMorphism(f, s, t);
}

bool is_closed_map(const ClosureAssignment& fam, const Morphism& f) {
  auto sf = space_map(fam, f);
  return sf && is_closed_morphism(*sf);
}

bool is_closed_embedding(const Context& ctx, const ClosureAssignment& fam, const Morphism& m) {
  if (!ctx.system().in_m(m)) return false;
  auto sm = space_map(fam, m);
  return sm && sm->target().is_closed(m.image()) && is_closed_morphism(*sm);
}

bool is_dense_map(const ClosureAssignment& fam, const Morphism& f) {
  auto sf = space_map(fam, f);
  return sf && is_dense(*sf);
}

bool inst_sum_admissible(const Context& ctx, const ObjectRef& x, const ObjectRef& y, Mask a,
                         Mask b) {
  return sum_subobjects(ctx.system(), Subobject{x, a}, Subobject{y, b}).admissible;
}

bool inst_mono_pullback(const Context& ctx, const Coproduct& target, const Morphism& e) {
  auto px = pullback(e, target.inl);
  auto py = pullback(e, target.inr);
  return ctx.system().in_e(px.second) && ctx.system().in_e(py.second);
}

bool inst_sum_closed_embedding(const Context& ctx, const ClosureAssignment& fam,
                               const ObjectRef& x, const ObjectRef& y, Mask a, Mask b) {
  auto sa = Subobject{x, a}.rep();
  auto sb = Subobject{y, b}.rep();
  auto sum = sum_morphisms(ctx.coproduct(sa.source(), sb.source()), ctx.coproduct(x, y), sa, sb);
  return is_closed_embedding(ctx, fam, sum);
}

bool inst_injections_closed_embeddings(const Context& ctx, const ClosureAssignment& fam,
                                       const ObjectRef& x, const ObjectRef& y) {
  auto c = ctx.coproduct(x, y);
  return is_closed_embedding(ctx, fam, c.inl) && is_closed_embedding(ctx, fam, c.inr);
}

bool inst_dense_pullback(const ClosureAssignment& fam, const Coproduct& target,
                         const Morphism& d) {
  auto px = pullback(d, target.inl);
  auto py = pullback(d, target.inr);
  return is_dense_map(fam, px.second) && is_dense_map(fam, py.second);
}

bool inst_sum_closed_morphism(const ClosureAssignment& fam, const Morphism& f,
                              const Morphism& g) {
  return is_closed_map(fam, sum_morphisms(f, g));
}

bool inst_injections_closed(const Context& ctx, const ClosureAssignment& fam,
                            const ObjectRef& x, const ObjectRef& y) {
  auto c = ctx.coproduct(x, y);
  return is_closed_map(fam, c.inl) && is_closed_map(fam, c.inr);
}

bool inst_componentwise_closure(const Context& ctx, const ClosureAssignment& fam,
                                const ObjectRef& x, const ObjectRef& y, Mask a, Mask b) {
  auto c = ctx.coproduct(x, y);
  auto sum = fam.on(c.object);
  const Mask lhs = sum.closure(c.inl.image_of(a) | c.inr.image_of(b));
  const Mask rhs = c.inl.image_of(fam.on(x).closure(a)) | c.inr.image_of(fam.on(y).closure(b));
  return lhs == rhs;
}

bool inst_factorization_of_sum(const Context& ctx, const Morphism& f, const Morphism& g) {
  const auto& sys = ctx.system();
  auto ff = sys.factorize(f);
  auto fg = sys.factorize(g);
  auto whole = sys.factorize(sum_morphisms(f, g));
  Factorization summed{sum_morphisms(ff.e_part, fg.e_part), sum_morphisms(ff.m_part, fg.m_part)};
  return sys.in_e(summed.e_part) && sys.in_m(summed.m_part) &&
         same_factorization_up_to_iso(whole, summed);
}

bool inst_corollary_equations(const Context& ctx, const Morphism& f, const Morphism& g,
                              Mask ma, Mask mb) {
  const auto& sys = ctx.system();
  Subobject sa{f.source(), ma};
  Subobject sb{g.source(), mb};
  auto fg = sum_morphisms(f, g);
  auto mab = sum_morphisms(sa.rep(), sb.rep());
  // (f + g) . (m_A + m_B) = f . m_A + g . m_B
  const bool composite = compose(fg, mab) == sum_morphisms(compose(f, sa.rep()), compose(g, sb.rep()));
  // image(f + g, m_A + m_B) = image(f, m_A) + image(g, m_B)
  auto sub_ab = subobject_of(mab);
  auto img_sum = image(sys, fg, sub_ab);
  auto img_f = image(sys, f, sa);
  auto img_g = image(sys, g, sb);
  auto cxy = coproduct(f.target(), g.target());
  const bool images = img_sum == sum_join(cxy, img_f, img_g);
  // restriction(f + g, M_A + M_B) = restriction(f, M_A) + restriction(g, M_B), up to the
  // identification of both middle objects inside X + Y.
  Factorization lhs{restriction(sys, fg, sub_ab), img_sum.rep()};
  Factorization rhs{sum_morphisms(restriction(sys, f, sa), restriction(sys, g, sb)),
                    sum_morphisms(img_f.rep(), img_g.rep())};
  // rhs starts at M_A + M_B; move it onto the canonical domain of m_A + m_B.
  Morphism::Table to_sum(sub_ab.size());
  const auto incl = sub_ab.rep();
  for (std::size_t k = 0; k < to_sum.size(); ++k) {
    to_sum[k] = static_cast<std::size_t>(__builtin_ctzll(mab.preimage_of(bit(incl(k)))));
  }
  auto phi = Morphism::try_make(sub_ab.domain(), mab.source(), std::move(to_sum));
  bool restrictions = false;
  if (phi && is_iso(*phi)) {
    Factorization rhs_moved{compose(rhs.e_part, *phi), rhs.m_part};
    restrictions = same_factorization_up_to_iso(lhs, rhs_moved);
  }
  return composite && images && restrictions;
}

bool inst_closed_e_mono_pullback(const Context& ctx, const ClosureAssignment& fam,
                                 const Coproduct& target, const Morphism& e) {
  auto px = pullback(e, target.inl);
  auto py = pullback(e, target.inr);
  const auto& sys = ctx.system();
  return sys.in_e(px.second) && sys.in_e(py.second) && is_closed_map(fam, px.second) &&
         is_closed_map(fam, py.second);
}

std::optional<SpaceMorphism> family_map(const ClosureAssignment& fam, const Morphism& f) {
  return space_map(fam, f);
}

bool proper_map(const ProperBound& pb, const Morphism& f) {
  auto sf = family_map(pb.family, f);
  return sf && is_proper(*sf, pb);
}

bool separated_map(const ProperBound& pb, const Morphism& f) {
  auto sf = family_map(pb.family, f);
  return sf && is_separated(*sf, pb);
}

bool inst_sum_proper(const ProperBound& pb, const Morphism& f, const Morphism& g) {
  return proper_map(pb, sum_morphisms(f, g));
}

bool inst_sum_compact(const Context& ctx, const ProperBound& pb, const ObjectRef& x,
                      const ObjectRef& y) {
  return is_compact(pb.family.on(ctx.coproduct(x, y).object), pb);
}

bool inst_initial_fold_proper(const Context& ctx, const ProperBound& pb, const ObjectRef& x) {
  return proper_map(pb, initial_map(x)) && proper_map(pb, fold(ctx.coproduct(x, x)));
}

bool inst_sum_separated(const ProperBound& pb, const Morphism& f, const Morphism& g) {
  return separated_map(pb, sum_morphisms(f, g));
}

bool inst_sum_hausdorff(const Context& ctx, const ProperBound& pb, const ObjectRef& x,
                        const ObjectRef& y) {
  return is_hausdorff(pb.family.on(ctx.coproduct(x, y).object), pb);
}

bool inst_one_plus_one_hausdorff(const Context& ctx, const ProperBound& pb) {
  auto one = terminal_object(ctx.ordered());
  return is_hausdorff(pb.family.on(ctx.coproduct(one, one).object), pb);
}

Report closed_adjunction_report(const Context& ctx, const ClosureAssignment& fam,
                                const ObjectRef& x, const ObjectRef& y) {
  auto c = ctx.coproduct(x, y);
  return check_adjunction_closed(c, fam.on(x), fam.on(y), fam.on(c.object));
}

bool inst_sub_biproduct(const Context& ctx, const ObjectRef& x, const ObjectRef& y) {
  return verify_biproduct(sub_biproduct(ctx.system(), ctx.coproduct(x, y))).passed();
}

bool inst_mc_biproduct(const Context& ctx, const ClosureAssignment& fam, const ObjectRef& x,
                       const ObjectRef& y) {
  auto c = ctx.coproduct(x, y);
  return verify_biproduct(mc_biproduct(c, fam.on(x), fam.on(y), fam.on(c.object))).passed();
}

// nullopt when an endpoint is not a verified biproduct.
std::optional<bool> compute_roundtrip(const Context& ctx, const ObjectRef& x, const ObjectRef& y,
                                      const ObjectRef& p, const ObjectRef& q) {
  auto src = VerifiedBiproduct::certify(sub_biproduct(ctx.system(), ctx.coproduct(x, y)));
  auto tgt = VerifiedBiproduct::certify(sub_biproduct(ctx.system(), ctx.coproduct(p, q)));
  if (!src || !tgt) return std::nullopt;
  return check_matrix_roundtrip(*src, *tgt).passed();
}

// The round trip ignores closures, so every family would repeat the same
// work. Results are kept per context and object structure.
std::optional<bool> inst_roundtrip(const Context& ctx, const ObjectRef& x, const ObjectRef& y,
                                   const ObjectRef& p, const ObjectRef& q) {
  static std::mutex mu;
  static std::map<std::string, std::optional<bool>> cache;
  const std::string key = ctx.name() + "|" + x->describe() + "|" + y->describe() + "|" +
                          p->describe() + "|" + q->describe();
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto result = compute_roundtrip(ctx, x, y, p, q);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, result);
  return result;
}

// ---------------------------------------------------------------------------
// Enumeration helpers

std::vector<Mask> admissible(const Context& ctx, const ObjectRef& x) {
  std::vector<Mask> out;
  for (const auto& s : SubobjectLattice::enumerate(ctx.system(), x).elements()) {
    out.push_back(s.bits);
  }
  return out;
}

struct SumBijection {
  ObjectRef a, b, x, y;
  Coproduct source;
  Coproduct target;
};

// Every bijective morphism in E from A + B to X + Y, all four summands in
// `objs`.
template <typename Visit>
void visit_e_monos_between_sums(const Context& ctx, const std::vector<ObjectRef>& objs,
                                Visit visit) {
  MapConstraints inj;
  inj.injective = true;
  for (const auto& a : objs) {
    for (const auto& b : objs) {
      auto src = ctx.coproduct(a, b);
      for (const auto& x : objs) {
        for (const auto& y : objs) {
          if (x->size() + y->size() != src.object->size()) continue;
          auto tgt = ctx.coproduct(x, y);
          SumBijection sb{a, b, x, y, src, tgt};
          visit_morphisms(
              src.object, tgt.object,
              [&](const Morphism& e) {
                if (is_mono(e) && ctx.system().in_e(e)) visit(sb, e);
                return true;
              },
              inj);
        }
      }
    }
  }
}

json sum_map_json(const SumBijection& s, const Morphism& e) {
  return json{{"A", obj(s.a)}, {"B", obj(s.b)}, {"X", obj(s.x)}, {"Y", obj(s.y)},
              {"map", table_json(e)}};
}

std::vector<Morphism> all_maps(const std::vector<ObjectRef>& objs) {
  std::vector<Morphism> out;
  for (const auto& s : objs) {
    for (const auto& t : objs) {
      auto homs = all_morphisms(s, t);
      out.insert(out.end(), homs.begin(), homs.end());
    }
  }
  return out;
}

json pair_json(const Morphism& f, const Morphism& g) {
  return json{{"f", to_json(f)}, {"g", to_json(g)}};
}

// Side 1 of checker A on its own, used as a hypothesis gate.
Tracker sums_admissible(const Context& ctx, int bound) {
  Tracker t("sums-of-admissible-subobjects-admissible", "sum-admissible");
  const auto objs = ctx.objects(bound);
  for (const auto& x : objs) {
    const auto ax = admissible(ctx, x);
    for (const auto& y : objs) {
      const auto ay = admissible(ctx, y);
      for (Mask a : ax) {
        for (Mask b : ay) {
          t.record(inst_sum_admissible(ctx, x, y, a, b), [&] {
            return Instance{"a=" + mask_to_string(*x, a) + " in " + x->id() + ", b=" +
                                mask_to_string(*y, b) + " in " + y->id(),
                            json{{"X", obj(x)},
                                 {"Y", obj(y)},
                                 {"a", subset_json(*x, a)},
                                 {"b", subset_json(*y, b)}}};
          });
        }
      }
    }
  }
  return t;
}

// Condition (a) of checker B on its own.
Tracker sums_of_closed_embeddings(const Context& ctx, const ClosureAssignment& fam, int bound) {
  Tracker t("sum-of-closed-embeddings-closed-embedding", "sum-closed-embedding");
  const auto objs = ctx.objects(bound);
  std::vector<std::vector<Mask>> closed(objs.size());
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (Mask m : admissible(ctx, objs[i])) {
      if (is_closed_embedding(ctx, fam, Subobject{objs[i], m}.rep())) closed[i].push_back(m);
    }
  }
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = 0; j < objs.size(); ++j) {
      const auto& x = objs[i];
      const auto& y = objs[j];
      for (Mask a : closed[i]) {
        for (Mask b : closed[j]) {
          t.record(inst_sum_closed_embedding(ctx, fam, x, y, a, b), [&] {
            return Instance{"a=" + mask_to_string(*x, a) + " in " + x->id() + ", b=" +
                                mask_to_string(*y, b) + " in " + y->id() + ", a+b in " +
                                sum_name(x, y),
                            json{{"family", fam.name()},
                                 {"X", obj(x)},
                                 {"Y", obj(y)},
                                 {"a", subset_json(*x, a)},
                                 {"b", subset_json(*y, b)}}};
          });
        }
      }
    }
  }
  return t;
}

struct ClosedMorphismSides {
  Tracker sums{"sum-of-closed-morphisms-closed", "sum-closed-morphism"};
  Tracker injections{"coproduct-injections-closed", "injections-closed"};
};

ClosedMorphismSides closed_morphism_sides(const Context& ctx, const ClosureAssignment& fam,
                                          int bound) {
  ClosedMorphismSides out;
  const auto objs = ctx.objects(bound);
  std::vector<Morphism> closed;
  for (const auto& f : all_maps(objs)) {
    if (is_closed_map(fam, f)) closed.push_back(f);
  }
  for (const auto& f : closed) {
    for (const auto& g : closed) {
      out.sums.record(inst_sum_closed_morphism(fam, f, g), [&] {
        auto data = pair_json(f, g);
        data["family"] = fam.name();
        return Instance{"f=" + f.describe() + ", g=" + g.describe(), data};
      });
    }
  }
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      out.injections.record(inst_injections_closed(ctx, fam, x, y), [&] {
        return Instance{"injections of " + sum_name(x, y),
                        json{{"family", fam.name()}, {"X", obj(x)}, {"Y", obj(y)}}};
      });
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Checkers

Verdict check_sum_admissible(const Context& ctx, int bound) {
  auto v = start("A", ctx, "", bound);
  auto side1 = sums_admissible(ctx, bound);
  Tracker side2("E-monos-between-sums-pullback-stable", "E-mono-pullback");
  visit_e_monos_between_sums(ctx, ctx.objects(bound), [&](const SumBijection& s, const Morphism& e) {
    side2.record(inst_mono_pullback(ctx, s.target, e), [&] {
      return Instance{"e=" + e.describe(), sum_map_json(s, e)};
    });
  });
  side1.add_to(v, true);
  side2.add_to(v, true);
  finish(v);
  return v;
}

Verdict check_sum_closed_embeddings(const Context& ctx, const std::string& family, int bound) {
  auto v = start("B", ctx, family, bound);
  auto fam = ctx.family(family);
  const auto objs = ctx.objects(bound);
  auto a = sums_of_closed_embeddings(ctx, fam, bound);

  Tracker b("coproduct-injections-closed-embeddings", "injections-closed-embeddings");
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      b.record(inst_injections_closed_embeddings(ctx, fam, x, y), [&] {
        return Instance{"injections of " + sum_name(x, y),
                        json{{"family", family}, {"X", obj(x)}, {"Y", obj(y)}}};
      });
    }
  }

  Tracker c("dense-morphisms-between-sums-pullback-stable", "dense-pullback");
  for (const auto& sa : objs) {
    for (const auto& sb : objs) {
      if (static_cast<int>(sa->size() + sb->size()) > bound) continue;
      auto src = ctx.coproduct(sa, sb);
      for (const auto& x : objs) {
        for (const auto& y : objs) {
          auto tgt = ctx.coproduct(x, y);
          visit_morphisms(src.object, tgt.object, [&](const Morphism& d) {
            if (!is_dense_map(fam, d)) return true;
            c.record(inst_dense_pullback(fam, tgt, d), [&] {
              auto data = sum_map_json(SumBijection{sa, sb, x, y, src, tgt}, d);
              data["family"] = family;
              return Instance{"d=" + d.describe(), data};
            });
            return true;
          });
        }
      }
    }
  }
  a.add_to(v, true);
  b.add_to(v, true);
  c.add_to(v, true);
  finish(v);
  return v;
}

Verdict check_cor_sum_closed_morphisms(const Context& ctx, const std::string& family, int bound) {
  auto v = start("C", ctx, family, bound);
  auto fam = ctx.family(family);
  if (!sums_admissible(ctx, bound).value()) {
    return gated(std::move(v), "finite sums of admissible subobjects are not admissible");
  }
  auto sides = closed_morphism_sides(ctx, fam, bound);
  sides.sums.add_to(v, true);
  sides.injections.add_to(v, true);
  finish(v);
  return v;
}

Verdict check_lemma_componentwise_closure(const Context& ctx, const std::string& family,
                                          int bound) {
  auto v = start("D", ctx, family, bound);
  auto fam = ctx.family(family);
  if (!sums_of_closed_embeddings(ctx, fam, bound).value()) {
    return gated(std::move(v), "finite sums of closed embeddings are not closed embeddings");
  }
  Tracker t("closure-of-sum-is-sum-of-closures", "componentwise-closure");
  const auto objs = ctx.objects(bound);
  for (const auto& x : objs) {
    const auto ax = admissible(ctx, x);
    for (const auto& y : objs) {
      const auto ay = admissible(ctx, y);
      for (Mask a : ax) {
        for (Mask b : ay) {
          t.record(inst_componentwise_closure(ctx, fam, x, y, a, b), [&] {
            return Instance{"a=" + mask_to_string(*x, a) + " in " + x->id() + ", b=" +
                                mask_to_string(*y, b) + " in " + y->id(),
                            json{{"family", family},
                                 {"X", obj(x)},
                                 {"Y", obj(y)},
                                 {"a", subset_json(*x, a)},
                                 {"b", subset_json(*y, b)}}};
          });
        }
      }
    }
  }
  t.add_to(v, false);
  finish(v);
  return v;
}

Verdict check_factorization_of_sums(const Context& ctx, int bound) {
  auto v = start("E", ctx, "", bound);
  if (!sums_admissible(ctx, bound).value()) {
    return gated(std::move(v), "finite sums of admissible subobjects are not admissible");
  }
  Tracker fact("factorization-of-sum-is-sum-of-factorizations", "factorization-of-sum");
  Tracker eqs("sum-equations-for-composites-images-restrictions", "corollary-equations");
  const auto maps = all_maps(ctx.objects(bound));
  std::map<const FiniteObject*, std::vector<Mask>> subs;
  auto subs_of = [&](const ObjectRef& x) -> const std::vector<Mask>& {
    auto it = subs.find(x.get());
    if (it == subs.end()) it = subs.emplace(x.get(), admissible(ctx, x)).first;
    return it->second;
  };
  for (const auto& f : maps) {
    for (const auto& g : maps) {
      fact.record(inst_factorization_of_sum(ctx, f, g), [&] {
        return Instance{"f=" + f.describe() + ", g=" + g.describe(), pair_json(f, g)};
      });
      for (Mask ma : subs_of(f.source())) {
        for (Mask mb : subs_of(g.source())) {
          eqs.record(inst_corollary_equations(ctx, f, g, ma, mb), [&] {
            auto data = pair_json(f, g);
            data["m_A"] = subset_json(*f.source(), ma);
            data["m_B"] = subset_json(*g.source(), mb);
            return Instance{"f=" + f.describe() + ", g=" + g.describe() + ", m_A=" +
                                mask_to_string(*f.source(), ma) + ", m_B=" +
                                mask_to_string(*g.source(), mb),
                            data};
          });
        }
      }
    }
  }
  fact.add_to(v, false);
  eqs.add_to(v, false);
  finish(v);
  return v;
}

Verdict check_pb_stability_closed_E_monos(const Context& ctx, const std::string& family,
                                          int bound) {
  auto v = start("F", ctx, family, bound);
  auto fam = ctx.family(family);
  if (!sums_of_closed_embeddings(ctx, fam, bound).value()) {
    return gated(std::move(v), "finite sums of closed embeddings are not closed embeddings");
  }
  Tracker t("closed-E-monos-between-sums-pullback-stable", "closed-E-mono-pullback");
  visit_e_monos_between_sums(ctx, ctx.objects(bound), [&](const SumBijection& s, const Morphism& e) {
    if (!is_closed_map(fam, e)) return;
    t.record(inst_closed_e_mono_pullback(ctx, fam, s.target, e), [&] {
      auto data = sum_map_json(s, e);
      data["family"] = family;
      return Instance{"e=" + e.describe(), data};
    });
  });
  t.add_to(v, false);
  finish(v);
  return v;
}

Verdict check_sum_proper(const Context& ctx, const std::string& family, int bound) {
  auto v = start("G", ctx, family, bound);
  auto fam = ctx.family(family);
  {
    auto sides = closed_morphism_sides(ctx, fam, bound);
    if (!sides.sums.value() || !sides.injections.value()) {
      return gated(std::move(v), "finite sums of closed morphisms are not closed");
    }
  }
  const auto pb = ctx.proper_bound(family, bound);
  const auto objs = ctx.objects(bound);
  Tracker part1("sum-of-proper-morphisms-proper", "sum-proper");
  std::vector<Morphism> proper;
  for (const auto& f : all_maps(objs)) {
    if (proper_map(pb, f)) proper.push_back(f);
  }
  for (const auto& f : proper) {
    for (const auto& g : proper) {
      part1.record(inst_sum_proper(pb, f, g), [&] {
        auto data = pair_json(f, g);
        data["family"] = family;
        data["bound"] = bound;
        return Instance{"f=" + f.describe() + ", g=" + g.describe(), data};
      });
    }
  }
  Tracker compact("sums-of-compact-spaces-compact", "sum-compact");
  std::vector<ObjectRef> compacts;
  for (const auto& x : objs) {
    if (is_compact(fam.on(x), pb)) compacts.push_back(x);
  }
  for (const auto& x : compacts) {
    for (const auto& y : compacts) {
      compact.record(inst_sum_compact(ctx, pb, x, y), [&] {
        return Instance{sum_name(x, y),
                        json{{"family", family}, {"bound", bound}, {"X", obj(x)}, {"Y", obj(y)}}};
      });
    }
  }
  Tracker fold_side("initial-maps-and-folds-proper", "initial-fold-proper");
  for (const auto& x : objs) {
    fold_side.record(inst_initial_fold_proper(ctx, pb, x), [&] {
      return Instance{"0 -> " + x->id() + " and fold on " + sum_name(x, x),
                      json{{"family", family}, {"bound", bound}, {"X", obj(x)}}};
    });
  }
  part1.add_to(v, false);
  compact.add_to(v, true);
  fold_side.add_to(v, true);
  finish(v);
  return v;
}

Verdict check_sum_separated(const Context& ctx, const std::string& family, int bound) {
  auto v = start("H", ctx, family, bound);
  auto fam = ctx.family(family);
  {
    auto sides = closed_morphism_sides(ctx, fam, bound);
    if (!sides.sums.value() || !sides.injections.value()) {
      return gated(std::move(v), "finite sums of closed morphisms are not closed");
    }
  }
  const auto pb = ctx.proper_bound(family, bound);
  const auto objs = ctx.objects(bound);
  Tracker part1("sum-of-separated-morphisms-separated", "sum-separated");
  std::vector<Morphism> separated;
  for (const auto& f : all_maps(objs)) {
    if (separated_map(pb, f)) separated.push_back(f);
  }
  for (const auto& f : separated) {
    for (const auto& g : separated) {
      part1.record(inst_sum_separated(pb, f, g), [&] {
        auto data = pair_json(f, g);
        data["family"] = family;
        data["bound"] = bound;
        return Instance{"f=" + f.describe() + ", g=" + g.describe(), data};
      });
    }
  }
  Tracker haus("sums-of-hausdorff-spaces-hausdorff", "sum-hausdorff");
  std::vector<ObjectRef> hausdorff;
  for (const auto& x : objs) {
    if (is_hausdorff(fam.on(x), pb)) hausdorff.push_back(x);
  }
  for (const auto& x : hausdorff) {
    for (const auto& y : hausdorff) {
      haus.record(inst_sum_hausdorff(ctx, pb, x, y), [&] {
        return Instance{sum_name(x, y),
                        json{{"family", family}, {"bound", bound}, {"X", obj(x)}, {"Y", obj(y)}}};
      });
    }
  }
  Tracker two("one-plus-one-hausdorff", "one-plus-one-hausdorff");
  two.record(inst_one_plus_one_hausdorff(ctx, pb), [&] {
    return Instance{"1+1", json{{"family", family}, {"bound", bound}}};
  });
  part1.add_to(v, false);
  haus.add_to(v, true);
  two.add_to(v, true);
  finish(v);
  return v;
}

Report check_adjunction_closed(const Coproduct& c, const Space& s, const Space& t,
                               const Space& sum) {
  Report r{"closed adjunction " + c.object->id(), {}};
  auto& entry = r.add("closure-of-join-left-adjoint-to-iota");
  auto sub = [](Mask a, Mask b) { return (a & ~b) == 0; };
  const auto cx = closed_lattice(s);
  const auto cy = closed_lattice(t);
  const auto cxy = closed_lattice(sum);
  for (Mask u : cx) {
    for (Mask w : cy) {
      const Mask j = sum.closure(c.inl.image_of(u) | c.inr.image_of(w));
      for (Mask p : cxy) {
        ++entry.instances;
        const bool lhs = sub(u, c.inl.preimage_of(p)) && sub(w, c.inr.preimage_of(p));
        const bool rhs = sub(j, p);
        if (lhs != rhs) {
          fail(entry,
               "u=" + mask_to_string(*c.left(), u) + " v=" + mask_to_string(*c.right(), w) +
                   " w=" + mask_to_string(*c.object, p),
               json{{"u", subset_json(*c.left(), u)},
                    {"v", subset_json(*c.right(), w)},
                    {"w", subset_json(*c.object, p)}});
        }
      }
    }
  }
  return r;
}

Verdict check_adjunctions(const Context& ctx, const std::string& family, int bound) {
  auto v = start("adjunctions", ctx, family, bound);
  auto fam = ctx.family(family);
  const auto objs = ctx.objects(bound);
  Tracker sub("admissible-subobject-adjunction", "sub-adjunction");
  Tracker closed("closed-subobject-adjunction", "closed-adjunction");
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      auto data = json{{"X", obj(x)}, {"Y", obj(y)}};
      auto rs = check_adjunction_admissible(ctx.system(), x, y);
      sub.record(rs.passed(), [&] { return Instance{sum_name(x, y), data}; });
      auto rc = closed_adjunction_report(ctx, fam, x, y);
      closed.record(rc.passed(), [&] {
        auto d = data;
        d["family"] = family;
        return Instance{sum_name(x, y), d};
      });
    }
  }
  sub.add_to(v, false);
  closed.add_to(v, false);
  finish(v);
  return v;
}

Verdict check_biproducts(const Context& ctx, const std::string& family, int bound) {
  auto v = start("biproduct", ctx, family, bound);
  auto fam = ctx.family(family);
  const auto objs = ctx.objects(bound);
  Tracker sub("sub-of-sum-is-biproduct", "sub-biproduct");
  Tracker mc("closed-subobjects-of-sum-biproduct", "mc-biproduct");
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      auto data = json{{"X", obj(x)}, {"Y", obj(y)}};
      sub.record(inst_sub_biproduct(ctx, x, y), [&] { return Instance{sum_name(x, y), data}; });
      mc.record(inst_mc_biproduct(ctx, fam, x, y), [&] {
        auto d = data;
        d["family"] = family;
        return Instance{sum_name(x, y), d};
      });
    }
  }
  Tracker round("hom-matrix-round-trips", "matrix-roundtrip");
  const auto small = ctx.objects(std::min(bound, 2));
  auto record_round = [&](const ObjectRef& x, const ObjectRef& y, const ObjectRef& p,
                          const ObjectRef& q) {
    auto ok = inst_roundtrip(ctx, x, y, p, q);
    round.record(ok.value_or(false), [&] {
      return Instance{sum_name(x, y) + " -> " + sum_name(p, q),
                      json{{"X", obj(x)}, {"Y", obj(y)}, {"P", obj(p)}, {"Q", obj(q)}}};
    });
  };
  for (const auto& x : small) {
    for (const auto& y : small) {
      if (ctx.ordered()) {
        record_round(x, y, x, y);
        record_round(x, y, y, x);
        continue;
      }
      for (const auto& p : small) {
        for (const auto& q : small) record_round(x, y, p, q);
      }
    }
  }
  auto a = sums_of_closed_embeddings(ctx, fam, bound);
  sub.add_to(v, false);
  round.add_to(v, false);
  mc.add_to(v, true);
  a.add_to(v, true);
  finish(v);
  return v;
}

namespace {

void absorb(Verdict& v, const std::string& validator, const Report& r, int bound) {
  for (const auto& e : r.checks) {
    if (!e.required) continue;
    const std::string id = validator + ":" + e.id;
    v.claims.push_back(Condition{id, e.passed});
    v.counts[id] = e.instances;
    if (!e.passed) {
      v.witnesses.push_back(Witness{
          "validator-check", id, false, e.witness,
          json{{"validator", validator}, {"check", e.id}, {"bound", bound},
               {"instance", e.witness_data}}});
    }
  }
}

Report run_validator(const Context& ctx, const std::string& validator, int bound) {
  if (validator == "factorization-system") {
    const auto objs = ctx.objects(bound);
    return validate_system(ctx.system(), objs);
  }
  if (validator == "extensive") return validate_extensive(ctx, bound);
  const std::string prefix = "closure/";
  if (validator.rfind(prefix, 0) == 0) {
    const auto objs = ctx.objects(bound);
    return validate_closure(ctx.family(validator.substr(prefix.size())), objs);
  }
  throw CategoryError("unknown validator: " + validator);
}

}  // namespace

Verdict check_validators(const Context& ctx, const std::vector<std::string>& families,
                         int bound) {
  auto v = start("validate", ctx, "", bound);
  absorb(v, "factorization-system", run_validator(ctx, "factorization-system", bound), bound);
  absorb(v, "extensive", run_validator(ctx, "extensive", bound), bound);
  for (const auto& f : families) {
    absorb(v, "closure/" + f, run_validator(ctx, "closure/" + f, bound), bound);
  }
  finish(v);
  return v;
}

// ---------------------------------------------------------------------------
// Replay

bool replay(const Context& ctx, const Witness& w) {
  const auto& d = w.data;
  auto object = [&](const char* key) { return object_from_json(d.at(key), ctx.ordered()); };
  auto fam = [&] { return ctx.family(d.at("family").get<std::string>()); };
  auto bound = [&] { return d.at("bound").get<int>(); };
  auto sum_map = [&](Coproduct& target) {
    auto src = ctx.coproduct(object("A"), object("B"));
    target = ctx.coproduct(object("X"), object("Y"));
    return Morphism::from_labels(src.object, target.object,
                                 d.at("map").get<std::vector<std::string>>());
  };
  auto morphism = [&](const char* key) { return morphism_from_json(d.at(key)); };
  const auto& k = w.kind;

  if (k == "sum-admissible" || k == "sum-closed-embedding" || k == "componentwise-closure") {
    auto x = object("X");
    auto y = object("Y");
    Mask a = subset_from_json(*x, d.at("a"));
    Mask b = subset_from_json(*y, d.at("b"));
    if (k == "sum-admissible") return inst_sum_admissible(ctx, x, y, a, b);
    if (k == "sum-closed-embedding") return inst_sum_closed_embedding(ctx, fam(), x, y, a, b);
    return inst_componentwise_closure(ctx, fam(), x, y, a, b);
  }
  if (k == "E-mono-pullback" || k == "dense-pullback" || k == "closed-E-mono-pullback") {
    Coproduct target = ctx.coproduct(object("X"), object("Y"));
    auto e = sum_map(target);
    if (k == "E-mono-pullback") return inst_mono_pullback(ctx, target, e);
    if (k == "dense-pullback") return inst_dense_pullback(fam(), target, e);
    return inst_closed_e_mono_pullback(ctx, fam(), target, e);
  }
  if (k == "injections-closed-embeddings") {
    return inst_injections_closed_embeddings(ctx, fam(), object("X"), object("Y"));
  }
  if (k == "injections-closed") return inst_injections_closed(ctx, fam(), object("X"), object("Y"));
  if (k == "sum-closed-morphism") return inst_sum_closed_morphism(fam(), morphism("f"), morphism("g"));
  if (k == "factorization-of-sum") return inst_factorization_of_sum(ctx, morphism("f"), morphism("g"));
  if (k == "corollary-equations") {
    auto f = morphism("f");
    auto g = morphism("g");
    return inst_corollary_equations(ctx, f, g, subset_from_json(*f.source(), d.at("m_A")),
                                    subset_from_json(*g.source(), d.at("m_B")));
  }
  if (k == "sum-proper" || k == "sum-separated") {
    auto pb = ctx.proper_bound(d.at("family").get<std::string>(), bound());
    if (k == "sum-proper") return inst_sum_proper(pb, morphism("f"), morphism("g"));
    return inst_sum_separated(pb, morphism("f"), morphism("g"));
  }
  if (k == "sum-compact" || k == "sum-hausdorff") {
    auto pb = ctx.proper_bound(d.at("family").get<std::string>(), bound());
    if (k == "sum-compact") return inst_sum_compact(ctx, pb, object("X"), object("Y"));
    return inst_sum_hausdorff(ctx, pb, object("X"), object("Y"));
  }
  if (k == "initial-fold-proper") {
    auto pb = ctx.proper_bound(d.at("family").get<std::string>(), bound());
    return inst_initial_fold_proper(ctx, pb, object("X"));
  }
  if (k == "one-plus-one-hausdorff") {
    auto pb = ctx.proper_bound(d.at("family").get<std::string>(), bound());
    return inst_one_plus_one_hausdorff(ctx, pb);
  }
  if (k == "sub-adjunction") {
    return check_adjunction_admissible(ctx.system(), object("X"), object("Y")).passed();
  }
  if (k == "closed-adjunction") {
    return closed_adjunction_report(ctx, fam(), object("X"), object("Y")).passed();
  }
  if (k == "sub-biproduct") return inst_sub_biproduct(ctx, object("X"), object("Y"));
  if (k == "mc-biproduct") return inst_mc_biproduct(ctx, fam(), object("X"), object("Y"));
  if (k == "matrix-roundtrip") {
    return inst_roundtrip(ctx, object("X"), object("Y"), object("P"), object("Q")).value_or(false);
  }
  if (k == "validator-check") {
    auto r = run_validator(ctx, d.at("validator").get<std::string>(), bound());
    const auto* e = r.find(d.at("check").get<std::string>());
    if (!e) throw CategoryError("validator check not found: " + d.at("check").get<std::string>());
    return e->passed;
  }
  throw CategoryError("unknown witness kind: " + k);
}

}  // namespace extctx
