#include <gtest/gtest.h>

#include "extctx/closure.hpp"
#include "extctx/context.hpp"

using namespace extctx;

namespace {

ObjectRef sierpinski() { return FiniteObject::make_preorder("S", {"a", "b"}, {{"a", "b"}}); }
ObjectRef discrete2() {
  return FiniteObject::make_preorder("D", {"a", "b"}, FiniteObject::OrderPairs{});
}
Space alex(const ObjectRef& x) { return closure_family("alexandrov").on(x); }
Space ident(const ObjectRef& x) { return closure_family("identity").on(x); }
Space indisc(const ObjectRef& x) { return closure_family("indiscrete").on(x); }

// Inclusion of the single element `label` of the Sierpinski space.
SpaceMorphism point_into_sierpinski(const std::string& label) {
  auto s = sierpinski();
  Mask m = bit(*s->index_of(label));
  auto sub = s->restrict_to(m);
  return SpaceMorphism(Morphism::from_labels(sub, s, {label}), subspace(alex(s), m), alex(s));
}

ProperBound bound_for(const std::string& family, int n) {
  return builtin("finpre").proper_bound(family, n);
}

}  // namespace

TEST(ClosureFamily, BuiltinsValidate) {
  auto objs = builtin("finpre").objects(3);
  for (const auto& name : closure_family_names()) {
    auto r = validate_closure(closure_family(name), objs);
    EXPECT_TRUE(r.passed()) << name;
  }
  EXPECT_THROW(closure_family("cofinite"), std::invalid_argument);
}

TEST(ClosureFamily, ValidatorCatchesNonIdempotentOperator) {
  auto x = FiniteObject::make_preorder("C", {"a", "b", "c"}, FiniteObject::OrderPairs{});
  // Adds the next element: extensive and monotone, not idempotent.
  Space s(x, [](Mask m) { return (m | (m << 1)) & Mask{7}; }, false, "shift");
  auto r = validate_space(s);
  EXPECT_FALSE(r.passed());
  ASSERT_NE(r.find("idempotent"), nullptr);
  EXPECT_FALSE(r.find("idempotent")->passed);
}

TEST(Continuity, Examples) {
  auto s = sierpinski();
  auto id = Morphism::identity(s);
  EXPECT_TRUE(is_continuous(id, alex(s), alex(s)));
  EXPECT_TRUE(is_continuous(id, ident(s), alex(s)));
  EXPECT_FALSE(is_continuous(id, alex(s), ident(s)));
  EXPECT_THROW(SpaceMorphism(id, alex(s), ident(s)), CategoryError);
}

TEST(Continuity, MonotoneMapsAreAlexandrovContinuous) {
  auto objs = builtin("finpre").objects(3);
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      for (const auto& f : all_morphisms(x, y)) ASSERT_TRUE(is_continuous(f, alex(x), alex(y)));
    }
  }
}

TEST(ClosedSubobjects, Examples) {
  auto s = sierpinski();
  EXPECT_TRUE(is_closed_subobject(alex(s), 0));
  EXPECT_TRUE(is_closed_subobject(alex(s), s->all()));
  EXPECT_TRUE(is_closed_subobject(alex(s), bit(0)));
  EXPECT_FALSE(is_closed_subobject(alex(s), bit(1)));
  auto x = FiniteObject::make_preorder("C", {"a", "b", "c"}, FiniteObject::OrderPairs{});
  EXPECT_EQ(closed_lattice(indisc(x)), (std::vector<Mask>{0, x->all()}));
}

TEST(ClosedMorphism, Examples) {
  auto s = sierpinski();
  EXPECT_TRUE(is_closed_morphism(SpaceMorphism(Morphism::identity(s), alex(s), alex(s))));
  EXPECT_TRUE(is_closed_morphism(point_into_sierpinski("a")));
  auto dense = point_into_sierpinski("b");
  EXPECT_FALSE(is_closed_morphism(dense));
  EXPECT_TRUE(closed_morphism_violation(dense).has_value());
}

TEST(DenseClosed, Examples) {
  auto s = sierpinski();
  auto id = SpaceMorphism(Morphism::identity(s), alex(s), alex(s));
  auto [d0, c0] = dense_closed_factorize(id);
  EXPECT_TRUE(is_iso(d0.map()));
  EXPECT_TRUE(is_iso(c0.map()));

  auto [d1, c1] = dense_closed_factorize(point_into_sierpinski("b"));
  EXPECT_TRUE(is_dense(d1));
  EXPECT_EQ(d1.map().target()->size(), 2U);
  EXPECT_TRUE(is_iso(c1.map()));

  auto [d2, c2] = dense_closed_factorize(point_into_sierpinski("a"));
  EXPECT_TRUE(is_iso(d2.map()));
  EXPECT_EQ(c2.map().image(), bit(0));
  EXPECT_TRUE(is_closed_morphism(c2));
}

TEST(DenseClosed, FactorizationInvariants) {
  auto ctx = builtin("finpre");
  for (const auto& fam : closure_family_names()) {
    auto c = closure_family(fam);
    auto objs = ctx.objects(3);
    for (const auto& x : objs) {
      for (const auto& y : objs) {
        for (const auto& f : all_morphisms(x, y)) {
          if (!is_continuous(f, c.on(x), c.on(y))) continue;
          SpaceMorphism sf(f, c.on(x), c.on(y));
          auto [d, m] = dense_closed_factorize(sf);
          ASSERT_EQ(compose(m.map(), d.map()), f);
          ASSERT_TRUE(is_dense(d));
          ASSERT_TRUE(m.map().embedding());
          ASSERT_TRUE(is_closed_subobject(m.target(), m.map().image()));
        }
      }
    }
  }
}

TEST(ClosedMorphism, ClosedInclusionsAreClosedAndClosureTransitive) {
  auto objs = builtin("finpre").objects(3);
  for (const auto& fam : closure_family_names()) {
    auto c = closure_family(fam);
    for (const auto& x : objs) {
      auto sx = c.on(x);
      for (Mask m : closed_lattice(sx)) {
        auto sub = subspace(sx, m);
        auto sub_obj = sub.object();
        std::vector<std::size_t> tab;
        for (std::size_t i = 0; i < x->size(); ++i) {
          if (has(m, i)) tab.push_back(i);
        }
        SpaceMorphism inc(Morphism::make(sub_obj, x, tab), sub, sx);
        ASSERT_TRUE(is_closed_morphism(inc)) << fam << " " << x->describe();
        // A subset of a closed m is closed in the subspace iff it is closed in x.
        for (Mask u = 0; u <= sub_obj->all(); ++u) {
          ASSERT_EQ(sub.is_closed(u), sx.is_closed(inc.map().image_of(u)));
        }
      }
    }
  }
}

TEST(EMorphisms, AreDense) {
  auto ctx = builtin("finpre");
  auto objs = ctx.objects(3);
  for (const auto& fam : closure_family_names()) {
    auto c = closure_family(fam);
    for (const auto& x : objs) {
      for (const auto& y : objs) {
        for (const auto& f : all_morphisms(x, y)) {
          if (!ctx.system().in_e(f) || !is_continuous(f, c.on(x), c.on(y))) continue;
          ASSERT_TRUE(is_dense(SpaceMorphism(f, c.on(x), c.on(y))));
        }
      }
    }
  }
}

TEST(Proper, Examples) {
  auto s = sierpinski();
  auto pb = bound_for("alexandrov", 3);
  EXPECT_TRUE(is_proper(SpaceMorphism(Morphism::identity(s), alex(s), alex(s)), pb));
  EXPECT_TRUE(is_proper(point_into_sierpinski("a"), pb));
  auto v = proper_violation(point_into_sierpinski("b"), pb);
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(is_iso(v->w));
}

TEST(Separated, Examples) {
  auto pb = bound_for("alexandrov", 3);
  auto s = sierpinski();
  auto c = coproduct(s, terminal_object(true));
  EXPECT_TRUE(is_separated(SpaceMorphism(c.inl, alex(s), sum_space(c, alex(s), alex(c.right()))), pb));
  auto d = discrete2();
  auto dd = coproduct(d, d);
  auto f = fold(dd);
  EXPECT_TRUE(is_separated(SpaceMorphism(f, alex(dd.object), alex(d)), pb));
  auto one = terminal_object(true);
  EXPECT_FALSE(is_separated(SpaceMorphism(terminal_map(s), alex(s), alex(one)), pb));
}

TEST(CompactHausdorff, Examples) {
  auto pb = bound_for("alexandrov", 3);
  for (const auto& x : builtin("finpre").objects(3)) EXPECT_TRUE(is_compact(alex(x), pb));
  EXPECT_TRUE(is_hausdorff(alex(discrete2()), pb));
  EXPECT_FALSE(is_hausdorff(alex(sierpinski()), pb));
}

TEST(CompactHausdorff, HausdorffIffDiscreteForAlexandrov) {
  auto pb = bound_for("alexandrov", 3);
  for (const auto& x : builtin("finpre").objects(3)) {
    EXPECT_EQ(is_hausdorff(alex(x), pb), x->strict_pairs().empty()) << x->describe();
  }
}

TEST(SumSpace, Examples) {
  auto s = sierpinski();
  auto d = discrete2();
  auto c = coproduct(s, d);
  auto sum = sum_space(c, alex(s), alex(d));
  auto whole = alex(c.object);
  for (Mask m = 0; m <= c.object->all(); ++m) ASSERT_EQ(sum.closure(m), whole.closure(m));

  auto z = coproduct(s, initial_object(true));
  auto sz = sum_space(z, alex(s), alex(z.right()));
  for (Mask m = 0; m <= s->all(); ++m) EXPECT_EQ(sz.closure(m), alex(s).closure(m));

  auto si = sum_space(c, ident(s), ident(d));
  for (Mask m = 0; m <= c.object->all(); ++m) ASSERT_EQ(si.closure(m), m);
}

TEST(SumSpace, InjectionsContinuous) {
  auto objs = builtin("finpre").objects(2);
  for (const auto& fam : closure_family_names()) {
    auto cf = closure_family(fam);
    for (const auto& x : objs) {
      for (const auto& y : objs) {
        auto c = coproduct(x, y);
        auto sum = sum_space(c, cf.on(x), cf.on(y));
        EXPECT_TRUE(is_continuous(c.inl, cf.on(x), sum));
        EXPECT_TRUE(is_continuous(c.inr, cf.on(y), sum));
      }
    }
  }
}
