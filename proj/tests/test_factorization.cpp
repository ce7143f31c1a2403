#include <gtest/gtest.h>

#include "extctx/context.hpp"
#include "extctx/lattice.hpp"

using namespace extctx;

namespace {

ObjectRef set(std::vector<std::string> labels, std::string id = "X") {
  return FiniteObject::make_set(std::move(id), std::move(labels));
}

}  // namespace

TEST(DownArrow, IsoIsOrthogonalToEverything) {
  auto x = set({"a", "b"});
  auto y = set({"c", "d", "e"}, "Y");
  auto e = Morphism::identity(x);
  for (const auto& m : all_morphisms(x, y)) EXPECT_TRUE(down_arrow(e, m));
}

TEST(DownArrow, SurjectionAgainstInclusion) {
  auto ab = set({"a", "b"});
  auto c = set({"c"}, "C");
  auto cd = set({"c", "d"}, "D");
  auto e = Morphism::from_labels(ab, c, {"c", "c"});
  auto m = Morphism::from_labels(c, cd, {"c"});
  EXPECT_TRUE(down_arrow(e, m));
}

TEST(DownArrow, InclusionNotOrthogonalToItself) {
  auto a = set({"a"});
  auto ab = set({"a", "b"}, "AB");
  auto m = Morphism::from_labels(a, ab, {"a"});
  EXPECT_FALSE(down_arrow(m, m));
}

TEST(Factorize, MonoHasIsoEPart) {
  auto sys = surjection_injection_system();
  auto x = set({"a"});
  auto y = set({"c", "d"}, "Y");
  for (const auto& f : all_morphisms(x, y)) EXPECT_TRUE(is_iso(sys.factorize(f).e_part));
}

TEST(Factorize, EpiHasIsoMPart) {
  auto sys = surjection_embedding_system();
  auto s = FiniteObject::make_preorder("S", {"a", "b"}, {{"a", "b"}});
  EXPECT_TRUE(is_iso(sys.factorize(terminal_map(s)).m_part));
  auto bij = Morphism::identity(FiniteObject::make_preorder("D", {"a", "b"}, FiniteObject::OrderPairs{}));
  EXPECT_TRUE(is_iso(sys.factorize(bij).m_part));
}

TEST(Factorize, ConstantMapHasPointMiddle) {
  auto sys = surjection_injection_system();
  auto ab = set({"a", "b"});
  auto cd = set({"c", "d"}, "Y");
  auto fz = sys.factorize(Morphism::from_labels(ab, cd, {"c", "c"}));
  ASSERT_EQ(fz.mid()->size(), 1U);
  EXPECT_EQ(fz.mid()->label(0), "c");
}

TEST(Factorize, ContinuousBijectionIsEButNotM) {
  auto sys = surjection_embedding_system();
  auto d = FiniteObject::make_preorder("D", {"a", "b"}, FiniteObject::OrderPairs{});
  auto s = FiniteObject::make_preorder("S", {"a", "b"}, {{"a", "b"}});
  auto f = Morphism::from_labels(d, s, {"a", "b"});
  EXPECT_TRUE(sys.in_e(f));
  EXPECT_FALSE(sys.in_m(f));
  EXPECT_TRUE(is_mono(f));
  EXPECT_FALSE(is_iso(f));
}

TEST(ImagePreimage, Examples) {
  auto sys = surjection_injection_system();
  auto ab = set({"a", "b"});
  auto c = set({"c"}, "C");
  auto k = Morphism::from_labels(ab, c, {"c", "c"});
  EXPECT_EQ(image(sys, k, top(ab)), top(c));
  for (Mask m = 0; m < 4; ++m) {
    Subobject s{ab, m};
    EXPECT_EQ(image(sys, Morphism::identity(ab), s), s);
  }
  auto cp = coproduct(ab, c);
  for (Mask m = 0; m < 4; ++m) {
    Subobject s{ab, m};
    EXPECT_EQ(preimage(sys, cp.inl, image(sys, cp.inl, s)), s);
  }
}

TEST(ImagePreimage, RestrictionAndCorestriction) {
  auto sys = surjection_injection_system();
  auto ab = set({"a", "b"});
  auto cd = set({"c", "d"}, "Y");
  auto f = Morphism::from_labels(ab, cd, {"c", "c"});
  auto r = restriction(sys, f, top(ab));
  EXPECT_TRUE(sys.in_e(r));
  EXPECT_EQ(r.target()->size(), 1U);
  auto cr = corestriction(sys, f, Subobject{cd, bit(1)});
  EXPECT_TRUE(cr.source()->empty());
}

TEST(ImagePreimage, SubobjectOfWrongObjectThrows) {
  auto sys = surjection_injection_system();
  auto ab = set({"a", "b"});
  auto c = set({"c"}, "C");
  EXPECT_THROW(image(sys, Morphism::identity(ab), top(c)), CategoryError);
}

// Exhaustive properties over both contexts at bound 2.
class FactorizationProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(FactorizationProperties, GaloisAndFunctoriality) {
  auto ctx = builtin(GetParam());
  const auto& sys = ctx.system();
  auto objs = ctx.objects(2);
  long checked = 0;
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      for (const auto& f : ctx.morphisms(x, y)) {
        for (Mask m = 0; m <= x->all(); ++m) {
          Subobject sm{x, m};
          auto im = image(sys, f, sm);
          for (Mask n = 0; n <= y->all(); ++n) {
            Subobject sn{y, n};
            bool lhs = factors_through(im, sn);
            bool rhs = factors_through(sm, preimage(sys, f, sn));
            ASSERT_EQ(lhs, rhs) << f.describe();
            ++checked;
          }
          for (const auto& z : objs) {
            for (const auto& g : ctx.morphisms(y, z)) {
              ASSERT_EQ(image(sys, compose(g, f), sm), image(sys, g, im));
            }
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST_P(FactorizationProperties, FactorizationsAgreeUpToIso) {
  auto ctx = builtin(GetParam());
  const auto& sys = ctx.system();
  auto objs = ctx.objects(3);
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      for (const auto& f : ctx.morphisms(x, y)) {
        auto fz = sys.factorize(f);
        ASSERT_EQ(compose(fz.m_part, fz.e_part), f);
        ASSERT_TRUE(sys.in_e(fz.e_part));
        ASSERT_TRUE(sys.in_m(fz.m_part));
        auto alt = image_factorization(f);
        ASSERT_TRUE(same_factorization_up_to_iso(fz, alt));
      }
    }
  }
}

TEST_P(FactorizationProperties, ValidatorPassesAtThree) {
  auto ctx = builtin(GetParam());
  auto objs = ctx.objects(3);
  auto r = validate_system(ctx.system(), objs);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed || !c.required) << c.id << ": " << c.witness;
}

INSTANTIATE_TEST_SUITE_P(Contexts, FactorizationProperties, ::testing::Values("finset", "finpre"));

TEST(Validator, SwappedClassesFailWithOrthogonalityWitness) {
  auto ctx = swapped_classes_context();
  auto objs = ctx.objects(2);
  auto r = validate_system(ctx.system(), objs);
  EXPECT_FALSE(r.passed());
  bool orthogonality = false;
  for (const auto& id : {"E-equals-M-up", "M-equals-E-down"}) {
    const auto* c = r.find(id);
    ASSERT_NE(c, nullptr) << id;
    if (!c->passed && !c->witness.empty()) orthogonality = true;
  }
  EXPECT_TRUE(orthogonality);
}
