#include <gtest/gtest.h>

#include "extctx/context.hpp"
#include "extctx/lattice.hpp"
#include "extctx/semilattice.hpp"

using namespace extctx;

namespace {

LatticeRef powerset(const ObjectRef& x) {
  std::vector<Mask> all;
  for (Mask m = 0; m <= x->all(); ++m) all.push_back(m);
  return JoinSemilattice::of_masks(x->id(), *x, all);
}

}  // namespace

TEST(JoinSemilattice, RejectsNonSemilattice) {
  // "join" that is not idempotent.
  JoinSemilattice::Table t{{0, 1}, {1, 0}};
  EXPECT_THROW(JoinSemilattice::make("bad", {"0", "1"}, t, 0), CategoryError);
}

TEST(JoinSemilattice, Irreducibles) {
  auto x = FiniteObject::make_set("X", {"a", "b", "c"});
  auto l = powerset(x);
  EXPECT_EQ(l->size(), 8U);
  EXPECT_EQ(l->join_irreducibles().size(), 3U);
}

TEST(SemilatticeHom, RejectsNonHom) {
  auto x = FiniteObject::make_set("X", {"a"});
  auto l = powerset(x);
  EXPECT_THROW(SemilatticeHom::make(l, l, {1, 1}), CategoryError);
}

TEST(SemilatticeHom, EnumerationCountsAndLaws) {
  auto x = FiniteObject::make_set("X", {"a", "b"});
  auto l = powerset(x);
  // Homs from a free semilattice on 2 generators are pairs of elements.
  auto homs = enumerate_homs(l, l);
  EXPECT_EQ(homs.size(), 16U);
  for (const auto& f : homs) {
    EXPECT_EQ(compose(f, SemilatticeHom::identity(l)), f);
    EXPECT_EQ(join(f, SemilatticeHom::zero(l, l)), f);
  }
}

TEST(Biproduct, SubOnePlusOne) {
  auto sys = surjection_injection_system();
  auto one = terminal_object(false);
  auto d = sub_biproduct(sys, coproduct(one, one));
  EXPECT_EQ(d.kxy->size(), 4U);
  EXPECT_TRUE(verify_biproduct(d).passed());
  EXPECT_TRUE(VerifiedBiproduct::certify(d).has_value());
}

TEST(Biproduct, DegenerateEmptySummand) {
  auto sys = surjection_embedding_system();
  auto d = sub_biproduct(sys, coproduct(initial_object(true), terminal_object(true)));
  EXPECT_TRUE(verify_biproduct(d).passed());
}

TEST(Biproduct, BrokenProjectionFailsWithEquationId) {
  auto sys = surjection_injection_system();
  auto one = terminal_object(false);
  auto d = sub_biproduct(sys, coproduct(one, one));
  d.proj_x = SemilatticeHom::zero(d.kxy, d.kx);
  auto r = verify_biproduct(d);
  EXPECT_FALSE(r.passed());
  ASSERT_NE(r.find("retractions"), nullptr);
  EXPECT_FALSE(r.find("retractions")->passed);
  EXPECT_FALSE(r.find("join-identity")->passed);
  EXPECT_FALSE(VerifiedBiproduct::certify(d).has_value());
}

TEST(HomMatrix, IdentityAndSwap) {
  auto sys = surjection_embedding_system();
  auto x = FiniteObject::make_preorder("S", {"a", "b"}, {{"a", "b"}});
  auto y = terminal_object(true);
  auto bxy = *VerifiedBiproduct::certify(sub_biproduct(sys, coproduct(x, y)));
  auto byx = *VerifiedBiproduct::certify(sub_biproduct(sys, coproduct(y, x)));

  auto id = SemilatticeHom::identity(bxy.diagram().kxy);
  auto m = hom_matrix(id, bxy, bxy);
  EXPECT_EQ(m.at(0, 0), SemilatticeHom::identity(bxy.diagram().kx));
  EXPECT_EQ(m.at(1, 1), SemilatticeHom::identity(bxy.diagram().ky));
  EXPECT_EQ(m.at(0, 1), SemilatticeHom::zero(bxy.diagram().ky, bxy.diagram().kx));
  EXPECT_EQ(m.at(1, 0), SemilatticeHom::zero(bxy.diagram().kx, bxy.diagram().ky));
  EXPECT_EQ(matrix_to_hom(m, bxy, bxy), id);

  // Swap L:u <-> R:u, as a map of subobject lattices.
  auto cxy = coproduct(x, y);
  auto cyx = coproduct(y, x);
  std::vector<std::size_t> tab;
  for (std::size_t i = 0; i < cxy.object->size(); ++i) {
    auto lab = cxy.object->label(i);
    auto swapped = (lab[0] == 'L' ? "R" : "L") + lab.substr(1);
    tab.push_back(*cyx.object->index_of(swapped));
  }
  auto swap = Morphism::make(cxy.object, cyx.object, tab);
  const auto& src = bxy.diagram().kxy;
  const auto& tgt = byx.diagram().kxy;
  SemilatticeHom::Table h;
  for (std::size_t i = 0; i < src->size(); ++i) {
    h.push_back(*tgt->index_of_mask(swap.image_of(src->mask(i))));
  }
  auto sh = SemilatticeHom::make(src, tgt, h);
  auto sm = hom_matrix(sh, bxy, byx);
  EXPECT_EQ(sm.at(0, 0), SemilatticeHom::zero(bxy.diagram().kx, byx.diagram().kx));
  EXPECT_EQ(sm.at(1, 1), SemilatticeHom::zero(bxy.diagram().ky, byx.diagram().ky));
  EXPECT_NE(sm.at(0, 1), SemilatticeHom::zero(bxy.diagram().ky, byx.diagram().kx));
  EXPECT_NE(sm.at(1, 0), SemilatticeHom::zero(bxy.diagram().kx, byx.diagram().ky));
}

TEST(HomMatrix, CompositeMatchesMatrixProduct) {
  auto sys = surjection_injection_system();
  auto one = terminal_object(false);
  auto b = *VerifiedBiproduct::certify(sub_biproduct(sys, coproduct(one, one)));
  auto homs = enumerate_homs(b.diagram().kxy, b.diagram().kxy);
  for (const auto& f : homs) {
    for (const auto& g : homs) {
      auto lhs = hom_matrix(compose(g, f), b, b);
      auto rhs = matrix_product(hom_matrix(g, b, b), hom_matrix(f, b, b));
      ASSERT_EQ(lhs, rhs);
    }
  }
}

TEST(HomMatrix, RoundTripsOnSmallObjects) {
  for (const auto& name : {"finset", "finpre"}) {
    auto ctx = builtin(name);
    auto objs = ctx.objects(1);
    for (const auto& x : objs) {
      for (const auto& y : objs) {
        auto b = *VerifiedBiproduct::certify(sub_biproduct(ctx.system(), ctx.coproduct(x, y)));
        EXPECT_TRUE(check_matrix_roundtrip(b, b).passed());
      }
    }
  }
}

TEST(Biproduct, InjectionImageIsSemilatticeHom) {
  auto ctx = builtin("finpre");
  auto objs = ctx.objects(2);
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      // sub_biproduct builds inj_x through SemilatticeHom::make, which validates.
      EXPECT_NO_THROW(sub_biproduct(ctx.system(), ctx.coproduct(x, y)));
    }
  }
}

TEST(Biproduct, ClosedSubobjectsUnderAlexandrov) {
  auto ctx = builtin("finpre");
  auto fam = ctx.family("alexandrov");
  auto objs = ctx.objects(2);
  for (const auto& x : objs) {
    for (const auto& y : objs) {
      auto c = ctx.coproduct(x, y);
      auto d = mc_biproduct(c, fam.on(x), fam.on(y), fam.on(c.object));
      EXPECT_TRUE(verify_biproduct(d).passed()) << x->id() << " " << y->id();
    }
  }
}

TEST(Biproduct, ClosedSubobjectsUnderIndiscreteFail) {
  auto ctx = builtin("finpre");
  auto fam = ctx.family("indiscrete");
  auto one = terminal_object(true);
  auto c = ctx.coproduct(one, one);
  auto d = mc_biproduct(c, fam.on(one), fam.on(one), fam.on(c.object));
  EXPECT_FALSE(verify_biproduct(d).passed());
}
