#include <gtest/gtest.h>

#include "extctx/context.hpp"

using namespace extctx;

TEST(CanonicalObjects, ClassCounts) {
  const std::vector<std::size_t> sets{1, 2, 3, 4, 5, 6};
  const std::vector<std::size_t> preorders{1, 2, 5, 14, 47, 186};
  for (int n = 0; n <= 5; ++n) {
    EXPECT_EQ(canonical_objects(false, n).size(), sets[n]) << n;
    EXPECT_EQ(canonical_objects(true, n).size(), preorders[n]) << n;
  }
  EXPECT_THROW(canonical_objects(true, 6), std::invalid_argument);
}

TEST(CanonicalObjects, PairwiseNonIsomorphic) {
  auto objs = canonical_objects(true, 3);
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = i + 1; j < objs.size(); ++j) {
      EXPECT_FALSE(is_isomorphic(objs[i], objs[j])) << objs[i]->id() << " " << objs[j]->id();
    }
  }
}

TEST(CanonicalObjects, TwoPointNames) {
  auto objs = canonical_objects(true, 2);
  ASSERT_EQ(objs.size(), 5U);
  EXPECT_EQ(objs[2]->id(), "P2.0");
  EXPECT_TRUE(objs[2]->strict_pairs().empty());
  EXPECT_EQ(objs[3]->id(), "P2.1");
  EXPECT_EQ(objs[3]->strict_pairs().size(), 1U);
  EXPECT_EQ(objs[4]->id(), "P2.2");
  EXPECT_EQ(objs[4]->strict_pairs().size(), 2U);
}

TEST(Builtin, UnknownNameThrows) { EXPECT_THROW(builtin("x"), std::invalid_argument); }

TEST(Builtin, UnknownFamilyThrows) {
  EXPECT_THROW(builtin("finset").family("cofinite"), std::invalid_argument);
}

class Extensive : public ::testing::TestWithParam<std::string> {};

TEST_P(Extensive, ValidatorPassesAtThree) {
  auto ctx = builtin(GetParam());
  auto r = validate_extensive(ctx, 3);
  for (const auto& id : {"coproducts-pullback-stable", "coproducts-disjoint", "injections-in-M",
                         "initial-strict", "zero-to-one-in-M", "distributive", "zero-reflection",
                         "injections-from-1+1", "coproduct-universal", "pullback-universal"}) {
    const auto* c = r.find(id);
    ASSERT_NE(c, nullptr) << id;
    EXPECT_TRUE(c->passed) << id << ": " << c->witness;
    EXPECT_GT(c->instances, 0) << id;
  }
  EXPECT_TRUE(r.passed());
}

INSTANTIATE_TEST_SUITE_P(Contexts, Extensive, ::testing::Values("finset", "finpre"));

TEST(Extensive, OrdinalSumCoproductsFailWithWitness) {
  auto r = validate_extensive(ordinal_sum_context(), 2);
  EXPECT_FALSE(r.passed());
  const auto* c = r.find("coproducts-pullback-stable");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  EXPECT_FALSE(c->witness.empty());
}

TEST(Context, LoadedObjectsReplaceCanonicalRepresentative) {
  auto ctx = builtin("finpre");
  auto s = FiniteObject::make_preorder("sierpinski", {"lo", "hi"}, {{"lo", "hi"}});
  auto e = FiniteObject::make_preorder("empty", {}, FiniteObject::OrderPairs{});
  ctx.add_objects({s, e});
  auto objs = ctx.objects(2);
  EXPECT_EQ(objs.size(), 5U);
  EXPECT_EQ(objs[0]->id(), "empty");
  EXPECT_EQ(objs[3]->id(), "sierpinski");
}

TEST(Context, AddObjectsRejectsMismatch) {
  auto ctx = builtin("finset");
  auto s = FiniteObject::make_preorder("S", {"a", "b"}, {{"a", "b"}});
  EXPECT_THROW(ctx.add_objects({s}), CategoryError);
}

TEST(Context, SplitMonos) {
  auto s = FiniteObject::make_preorder("S", {"a", "b"}, {{"a", "b"}});
  auto d = FiniteObject::make_preorder("D", {"a", "b"}, FiniteObject::OrderPairs{});
  auto one = terminal_object(true);
  EXPECT_TRUE(is_split_mono(Morphism::from_labels(one, s, {"a"})));
  EXPECT_FALSE(is_split_mono(Morphism::from_labels(d, s, {"a", "b"})));
}
