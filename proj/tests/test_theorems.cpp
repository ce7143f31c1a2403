#include <gtest/gtest.h>

#include "extctx/theorems.hpp"

using namespace extctx;

namespace {

bool value(const Verdict& v, const std::string& id) {
  if (const auto* s = v.side(id)) return s->value;
  if (const auto* c = v.claim(id)) return c->value;
  ADD_FAILURE() << "no condition " << id << " in " << v.theorem;
  return false;
}

void expect_replays(const Context& ctx, const Verdict& v) {
  EXPECT_FALSE(v.witnesses.empty()) << v.theorem;
  for (const auto& w : v.witnesses) {
    EXPECT_EQ(replay(ctx, w), w.claimed) << v.theorem << " " << w.condition << ": " << w.text;
  }
}

const char* kB[] = {"sum-of-closed-embeddings-closed-embedding",
                    "coproduct-injections-closed-embeddings",
                    "dense-morphisms-between-sums-pullback-stable"};

}  // namespace

TEST(CheckerA, BothContextsAgreeTrue) {
  for (const auto& name : {"finset", "finpre"}) {
    auto ctx = builtin(name);
    auto v = check_sum_admissible(ctx, 3);
    EXPECT_EQ(v.status, Status::confirmed) << name;
    EXPECT_TRUE(v.equivalence_ok);
    EXPECT_TRUE(value(v, "sums-of-admissible-subobjects-admissible"));
    EXPECT_TRUE(value(v, "E-monos-between-sums-pullback-stable"));
    expect_replays(ctx, v);
  }
}

TEST(CheckerA, SplitMonoContextSidesAgree) {
  auto ctx = split_mono_context();
  auto v = check_sum_admissible(ctx, 2);
  EXPECT_TRUE(v.equivalence_ok);
  expect_replays(ctx, v);
}

TEST(CheckerB, AlexandrovAllTrue) {
  auto ctx = builtin("finpre");
  auto v = check_sum_closed_embeddings(ctx, "alexandrov", 3);
  EXPECT_EQ(v.status, Status::confirmed);
  for (const auto* id : kB) EXPECT_TRUE(value(v, id)) << id;
}

TEST(CheckerB, IndiscreteAllFalseWithEmptyTopWitness) {
  auto ctx = builtin("finpre");
  auto v = check_sum_closed_embeddings(ctx, "indiscrete", 3);
  EXPECT_EQ(v.status, Status::confirmed);
  for (const auto* id : kB) EXPECT_FALSE(value(v, id)) << id;
  const auto* w = v.witness_for(kB[0]);
  ASSERT_NE(w, nullptr);
  EXPECT_FALSE(w->claimed);
  EXPECT_TRUE(w->data["a"].empty());
  EXPECT_FALSE(w->data["Y"]["carrier"].empty());
  EXPECT_EQ(w->data["b"].size(), w->data["Y"]["carrier"].size());
  EXPECT_FALSE(replay(ctx, *w));
  expect_replays(ctx, v);
}

TEST(CheckerB, OnlyEmptySummandsVacuouslyTrue) {
  auto ctx = builtin("finpre");
  auto v = check_sum_closed_embeddings(ctx, "indiscrete", 0);
  for (const auto* id : kB) EXPECT_TRUE(value(v, id)) << id;
}

TEST(CheckerB, CounterexamplesPersistAsBoundGrows) {
  auto ctx = builtin("finpre");
  for (int n = 1; n <= 3; ++n) {
    auto v = check_sum_closed_embeddings(ctx, "indiscrete", n);
    for (const auto* id : kB) EXPECT_FALSE(value(v, id)) << id << " @" << n;
  }
}

TEST(CheckerC, Examples) {
  auto pre = builtin("finpre");
  auto a = check_cor_sum_closed_morphisms(pre, "alexandrov", 3);
  EXPECT_EQ(a.status, Status::confirmed);
  EXPECT_TRUE(value(a, "sum-of-closed-morphisms-closed"));
  EXPECT_TRUE(value(a, "coproduct-injections-closed"));

  auto i = check_cor_sum_closed_morphisms(pre, "indiscrete", 3);
  EXPECT_EQ(i.status, Status::confirmed);
  EXPECT_FALSE(value(i, "sum-of-closed-morphisms-closed"));
  EXPECT_FALSE(value(i, "coproduct-injections-closed"));
  expect_replays(pre, i);

  auto set = builtin("finset");
  auto s = check_cor_sum_closed_morphisms(set, "identity", 3);
  EXPECT_EQ(s.status, Status::confirmed);
  EXPECT_TRUE(value(s, "sum-of-closed-morphisms-closed"));
}

TEST(CheckerD, AlexandrovPassesAndIndiscreteIsGated) {
  auto ctx = builtin("finpre");
  auto a = check_lemma_componentwise_closure(ctx, "alexandrov", 3);
  EXPECT_EQ(a.status, Status::confirmed);
  EXPECT_TRUE(value(a, "closure-of-sum-is-sum-of-closures"));
  EXPECT_GT(a.counts.at("closure-of-sum-is-sum-of-closures"), 0);
  auto i = check_lemma_componentwise_closure(ctx, "indiscrete", 3);
  EXPECT_EQ(i.status, Status::hypothesis_failed);
  EXPECT_EQ(to_string(i.status), "hypothesis-failed");
}

TEST(CheckerE, BothContextsAtTwo) {
  for (const auto& name : {"finset", "finpre"}) {
    auto ctx = builtin(name);
    auto v = check_factorization_of_sums(ctx, 2);
    EXPECT_EQ(v.status, Status::confirmed) << name;
    EXPECT_TRUE(value(v, "factorization-of-sum-is-sum-of-factorizations"));
    EXPECT_TRUE(value(v, "sum-equations-for-composites-images-restrictions"));
    expect_replays(ctx, v);
  }
}

TEST(CheckerE, FinsetCountsAllPairs) {
  // 11 maps among sets of size <= 2, so 121 pairs (f, g).
  auto v = check_factorization_of_sums(builtin("finset"), 2);
  EXPECT_EQ(v.counts.at("factorization-of-sum-is-sum-of-factorizations"), 121);
}

TEST(CheckerF, Examples) {
  auto a = check_pb_stability_closed_E_monos(builtin("finpre"), "alexandrov", 3);
  EXPECT_EQ(a.status, Status::confirmed);
  EXPECT_TRUE(value(a, "closed-E-monos-between-sums-pullback-stable"));
  auto s = check_pb_stability_closed_E_monos(builtin("finset"), "identity", 3);
  EXPECT_EQ(s.status, Status::confirmed);
}

TEST(CheckerG, AlexandrovAtTwo) {
  auto ctx = builtin("finpre");
  auto v = check_sum_proper(ctx, "alexandrov", 2);
  EXPECT_EQ(v.status, Status::confirmed);
  EXPECT_TRUE(value(v, "sum-of-proper-morphisms-proper"));
  EXPECT_TRUE(value(v, "sums-of-compact-spaces-compact"));
  EXPECT_TRUE(value(v, "initial-maps-and-folds-proper"));
  expect_replays(ctx, v);
}

TEST(CheckerH, AlexandrovAndIdentityAtTwo) {
  auto ctx = builtin("finpre");
  for (const auto& fam : {"alexandrov", "identity"}) {
    auto v = check_sum_separated(ctx, fam, 2);
    EXPECT_EQ(v.status, Status::confirmed) << fam;
    EXPECT_TRUE(value(v, "sum-of-separated-morphisms-separated"));
    EXPECT_TRUE(value(v, "one-plus-one-hausdorff"));
    EXPECT_TRUE(value(v, "sums-of-hausdorff-spaces-hausdorff"));
  }
}

TEST(Adjunctions, AllFamilies) {
  auto ctx = builtin("finpre");
  for (const auto& fam : ctx.families()) {
    auto v = check_adjunctions(ctx, fam, 2);
    EXPECT_EQ(v.status, Status::confirmed) << fam;
  }
}

TEST(Biproducts, SubAndClosedAgreeWithB) {
  auto ctx = builtin("finpre");
  for (const auto& fam : ctx.families()) {
    auto v = check_biproducts(ctx, fam, 2);
    EXPECT_EQ(v.status, Status::confirmed) << fam;
    EXPECT_TRUE(v.equivalence_ok) << fam;
    EXPECT_TRUE(value(v, "sub-of-sum-is-biproduct"));
    EXPECT_TRUE(value(v, "hom-matrix-round-trips"));
  }
}

TEST(Validators, BuiltinsPass) {
  for (const auto& name : {"finset", "finpre"}) {
    auto ctx = builtin(name);
    auto v = check_validators(ctx, ctx.families(), 2);
    EXPECT_EQ(v.status, Status::confirmed) << name;
  }
}

TEST(Validators, SwappedClassesRefuted) {
  auto ctx = swapped_classes_context();
  auto v = check_validators(ctx, {}, 2);
  EXPECT_EQ(v.status, Status::refuted);
  expect_replays(ctx, v);
}

TEST(Replay, UnknownKindThrows) {
  Witness w;
  w.kind = "no-such-kind";
  EXPECT_THROW(replay(builtin("finset"), w), CategoryError);
}

TEST(Verdict, SerializesStatusAndConditions) {
  auto v = check_sum_admissible(builtin("finset"), 2);
  auto j = to_json(v);
  EXPECT_EQ(j["status"], "confirmed");
  EXPECT_EQ(j["theorem"], "A");
  EXPECT_EQ(j["sides"].size(), 2U);
}
