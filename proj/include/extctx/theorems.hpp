#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "extctx/context.hpp"
#include "extctx/report.hpp"

namespace extctx {

enum class Status { confirmed, refuted, hypothesis_failed };
std::string to_string(Status s);

/// A named truth value computed over every instance at the bound.
struct Condition {
  std::string id;
  bool value = true;
};

/// One instance of a condition, with everything needed to re-evaluate it.
/// `claimed` is the truth value of the instance itself.
struct Witness {
  std::string kind;
  std::string condition;
  bool claimed = false;
  std::string text;
  nlohmann::json data;
};

/// Outcome of a checker. `sides` must agree with each other; `claims` must
/// all be true.
struct Verdict {
  std::string theorem;
  std::string context;
  std::string family;  // empty when the checker ignores closures
  int bound = 0;
  Status status = Status::confirmed;
  std::vector<Condition> sides;
  std::vector<Condition> claims;
  bool equivalence_ok = true;
  std::vector<Witness> witnesses;
  std::map<std::string, long> counts;
  std::string note;

  const Condition* side(const std::string& id) const;
  const Condition* claim(const std::string& id) const;
  const Witness* witness_for(const std::string& condition) const;
};

nlohmann::json to_json(const Verdict& v);

/// Re-evaluates the single instance recorded in `w`. Throws CategoryError
/// for unknown witness kinds or malformed data.
bool replay(const Context& ctx, const Witness& w);

// Checkers. `family` names a closure family registered in `ctx`.

/// Sums of admissible subobjects are admissible iff the monomorphisms in E
/// between finite sums pull back into E along the injections.
Verdict check_sum_admissible(const Context& ctx, int bound);
/// (a) sums of closed embeddings, (b) injections closed embeddings,
/// (c) dense morphisms between sums pull back to dense morphisms.
Verdict check_sum_closed_embeddings(const Context& ctx, const std::string& family, int bound);
/// Sums of closed morphisms closed iff the injections are closed.
Verdict check_cor_sum_closed_morphisms(const Context& ctx, const std::string& family, int bound);
/// cls(a + b) = cls a + cls b.
Verdict check_lemma_componentwise_closure(const Context& ctx, const std::string& family,
                                          int bound);
/// factorize(f + g) = (m_X + m_Y) . (e_X + e_Y) and the three equations on
/// composites, images and restrictions of sums.
Verdict check_factorization_of_sums(const Context& ctx, int bound);
/// Closed morphisms in E cap Mono between sums pull back into E.
Verdict check_pb_stability_closed_E_monos(const Context& ctx, const std::string& family,
                                          int bound);
/// Sums of proper morphisms are proper; compact spaces closed under sums
/// iff 0 -> X and the fold are proper.
Verdict check_sum_proper(const Context& ctx, const std::string& family, int bound);
/// Sums of separated morphisms are separated; Hausdorff spaces closed under
/// sums iff 1 + 1 is Hausdorff.
Verdict check_sum_separated(const Context& ctx, const std::string& family, int bound);
/// Both adjunctions between Sub(X) x Sub(Y) and Sub(X+Y), and between the
/// closed-subobject lattices.
Verdict check_adjunctions(const Context& ctx, const std::string& family, int bound);
/// Sub(X+Y) is a biproduct, matrix round trips on small objects, and the
/// closed-subobject biproduct agrees with condition (a).
Verdict check_biproducts(const Context& ctx, const std::string& family, int bound);
/// Factorization system, extensivity and closure-family validators.
Verdict check_validators(const Context& ctx, const std::vector<std::string>& families,
                         int bound);

/// The closed-subobject adjunction for one pair of spaces and their sum.
Report check_adjunction_closed(const Coproduct& c, const Space& s, const Space& t,
                               const Space& sum);

}  // namespace extctx
