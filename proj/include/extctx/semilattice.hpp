#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "extctx/closure.hpp"
#include "extctx/factorization.hpp"
#include "extctx/report.hpp"

namespace extctx {

class JoinSemilattice;
using LatticeRef = std::shared_ptr<const JoinSemilattice>;

/// A finite join-semilattice with zero, as a join table over indices.
class JoinSemilattice {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  /// Throws CategoryError unless join is associative, commutative,
  /// idempotent and `zero` is neutral.
  static LatticeRef make(std::string name, std::vector<std::string> labels, Table join,
                         std::size_t zero);
  /// Subsets under union. `elements` must be closed under union and
  /// contain 0; they are kept in increasing mask order.
  static LatticeRef of_masks(std::string name, const FiniteObject& carrier,
                             std::vector<Mask> elements);

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i][j]; }
  std::size_t zero() const { return zero_; }
  bool leq(std::size_t i, std::size_t j) const { return join_[i][j] == j; }
  /// Non-zero elements that are not the join of the elements below them.
  const std::vector<std::size_t>& join_irreducibles() const { return irreducibles_; }

  /// Mask of element i when built by of_masks().
  Mask mask(std::size_t i) const { return masks_.at(i); }
  std::optional<std::size_t> index_of_mask(Mask m) const;

 private:
  JoinSemilattice() = default;
  void finish();

  std::string name_;
  std::vector<std::string> labels_;
  Table join_;
  std::size_t zero_ = 0;
  std::vector<std::size_t> irreducibles_;
  std::vector<Mask> masks_;
};

/// Zero- and join-preserving map.
class SemilatticeHom {
 public:
  using Table = std::vector<std::size_t>;

  /// Throws CategoryError when the table is not a homomorphism.
  static SemilatticeHom make(LatticeRef source, LatticeRef target, Table table);
  static SemilatticeHom identity(const LatticeRef& k);
  static SemilatticeHom zero(const LatticeRef& source, const LatticeRef& target);

  const LatticeRef& source() const { return source_; }
  const LatticeRef& target() const { return target_; }
  const Table& table() const { return table_; }
  std::size_t operator()(std::size_t i) const { return table_[i]; }
  std::string describe() const;

  friend bool operator==(const SemilatticeHom& a, const SemilatticeHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.table_ == b.table_;
  }

 private:
  SemilatticeHom(LatticeRef s, LatticeRef t, Table table)
      : source_(std::move(s)), target_(std::move(t)), table_(std::move(table)) {}

  LatticeRef source_;
  LatticeRef target_;
  Table table_;
};

/// g after f; throws CategoryError on endpoint mismatch.
SemilatticeHom compose(const SemilatticeHom& g, const SemilatticeHom& f);
/// Pointwise join of parallel homs.
SemilatticeHom join(const SemilatticeHom& f, const SemilatticeHom& g);

/// Every hom source -> target, via images of join-irreducibles, in
/// lexicographic order of those images. Throws CategoryError when more than
/// `limit` candidate assignments would be tried.
std::vector<SemilatticeHom> enumerate_homs(const LatticeRef& source, const LatticeRef& target,
                                           std::size_t limit = 1U << 22);

/// K_X -> K_XY <- K_Y with projections back.
struct BiproductDiagram {
  LatticeRef kx;
  LatticeRef kxy;
  LatticeRef ky;
  SemilatticeHom inj_x;
  SemilatticeHom inj_y;
  SemilatticeHom proj_x;
  SemilatticeHom proj_y;
};

/// Checks "retractions" (proj.inj = id on both sides), "zero-cross"
/// (proj_Y.inj_X and proj_X.inj_Y are zero) and "join-identity"
/// (inj_X.proj_X v inj_Y.proj_Y = id). Throws CategoryError when the maps
/// do not fit together.
Report verify_biproduct(const BiproductDiagram& d);

/// A biproduct diagram that has passed verify_biproduct.
class VerifiedBiproduct {
 public:
  /// nullopt when verification fails.
  static std::optional<VerifiedBiproduct> certify(BiproductDiagram d);
  const BiproductDiagram& diagram() const { return d_; }

 private:
  explicit VerifiedBiproduct(BiproductDiagram d) : d_(std::move(d)) {}
  BiproductDiagram d_;
};

/// entry[i][j] : K_j(source) -> K_i(target), with index 0 = X side and
/// 1 = Y side.
struct HomMatrix {
  std::array<std::array<std::optional<SemilatticeHom>, 2>, 2> entry;

  const SemilatticeHom& at(int i, int j) const { return *entry[i][j]; }
  friend bool operator==(const HomMatrix& a, const HomMatrix& b) { return a.entry == b.entry; }
};

/// entry[i][j] = proj_i . h . inj_j. Throws when h does not run between
/// the two middle objects.
HomMatrix hom_matrix(const SemilatticeHom& h, const VerifiedBiproduct& src,
                     const VerifiedBiproduct& tgt);
/// The join over i, j of inj_i . entry[i][j] . proj_j.
SemilatticeHom matrix_to_hom(const HomMatrix& m, const VerifiedBiproduct& src,
                             const VerifiedBiproduct& tgt);
/// (a b)_{ik} = join over j of a_{ij} . b_{jk}.
HomMatrix matrix_product(const HomMatrix& a, const HomMatrix& b);

/// Sub(X), Sub(X+Y), Sub(Y) with image along the injections and preimage
/// along the injections.
BiproductDiagram sub_biproduct(const FactorizationSystem& sys, const Coproduct& c);
/// mc(s), mc(sum), mc(t): closed subobjects, injections followed by the
/// closure of `sum`, projections by preimage.
BiproductDiagram mc_biproduct(const Coproduct& c, const Space& s, const Space& t,
                              const Space& sum);

/// hom -> matrix -> hom and matrix -> hom -> matrix on every hom and every
/// matrix between the two biproducts.
Report check_matrix_roundtrip(const VerifiedBiproduct& src, const VerifiedBiproduct& tgt);

}  // namespace extctx
