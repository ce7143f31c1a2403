#include "extctx/semilattice.hpp"

#include <algorithm>

#include "extctx/lattice.hpp"

namespace extctx {

using nlohmann::json;

LatticeRef JoinSemilattice::make(std::string name, std::vector<std::string> labels, Table join,
                                 std::size_t zero) {
  const std::size_t n = labels.size();
  if (zero >= n) throw CategoryError(name + ": zero is not an element");
  if (join.size() != n) throw CategoryError(name + ": join table has wrong size");
  for (const auto& row : join) {
    if (row.size() != n) throw CategoryError(name + ": join table has wrong size");
    for (auto v : row) {
      if (v >= n) throw CategoryError(name + ": join table out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (join[a][a] != a) throw CategoryError(name + ": join not idempotent at " + labels[a]);
    if (join[a][zero] != a) throw CategoryError(name + ": zero not neutral at " + labels[a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (join[a][b] != join[b][a]) {
        throw CategoryError(name + ": join not commutative at " + labels[a] + ", " + labels[b]);
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (join[join[a][b]][c] != join[a][join[b][c]]) {
          throw CategoryError(name + ": join not associative at " + labels[a] + ", " +
                              labels[b] + ", " + labels[c]);
        }
      }
    }
  }
  auto k = std::shared_ptr<JoinSemilattice>(new JoinSemilattice());
  k->name_ = std::move(name);
  k->labels_ = std::move(labels);
  k->join_ = std::move(join);
  k->zero_ = zero;
  k->finish();
  return k;
}

LatticeRef JoinSemilattice::of_masks(std::string name, const FiniteObject& carrier,
                                     std::vector<Mask> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0) {
    throw CategoryError(name + ": the empty subset is missing");
  }
  const std::size_t n = elements.size();
  auto index = [&](Mask m) -> std::size_t {
    auto it = std::lower_bound(elements.begin(), elements.end(), m);
    if (it == elements.end() || *it != m) {
      throw CategoryError(name + ": not closed under union at " + mask_to_string(carrier, m));
    }
    return static_cast<std::size_t>(it - elements.begin());
  };
  Table join(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(mask_to_string(carrier, elements[a]));
    for (std::size_t b = 0; b < n; ++b) join[a][b] = index(elements[a] | elements[b]);
  }
  auto k = std::shared_ptr<JoinSemilattice>(new JoinSemilattice());
  k->name_ = std::move(name);
  k->labels_ = std::move(labels);
  k->join_ = std::move(join);
  k->zero_ = 0;
  k->masks_ = std::move(elements);
  k->finish();
  return k;
}

void JoinSemilattice::finish() {
  irreducibles_.clear();
  for (std::size_t j = 0; j < size(); ++j) {
    if (j == zero_) continue;
    std::size_t below = zero_;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i != j && leq(i, j)) below = join(below, i);
    }
    if (below != j) irreducibles_.push_back(j);
  }
}

std::optional<std::size_t> JoinSemilattice::index_of_mask(Mask m) const {
  auto it = std::lower_bound(masks_.begin(), masks_.end(), m);
  if (it == masks_.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - masks_.begin());
}

SemilatticeHom SemilatticeHom::make(LatticeRef source, LatticeRef target, Table table) {
  const auto& s = *source;
  const auto& t = *target;
  if (table.size() != s.size()) {
    throw CategoryError("hom " + s.name() + " -> " + t.name() + ": table has wrong size");
  }
  for (auto v : table) {
    if (v >= t.size()) throw CategoryError("hom " + s.name() + " -> " + t.name() + ": out of range");
  }
  if (table[s.zero()] != t.zero()) {
    throw CategoryError("hom " + s.name() + " -> " + t.name() + ": zero not preserved");
  }
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (table[s.join(a, b)] != t.join(table[a], table[b])) {
        throw CategoryError("hom " + s.name() + " -> " + t.name() + ": join of " + s.label(a) +
                            ", " + s.label(b) + " not preserved");
      }
    }
  }
  return SemilatticeHom(std::move(source), std::move(target), std::move(table));
}

SemilatticeHom SemilatticeHom::identity(const LatticeRef& k) {
  Table t(k->size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return SemilatticeHom(k, k, std::move(t));
}

SemilatticeHom SemilatticeHom::zero(const LatticeRef& source, const LatticeRef& target) {
  return SemilatticeHom(source, target, Table(source->size(), target->zero()));
}

std::string SemilatticeHom::describe() const {
  std::string out = source_->name() + " -> " + target_->name() + " [";
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (i) out += ", ";
    out += source_->label(i) + "->" + target_->label(table_[i]);
  }
  return out + "]";
}

SemilatticeHom compose(const SemilatticeHom& g, const SemilatticeHom& f) {
  if (f.target() != g.source()) {
    throw CategoryError("cannot compose " + g.describe() + " after " + f.describe());
  }
  SemilatticeHom::Table t(f.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(i));
  return SemilatticeHom::make(f.source(), g.target(), std::move(t));
}

SemilatticeHom join(const SemilatticeHom& f, const SemilatticeHom& g) {
  if (f.source() != g.source() || f.target() != g.target()) {
    throw CategoryError("join of non-parallel homs " + f.describe() + ", " + g.describe());
  }
  SemilatticeHom::Table t(f.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = f.target()->join(f(i), g(i));
  return SemilatticeHom::make(f.source(), f.target(), std::move(t));
}

std::vector<SemilatticeHom> enumerate_homs(const LatticeRef& source, const LatticeRef& target,
                                           std::size_t limit) {
  const auto& s = *source;
  const auto& t = *target;
  const auto& irr = s.join_irreducibles();
  std::size_t candidates = 1;
  for (std::size_t i = 0; i < irr.size(); ++i) {
    if (candidates > limit / t.size()) {
      throw CategoryError("too many candidate homs " + s.name() + " -> " + t.name());
    }
    candidates *= t.size();
  }
  std::vector<SemilatticeHom> out;
  std::vector<std::size_t> choice(irr.size(), 0);
  for (std::size_t c = 0; c < candidates; ++c) {
    SemilatticeHom::Table table(s.size(), t.zero());
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t k = 0; k < irr.size(); ++k) {
        if (s.leq(irr[k], x)) table[x] = t.join(table[x], choice[k]);
      }
    }
    bool ok = true;
    for (std::size_t k = 0; k < irr.size() && ok; ++k) ok = table[irr[k]] == choice[k];
    for (std::size_t a = 0; a < s.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < s.size() && ok; ++b) {
        ok = table[s.join(a, b)] == t.join(table[a], table[b]);
      }
    }
    if (ok) out.push_back(SemilatticeHom::make(source, target, std::move(table)));
    // Last irreducible varies fastest: lexicographic in the images.
    for (std::size_t k = irr.size(); k-- > 0;) {
      if (++choice[k] < t.size()) break;
      choice[k] = 0;
    }
  }
  return out;
}

namespace {

void require_endpoints(const SemilatticeHom& h, const LatticeRef& s, const LatticeRef& t,
                       const char* what) {
  if (h.source() != s || h.target() != t) {
    throw CategoryError(std::string("biproduct diagram: ") + what + " has the wrong endpoints");
  }
}

}  // namespace

Report verify_biproduct(const BiproductDiagram& d) {
  require_endpoints(d.inj_x, d.kx, d.kxy, "inj_X");
  require_endpoints(d.inj_y, d.ky, d.kxy, "inj_Y");
  require_endpoints(d.proj_x, d.kxy, d.kx, "proj_X");
  require_endpoints(d.proj_y, d.kxy, d.ky, "proj_Y");
  Report r{"biproduct " + d.kxy->name(), {}};
  auto& retr = r.add("retractions");
  auto& cross = r.add("zero-cross");
  auto& joined = r.add("join-identity");
  auto bad_at = [](CheckEntry& e, const std::string& eq, const JoinSemilattice& k, std::size_t i) {
    fail(e, eq + " fails at " + k.label(i), json{{"equation", eq}, {"element", k.label(i)}});
  };
  for (std::size_t i = 0; i < d.kx->size(); ++i) {
    ++retr.instances;
    ++cross.instances;
    if (d.proj_x(d.inj_x(i)) != i) bad_at(retr, "proj_X.inj_X = id", *d.kx, i);
    if (d.proj_y(d.inj_x(i)) != d.ky->zero()) bad_at(cross, "proj_Y.inj_X = 0", *d.kx, i);
  }
  for (std::size_t i = 0; i < d.ky->size(); ++i) {
    ++retr.instances;
    ++cross.instances;
    if (d.proj_y(d.inj_y(i)) != i) bad_at(retr, "proj_Y.inj_Y = id", *d.ky, i);
    if (d.proj_x(d.inj_y(i)) != d.kx->zero()) bad_at(cross, "proj_X.inj_Y = 0", *d.ky, i);
  }
  for (std::size_t p = 0; p < d.kxy->size(); ++p) {
    ++joined.instances;
    if (d.kxy->join(d.inj_x(d.proj_x(p)), d.inj_y(d.proj_y(p))) != p) {
      bad_at(joined, "inj_X.proj_X v inj_Y.proj_Y = id", *d.kxy, p);
    }
  }
  return r;
}

std::optional<VerifiedBiproduct> VerifiedBiproduct::certify(BiproductDiagram d) {
  if (!verify_biproduct(d).passed()) return std::nullopt;
  return VerifiedBiproduct(std::move(d));
}

namespace {

const SemilatticeHom& inj(const BiproductDiagram& d, int i) { return i == 0 ? d.inj_x : d.inj_y; }
const SemilatticeHom& proj(const BiproductDiagram& d, int i) {
  return i == 0 ? d.proj_x : d.proj_y;
}

}  // namespace

HomMatrix hom_matrix(const SemilatticeHom& h, const VerifiedBiproduct& src,
                     const VerifiedBiproduct& tgt) {
  const auto& s = src.diagram();
  const auto& t = tgt.diagram();
  if (h.source() != s.kxy || h.target() != t.kxy) {
    throw CategoryError("hom_matrix: " + h.describe() + " does not run between the biproducts");
  }
  HomMatrix m;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m.entry[i][j] = compose(proj(t, i), compose(h, inj(s, j)));
  }
  return m;
}

SemilatticeHom matrix_to_hom(const HomMatrix& m, const VerifiedBiproduct& src,
                             const VerifiedBiproduct& tgt) {
  const auto& s = src.diagram();
  const auto& t = tgt.diagram();
  auto out = SemilatticeHom::zero(s.kxy, t.kxy);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out = join(out, compose(inj(t, i), compose(m.at(i, j), proj(s, j))));
    }
  }
  return out;
}

HomMatrix matrix_product(const HomMatrix& a, const HomMatrix& b) {
  HomMatrix out;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      auto acc = compose(a.at(i, 0), b.at(0, k));
      acc = join(acc, compose(a.at(i, 1), b.at(1, k)));
      out.entry[i][k] = acc;
    }
  }
  return out;
}

namespace {

std::vector<Mask> admissible_masks(const FactorizationSystem& sys, const ObjectRef& x) {
  std::vector<Mask> out;
  for (const auto& s : SubobjectLattice::enumerate(sys, x).elements()) out.push_back(s.bits);
  return out;
}

SemilatticeHom mask_hom(const LatticeRef& s, const LatticeRef& t,
                        const std::function<Mask(Mask)>& fn) {
  SemilatticeHom::Table table(s->size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Mask image = fn(s->mask(i));
    auto k = t->index_of_mask(image);
    if (!k) {
      throw CategoryError("map " + s->name() + " -> " + t->name() + " leaves the target at " +
                          s->label(i));
    }
    table[i] = *k;
  }
  return SemilatticeHom::make(s, t, std::move(table));
}

}  // namespace

BiproductDiagram sub_biproduct(const FactorizationSystem& sys, const Coproduct& c) {
  auto kx = JoinSemilattice::of_masks("Sub(" + c.left()->id() + ")", *c.left(),
                                      admissible_masks(sys, c.left()));
  auto ky = JoinSemilattice::of_masks("Sub(" + c.right()->id() + ")", *c.right(),
                                      admissible_masks(sys, c.right()));
  auto kxy = JoinSemilattice::of_masks("Sub(" + c.object->id() + ")", *c.object,
                                       admissible_masks(sys, c.object));
  return BiproductDiagram{
      kx,
      kxy,
      ky,
      mask_hom(kx, kxy, [&](Mask m) { return c.inl.image_of(m); }),
      mask_hom(ky, kxy, [&](Mask m) { return c.inr.image_of(m); }),
      mask_hom(kxy, kx, [&](Mask p) { return c.inl.preimage_of(p); }),
      mask_hom(kxy, ky, [&](Mask p) { return c.inr.preimage_of(p); })};
}

BiproductDiagram mc_biproduct(const Coproduct& c, const Space& s, const Space& t,
                              const Space& sum) {
  if (!same_object(s.object(), c.left()) || !same_object(t.object(), c.right()) ||
      !same_object(sum.object(), c.object)) {
    throw CategoryError("mc_biproduct: spaces do not match " + c.object->id());
  }
  auto kx = JoinSemilattice::of_masks("mc(" + c.left()->id() + ")", *c.left(), closed_lattice(s));
  auto ky = JoinSemilattice::of_masks("mc(" + c.right()->id() + ")", *c.right(), closed_lattice(t));
  auto kxy = JoinSemilattice::of_masks("mc(" + c.object->id() + ")", *c.object,
                                       closed_lattice(sum));
  return BiproductDiagram{
      kx,
      kxy,
      ky,
      mask_hom(kx, kxy, [&](Mask m) { return sum.closure(c.inl.image_of(m)); }),
      mask_hom(ky, kxy, [&](Mask m) { return sum.closure(c.inr.image_of(m)); }),
      mask_hom(kxy, kx, [&](Mask p) { return c.inl.preimage_of(p); }),
      mask_hom(kxy, ky, [&](Mask p) { return c.inr.preimage_of(p); })};
}

Report check_matrix_roundtrip(const VerifiedBiproduct& src, const VerifiedBiproduct& tgt) {
  const auto& s = src.diagram();
  const auto& t = tgt.diagram();
  Report r{"matrix round trip " + s.kxy->name() + " -> " + t.kxy->name(), {}};
  auto& h2m = r.add("hom-matrix-hom");
  for (const auto& h : enumerate_homs(s.kxy, t.kxy)) {
    ++h2m.instances;
    if (!(matrix_to_hom(hom_matrix(h, src, tgt), src, tgt) == h)) {
      fail(h2m, h.describe(), json{{"hom", h.describe()}});
    }
  }
  auto& m2h = r.add("matrix-hom-matrix");
  const LatticeRef ks[2] = {s.kx, s.ky};
  const LatticeRef kt[2] = {t.kx, t.ky};
  std::array<std::array<std::vector<SemilatticeHom>, 2>, 2> homs;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) homs[i][j] = enumerate_homs(ks[j], kt[i]);
  }
  for (const auto& a : homs[0][0]) {
    for (const auto& b : homs[0][1]) {
      for (const auto& c : homs[1][0]) {
        for (const auto& d : homs[1][1]) {
          ++m2h.instances;
          HomMatrix m;
          m.entry[0][0] = a;
          m.entry[0][1] = b;
          m.entry[1][0] = c;
          m.entry[1][1] = d;
          if (!(hom_matrix(matrix_to_hom(m, src, tgt), src, tgt) == m)) {
            fail(m2h, "matrix with entries " + a.describe() + "; " + b.describe() + "; " +
                          c.describe() + "; " + d.describe());
          }
        }
      }
    }
  }
  return r;
}

}  // namespace extctx
