#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "bimon/category.hpp"
#include "bimon/exactlin.hpp"

namespace bimon {

// Finite-dimensional associative unital algebra over the rationals, given by
// structure constants.
struct BaseRing {
  LinMap mul;   // R⊗R → R
  LinMap unit;  // 𝕜 → R

  std::size_t dim() const noexcept { return unit.rows(); }
  FreeModule module() const { return {dim(), "R"}; }
};

BaseRing make_base_ring(const LinMap& mul, const LinMap& unit);

struct Bimodule {
  FreeModule carrier;
  LinMap lact;  // R⊗M → M
  LinMap ract;  // M⊗R → M
};

Bimodule regular_bimodule(const BaseRing& r);

CheckOutcome check_base_ring(const BaseRing& r);
CheckOutcome check_bimodule(const BaseRing& r, const Bimodule& m);

// M1⊗_R ... ⊗_R Mn presented as the quotient of M1⊗_𝕜 ... ⊗_𝕜 Mn by the
// balancing relations at every junction. The quotient basis is the set of
// non-pivot columns of the row-reduced relation span, so proj∘sect = id and
// ker(proj) is exactly the relation span.
struct FlatTensor {
  std::vector<Bimodule> factors;
  FreeModule full;
  FreeModule quotient;
  LinMap proj;  // full → quotient
  LinMap sect;  // quotient → full
  std::vector<Vector> relations;      // row-reduced basis of the relation span
  std::vector<std::size_t> basis;     // full-space index of each quotient basis vector
  Bimodule induced;                   // left action through the first factor, right through the last
};

using RTensor = FlatTensor;

RTensor r_tensor(const BaseRing& r, const Bimodule& m, const Bimodule& n);
// An empty word yields R itself with proj = sect = identity.
FlatTensor flatten(const BaseRing& r, const std::vector<Bimodule>& word);

// proj′∘f∘sect, after checking that proj′∘f kills every relation of t.
// Throws NotBalanced otherwise.
LinMap induced_map(const FlatTensor& t, const FlatTensor& t2, const LinMap& f);

// R-bimodules with ⊗_R. Atoms are registered bimodules; "R" is always the
// regular bimodule. A word realizes as its flattened quotient, and the empty
// word (the unit object) realizes as R.
class BimoduleCategory final : public Category {
 public:
  explicit BimoduleCategory(BaseRing r);

  void add_bimodule(const std::string& name, Bimodule m);
  bool has_bimodule(const std::string& name) const { return atoms_.count(name) != 0; }
  const Bimodule& bimodule(const std::string& name) const;
  Obj atom(const std::string& name) const;
  const BaseRing& base() const noexcept { return base_; }

  std::string name() const override { return "rbimod"; }
  std::size_t dim(const Obj& x) const override;
  Morphism tensor(const Morphism& f, const Morphism& g) const override;
  std::string basis_label(const Obj& x, std::size_t i) const override;
  using Category::tensor;

  const FlatTensor& realize(const Obj& x) const;
  // Descends a 𝕜-level map between full tensor spaces to the quotients.
  Morphism descend(const Obj& dom, const Obj& cod, const LinMap& full_map) const;
  LinMap left_action(const Obj& x) const;   // R⊗_𝕜 Q → Q
  LinMap right_action(const Obj& x) const;  // Q⊗_𝕜 R → Q
  // A morphism of this category must commute with both R-actions.
  CheckOutcome check_bilinear(const Morphism& f) const;

 private:
  struct Junction {
    LinMap kappa;                 // V_a⊗V_b → V_ab
    LinMap lift;                  // Q_ab → V_a⊗V_b, a right inverse of proj_ab∘kappa
    std::vector<Vector> kernel;   // kernel of proj_ab∘kappa
  };
  const Junction& junction(const Obj& a, const Obj& b) const;
  std::vector<Bimodule> word_bimodules(const Obj& x) const;

  BaseRing base_;
  std::map<std::string, Bimodule> atoms_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::string, std::shared_ptr<const FlatTensor>> flat_cache_;
  mutable std::map<std::string, std::shared_ptr<const Junction>> junction_cache_;
};

}  // namespace bimon
