#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "bimon/exactlin.hpp"

namespace bimon {

// An object of a strict monoidal category, written as a tensor word of
// named atoms. The empty word is the unit object. Strictness comes for free:
// (X⊗Y)⊗Z and X⊗(Y⊗Z) are the same word.
class Obj {
 public:
  Obj() = default;
  explicit Obj(FreeModule atom) : factors_{std::move(atom)} {}
  explicit Obj(std::vector<FreeModule> factors) : factors_(std::move(factors)) {}

  const std::vector<FreeModule>& factors() const noexcept { return factors_; }
  bool is_unit() const noexcept { return factors_.empty(); }
  std::size_t length() const noexcept { return factors_.size(); }
  std::string label() const;

  friend Obj operator*(const Obj& a, const Obj& b);
  friend bool operator==(const Obj& a, const Obj& b);

 private:
  std::vector<FreeModule> factors_;
};

Obj tensor_word(std::initializer_list<Obj> parts);

struct Morphism {
  Obj dom;
  Obj cod;
  LinMap map;
};

// Backend interface shared by every checker. Morphism matrices live on the
// realized space of each word; the backend decides what that space is.
class Category {
 public:
  virtual ~Category() = default;

  virtual std::string name() const = 0;
  // Dimension of the space that realizes a word.
  virtual std::size_t dim(const Obj& x) const = 0;
  virtual Morphism tensor(const Morphism& f, const Morphism& g) const = 0;
  // Label of the i-th basis vector of the realized space, for reports.
  virtual std::string basis_label(const Obj& x, std::size_t i) const = 0;

  FreeModule space(const Obj& x) const { return {dim(x), x.label()}; }
  Obj unit() const { return {}; }
  Morphism id(const Obj& x) const;
  // Checks that the matrix shape fits the realized spaces of dom/cod.
  Morphism make(Obj dom, Obj cod, LinMap map) const;
  Morphism compose(const Morphism& g, const Morphism& f) const;

  // Application-order chain: then({f, g, h}) = h∘g∘f.
  Morphism then(std::initializer_list<Morphism> steps) const;
  Morphism tensor(std::initializer_list<Morphism> parts) const;
  // Tensor of identities and morphisms, objects promoted to identities.
  Morphism tensor(const Morphism& f, const Obj& y) const { return tensor(f, id(y)); }
  Morphism tensor(const Obj& x, const Morphism& g) const { return tensor(id(x), g); }

  AxiomResult equal(const std::string& name, const Morphism& lhs, const Morphism& rhs) const;
};

// k-modules over the rationals: a word realizes as the Kronecker product of
// its atoms (dimension = product of atom dims, unit word = dimension 1).
class ModuleCategory final : public Category {
 public:
  std::string name() const override { return "kmod"; }
  std::size_t dim(const Obj& x) const override;
  Morphism tensor(const Morphism& f, const Morphism& g) const override;
  std::string basis_label(const Obj& x, std::size_t i) const override;
  using Category::tensor;
};

// Label e_i⊗e_j⊗... of a flat index in the k-tensor product of the factors.
std::string kronecker_basis_label(const std::vector<FreeModule>& factors, std::size_t i);

}  // namespace bimon
