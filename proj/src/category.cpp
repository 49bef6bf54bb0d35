#include "bimon/category.hpp"

namespace bimon {

std::string Obj::label() const {
  if (factors_.empty()) return "𝕀";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "⊗";
    out += factors_[i].label;
  }
  return out;
}

Obj operator*(const Obj& a, const Obj& b) {
  std::vector<FreeModule> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return Obj(std::move(f));
}

bool operator==(const Obj& a, const Obj& b) {
  if (a.factors_.size() != b.factors_.size()) return false;
  for (std::size_t i = 0; i < a.factors_.size(); ++i)
    if (a.factors_[i].label != b.factors_[i].label || a.factors_[i].dim != b.factors_[i].dim) return false;
  return true;
}

Obj tensor_word(std::initializer_list<Obj> parts) {
  Obj out;
  for (const auto& p : parts) out = out * p;
  return out;
}

Morphism Category::id(const Obj& x) const { return {x, x, LinMap::identity(space(x))}; }

Morphism Category::make(Obj dom, Obj cod, LinMap map) const {
  const auto d = dim(dom), c = dim(cod);
  if (map.cols() != d || map.rows() != c)
    throw DimensionMismatch("matrix " + std::to_string(map.rows()) + "x" + std::to_string(map.cols()) +
                            " does not fit " + dom.label() + " → " + cod.label() + " (" + std::to_string(c) +
                            "x" + std::to_string(d) + ")");
  auto dl = dom.label(), cl = cod.label();
  return {std::move(dom), std::move(cod), map.relabeled(std::move(dl), std::move(cl))};
}

Morphism Category::compose(const Morphism& g, const Morphism& f) const {
  if (!(g.dom == f.cod))
    throw DimensionMismatch("cannot compose " + g.dom.label() + " → " + g.cod.label() + " after " +
                            f.dom.label() + " → " + f.cod.label());
  return {f.dom, g.cod, bimon::compose(g.map, f.map)};
}

Morphism Category::then(std::initializer_list<Morphism> steps) const {
  if (steps.size() == 0) throw DimensionMismatch("empty composite");
  auto it = steps.begin();
  Morphism acc = *it++;
  for (; it != steps.end(); ++it) acc = compose(*it, acc);
  return acc;
}

Morphism Category::tensor(std::initializer_list<Morphism> parts) const {
  if (parts.size() == 0) return id(unit());
  auto it = parts.begin();
  Morphism acc = *it++;
  for (; it != parts.end(); ++it) acc = tensor(acc, *it);
  return acc;
}

AxiomResult Category::equal(const std::string& name, const Morphism& lhs, const Morphism& rhs) const {
  if (!(lhs.dom == rhs.dom) || !(lhs.cod == rhs.cod)) {
    AxiomResult r;
    r.name = name;
    r.passed = false;
    r.note = "sides have different types: " + lhs.dom.label() + " → " + lhs.cod.label() + " vs " +
             rhs.dom.label() + " → " + rhs.cod.label();
    return r;
  }
  auto r = compare_maps(name, lhs.map, rhs.map);
  for (auto& d : r.disagreements) {
    d.row_label = basis_label(lhs.cod, d.row);
    d.col_label = basis_label(lhs.dom, d.col);
  }
  return r;
}

std::size_t ModuleCategory::dim(const Obj& x) const {
  std::size_t d = 1;
  for (const auto& f : x.factors()) d *= f.dim;
  return d;
}

Morphism ModuleCategory::tensor(const Morphism& f, const Morphism& g) const {
  return make(f.dom * g.dom, f.cod * g.cod, tensor_map(f.map, g.map));
}

std::string kronecker_basis_label(const std::vector<FreeModule>& factors, std::size_t i) {
  if (factors.empty()) return "1";
  std::vector<std::size_t> digits(factors.size());
  for (std::size_t k = factors.size(); k-- > 0;) {
    const auto d = factors[k].dim == 0 ? 1 : factors[k].dim;
    digits[k] = i % d;
    i /= d;
  }
  std::string out;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (k) out += "⊗";
    out += "e" + std::to_string(digits[k]);
  }
  return out;
}

std::string ModuleCategory::basis_label(const Obj& x, std::size_t i) const {
  return kronecker_basis_label(x.factors(), i);
}

}  // namespace bimon
