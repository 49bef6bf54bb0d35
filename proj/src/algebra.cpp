#include "bimon/algebra.hpp"

namespace bimon {

void expect_type(const Morphism& f, const Obj& dom, const Obj& cod, const std::string& what) {
  if (!(f.dom == dom) || !(f.cod == cod))
    throw DimensionMismatch(what + " has type " + f.dom.label() + " → " + f.cod.label() + ", expected " +
                            dom.label() + " → " + cod.label());
}

namespace {

void expect_monoid(const MonoidData& m) {
  const auto& a = m.carrier;
  expect_type(m.mul, a * a, a, "multiplication");
  expect_type(m.unit, Obj{}, a, "unit");
}

void expect_comonoid(const ComonoidData& c) {
  const auto& x = c.carrier;
  expect_type(c.comul, x, x * x, "comultiplication");
  expect_type(c.counit, x, Obj{}, "counit");
}

}  // namespace

CheckOutcome check_monoid(const Category& cat, const MonoidData& m) {
  expect_monoid(m);
  const auto& a = m.carrier;
  CheckOutcome out;
  out.add(cat.equal("associativity: μ∘(μ⊗A) = μ∘(A⊗μ)", cat.then({cat.tensor(m.mul, a), m.mul}),
                    cat.then({cat.tensor(a, m.mul), m.mul})));
  out.add(cat.equal("left unit: μ∘(η⊗A) = A", cat.then({cat.tensor(m.unit, a), m.mul}), cat.id(a)));
  out.add(cat.equal("right unit: μ∘(A⊗η) = A", cat.then({cat.tensor(a, m.unit), m.mul}), cat.id(a)));
  return out;
}

CheckOutcome check_comonoid(const Category& cat, const ComonoidData& c) {
  expect_comonoid(c);
  const auto& x = c.carrier;
  CheckOutcome out;
  out.add(cat.equal("coassociativity: (Δ⊗C)∘Δ = (C⊗Δ)∘Δ", cat.then({c.comul, cat.tensor(c.comul, x)}),
                    cat.then({c.comul, cat.tensor(x, c.comul)})));
  out.add(cat.equal("left counit: (ε⊗C)∘Δ = C", cat.then({c.comul, cat.tensor(c.counit, x)}), cat.id(x)));
  out.add(cat.equal("right counit: (C⊗ε)∘Δ = C", cat.then({c.comul, cat.tensor(x, c.counit)}), cat.id(x)));
  return out;
}

CheckOutcome check_monoid_morphism(const Category& cat, const Morphism& psi, const MonoidData& src,
                                   const MonoidData& dst) {
  expect_monoid(src);
  expect_monoid(dst);
  expect_type(psi, src.carrier, dst.carrier, "monoid morphism");
  CheckOutcome out;
  out.add(cat.equal("unital: ψ∘η = η′", cat.compose(psi, src.unit), dst.unit));
  out.add(cat.equal("multiplicative: ψ∘μ = μ′∘(ψ⊗ψ)", cat.compose(psi, src.mul),
                    cat.compose(dst.mul, cat.tensor(psi, psi))));
  return out;
}

CheckOutcome check_comonoid_morphism(const Category& cat, const Morphism& phi, const ComonoidData& src,
                                     const ComonoidData& dst) {
  expect_comonoid(src);
  expect_comonoid(dst);
  expect_type(phi, src.carrier, dst.carrier, "comonoid morphism");
  CheckOutcome out;
  out.add(cat.equal("counital: ε′∘φ = ε", cat.compose(dst.counit, phi), src.counit));
  out.add(cat.equal("comultiplicative: Δ′∘φ = (φ⊗φ)∘Δ", cat.compose(dst.comul, phi),
                    cat.compose(cat.tensor(phi, phi), src.comul)));
  return out;
}

CheckOutcome check_comodule(const Category& cat, Side side, const ComonoidData& c, const Obj& x,
                            const Coactions& co) {
  expect_comonoid(c);
  const auto& cc = c.carrier;
  CheckOutcome out;
  const bool want_left = side != Side::right, want_right = side != Side::left;
  if (want_left) {
    if (!co.left) throw DimensionMismatch("left coaction missing");
    const auto& l = *co.left;
    expect_type(l, x, cc * x, "left coaction");
    out.add(cat.equal("left counit: (ε⊗X)∘λ = X", cat.then({l, cat.tensor(c.counit, x)}), cat.id(x)));
    out.add(cat.equal("left coassociativity: (C⊗λ)∘λ = (Δ⊗X)∘λ", cat.then({l, cat.tensor(cc, l)}),
                      cat.then({l, cat.tensor(c.comul, x)})));
  }
  if (want_right) {
    if (!co.right) throw DimensionMismatch("right coaction missing");
    const auto& r = *co.right;
    expect_type(r, x, x * cc, "right coaction");
    out.add(cat.equal("right counit: (X⊗ε)∘ρ = X", cat.then({r, cat.tensor(x, c.counit)}), cat.id(x)));
    out.add(cat.equal("right coassociativity: (ρ⊗C)∘ρ = (X⊗Δ)∘ρ", cat.then({r, cat.tensor(r, cc)}),
                      cat.then({r, cat.tensor(x, c.comul)})));
  }
  if (side == Side::bi)
    out.add(cat.equal("bicomodule: (λ⊗C)∘ρ = (C⊗ρ)∘λ", cat.then({*co.right, cat.tensor(*co.left, cc)}),
                      cat.then({*co.left, cat.tensor(cc, *co.right)})));
  return out;
}

CheckOutcome check_module(const Category& cat, Side side, const MonoidData& a, const Obj& p, const Actions& act) {
  expect_monoid(a);
  const auto& aa = a.carrier;
  CheckOutcome out;
  const bool want_left = side != Side::right, want_right = side != Side::left;
  if (want_left) {
    if (!act.left) throw DimensionMismatch("left action missing");
    const auto& l = *act.left;
    expect_type(l, aa * p, p, "left action");
    out.add(cat.equal("left unit: 𝗅∘(η⊗P) = P", cat.then({cat.tensor(a.unit, p), l}), cat.id(p)));
    out.add(cat.equal("left associativity: 𝗅∘(A⊗𝗅) = 𝗅∘(μ⊗P)", cat.then({cat.tensor(aa, l), l}),
                      cat.then({cat.tensor(a.mul, p), l})));
  }
  if (want_right) {
    if (!act.right) throw DimensionMismatch("right action missing");
    const auto& r = *act.right;
    expect_type(r, p * aa, p, "right action");
    out.add(cat.equal("right unit: 𝗋∘(P⊗η) = P", cat.then({cat.tensor(p, a.unit), r}), cat.id(p)));
    out.add(cat.equal("right associativity: 𝗋∘(𝗋⊗A) = 𝗋∘(P⊗μ)", cat.then({cat.tensor(r, aa), r}),
                      cat.then({cat.tensor(p, a.mul), r})));
  }
  if (side == Side::bi)
    out.add(cat.equal("bimodule: 𝗋∘(𝗅⊗A) = 𝗅∘(A⊗𝗋)", cat.then({cat.tensor(*act.left, aa), *act.right}),
                      cat.then({cat.tensor(aa, *act.right), *act.left})));
  return out;
}

MonoidData trivial_monoid(const Category& cat) {
  const auto u = cat.id(Obj{});
  return {Obj{}, u, u};
}

ComonoidData trivial_comonoid(const Category& cat) {
  const auto u = cat.id(Obj{});
  return {Obj{}, u, u};
}

}  // namespace bimon
