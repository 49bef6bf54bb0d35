#include "bimon/bimonoid.hpp"

namespace bimon {

namespace {

void require(const CheckOutcome& o, const std::string& what) {
  if (!o.passed()) throw PreconditionFailed(what + " fails " + o.failed_names().front());
}

}  // namespace

CheckOutcome check_double_dl(const Category& cat, const DoubleDL& d) {
  const auto& B = d.carrier;
  const auto& m = d.monoid;
  const auto& c = d.comonoid;
  const auto& h = d.hbar;
  if (!(m.carrier == B) || !(c.carrier == B)) throw DimensionMismatch("monoid and comonoid must live on the carrier");
  expect_type(h, B * B, B * B, "ħ");
  CheckOutcome out;
  out.add(cat.equal("unit left: ħ∘(η⊗B) = B⊗η", cat.then({cat.tensor(m.unit, B), h}), cat.tensor(B, m.unit)));
  out.add(cat.equal("mul left: ħ∘(μ⊗B) = (B⊗μ)∘(ħ⊗B)∘(B⊗ħ)", cat.then({cat.tensor(m.mul, B), h}),
                    cat.then({cat.tensor(B, h), cat.tensor(h, B), cat.tensor(B, m.mul)})));
  out.add(cat.equal("unit right: ħ∘(B⊗η) = η⊗B", cat.then({cat.tensor(B, m.unit), h}), cat.tensor(m.unit, B)));
  out.add(cat.equal("mul right: ħ∘(B⊗μ) = (μ⊗B)∘(B⊗ħ)∘(ħ⊗B)", cat.then({cat.tensor(B, m.mul), h}),
                    cat.then({cat.tensor(h, B), cat.tensor(B, h), cat.tensor(m.mul, B)})));
  out.add(cat.equal("counit right: (B⊗ε)∘ħ = ε⊗B", cat.then({h, cat.tensor(B, c.counit)}), cat.tensor(c.counit, B)));
  out.add(cat.equal("comul right: (B⊗Δ)∘ħ = (ħ⊗B)∘(B⊗ħ)∘(Δ⊗B)", cat.then({h, cat.tensor(B, c.comul)}),
                    cat.then({cat.tensor(c.comul, B), cat.tensor(B, h), cat.tensor(h, B)})));
  out.add(cat.equal("counit left: (ε⊗B)∘ħ = B⊗ε", cat.then({h, cat.tensor(c.counit, B)}), cat.tensor(B, c.counit)));
  out.add(cat.equal("comul left: (Δ⊗B)∘ħ = (B⊗ħ)∘(ħ⊗B)∘(B⊗Δ)", cat.then({h, cat.tensor(c.comul, B)}),
                    cat.then({cat.tensor(B, c.comul), cat.tensor(h, B), cat.tensor(B, h)})));
  return out;
}

InducedStructures induced_structures(const Category& cat, const DoubleDL& d) {
  require(check_monoid(cat, d.monoid), "monoid");
  require(check_comonoid(cat, d.comonoid), "comonoid");
  require(check_double_dl(cat, d), "double distributive law");
  const auto& B = d.carrier;
  const auto& m = d.monoid;
  const auto& c = d.comonoid;
  const auto middle = cat.tensor({cat.id(B), d.hbar, cat.id(B)});
  InducedStructures s{
      {B * B, cat.compose(cat.tensor(m.mul, m.mul), middle), cat.compose(cat.tensor(m.unit, B), m.unit)},
      {B * B, cat.compose(middle, cat.tensor(c.comul, c.comul)), cat.compose(c.counit, cat.tensor(B, c.counit))}};
  return s;
}

CheckOutcome bimonoid_identities(const Category& cat, const DoubleDL& d) {
  const auto& B = d.carrier;
  const auto& m = d.monoid;
  const auto& c = d.comonoid;
  const auto middle = cat.tensor({cat.id(B), d.hbar, cat.id(B)});
  CheckOutcome out;
  out.add(cat.equal("comul unital: Δ∘η = η⊗η", cat.compose(c.comul, m.unit), cat.tensor(m.unit, m.unit)));
  out.add(cat.equal("comul multiplicative: (μ⊗μ)∘(B⊗ħ⊗B)∘(Δ⊗Δ) = Δ∘μ",
                    cat.then({cat.tensor(c.comul, c.comul), middle, cat.tensor(m.mul, m.mul)}),
                    cat.compose(c.comul, m.mul)));
  out.add(cat.equal("counit unital: ε∘η = 𝕀", cat.compose(c.counit, m.unit), cat.id(Obj{})));
  out.add(cat.equal("counit multiplicative: ε∘μ = ε⊗ε", cat.compose(c.counit, m.mul),
                    cat.tensor(c.counit, c.counit)));
  return out;
}

BimonoidReport check_bimonoid(const Category& cat, const DoubleDL& d) {
  const auto s = induced_structures(cat, d);
  BimonoidReport r;
  r.identities = bimonoid_identities(cat, d);
  r.structure.add_all(check_monoid_morphism(cat, d.comonoid.comul, d.monoid, s.monoid), "Δ/");
  r.structure.add_all(check_monoid_morphism(cat, d.comonoid.counit, d.monoid, trivial_monoid(cat)), "ε/");
  r.costructure.add_all(check_comonoid_morphism(cat, d.monoid.mul, s.comonoid, d.comonoid), "μ/");
  r.costructure.add_all(check_comonoid_morphism(cat, d.monoid.unit, trivial_comonoid(cat), d.comonoid), "η/");
  r.consistent = r.identities.passed() == r.structure.passed() && r.structure.passed() == r.costructure.passed();
  return r;
}

Bimodule restricted_bimodule(const CoringCompatData& c) {
  const std::size_t n = c.ring_unit.rows();
  const auto id = LinMap::identity({n, "C"});
  return {{n, "C"}, compose(c.ring_mul, tensor_map(c.iota, id)), compose(c.ring_mul, tensor_map(id, c.iota))};
}

DoubleDL coring_ddl(BimoduleCategory& cat, const CoringCompatData& c) {
  require(check_base_ring(c.base), "base ring");
  const std::size_t n = c.ring_unit.rows();
  if (c.ring_unit.cols() != 1 || c.ring_mul.rows() != n || c.ring_mul.cols() != n * n)
    throw PreconditionFailed("ring: malformed structure constants");
  if (c.iota.cols() != c.base.dim() || c.iota.rows() != n) throw PreconditionFailed("ring extension: ι has the wrong shape");

  ModuleCategory kmod;
  const Obj kc(FreeModule{n, "C"});
  const Obj kr(c.base.module());
  const MonoidData ring{kc, kmod.make(kc * kc, kc, c.ring_mul), kmod.make(Obj{}, kc, c.ring_unit)};
  const MonoidData base{kr, kmod.make(kr * kr, kr, c.base.mul), kmod.make(Obj{}, kr, c.base.unit)};
  require(check_monoid(kmod, ring), "ring");
  require(check_monoid_morphism(kmod, kmod.make(kr, kc, c.iota), base, ring), "ring extension");

  cat.add_bimodule("C", restricted_bimodule(c));
  const Obj C = cat.atom("C");
  DoubleDL d;
  d.carrier = C;
  try {
    d.monoid = {C, cat.descend(C * C, C, c.ring_mul), cat.make(Obj{}, C, c.iota)};
    d.comonoid = {C, cat.make(C, C * C, c.comul), cat.make(C, Obj{}, c.counit)};
    d.hbar = cat.make(C * C, C * C, c.hbar);
  } catch (const NotBalanced& e) {
    throw PreconditionFailed(std::string("ring multiplication: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw PreconditionFailed(std::string("coring data: ") + e.what());
  }
  require(cat.check_bilinear(d.monoid.mul), "ring multiplication bilinearity");
  require(cat.check_bilinear(d.monoid.unit), "ring unit bilinearity");
  require(cat.check_bilinear(d.comonoid.comul), "comultiplication bilinearity");
  require(cat.check_bilinear(d.comonoid.counit), "counit bilinearity");
  require(cat.check_bilinear(d.hbar), "ħ bilinearity");
  require(check_monoid(cat, d.monoid), "ring over R");
  require(check_comonoid(cat, d.comonoid), "coring");
  require(check_double_dl(cat, d), "double distributive law");
  return d;
}

CheckOutcome check_coring_compat(const CoringCompatData& c) {
  BimoduleCategory cat(c.base);
  const auto d = coring_ddl(cat, c);
  return bimonoid_identities(cat, d);
}

}  // namespace bimon
