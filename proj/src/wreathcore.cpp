#include "bimon/wreathcore.hpp"

namespace bimon {

namespace {

const ComonoidData& comonoid_base(const EmCell& cell) {
  if (cell.kind != EmKind::RC) throw KindMismatch("cowreath needs a cell of kind rc");
  return std::get<ComonoidData>(cell.base);
}

const MonoidData& monoid_base(const EmCell& cell) {
  if (cell.kind != EmKind::RA) throw KindMismatch("wreath needs a cell of kind ra");
  return std::get<MonoidData>(cell.base);
}

void require(const CheckOutcome& o, const std::string& what) {
  if (!o.passed()) throw PreconditionFailed(what + " fails " + o.failed_names().front());
}

void postcondition(const CheckOutcome& o, const std::string& what) {
  if (!o.passed()) throw InternalError(what + " fails " + o.failed_names().front());
}

}  // namespace

CheckOutcome check_cowreath(const Category& cat, const CowreathData& d) {
  const auto& c = comonoid_base(d.cell);
  const auto& C = c.carrier;
  const auto& R = d.cell.carrier;
  const auto& r = d.cell.map;
  expect_type(d.xi, C * R, C, "ξ");
  expect_type(d.delta, C * R, C * R * R, "δ");
  CheckOutcome out;
  out.add_all(check_em_object(cat, d.cell), "entwining/");
  out.add(cat.equal("counit: (ξ⊗R)∘δ = C⊗R", cat.then({d.delta, cat.tensor(d.xi, R)}), cat.id(C * R)));
  out.add(cat.equal("twist: (R⊗ξ)∘(𝔯⊗R)∘δ = 𝔯", cat.then({d.delta, cat.tensor(r, R), cat.tensor(R, d.xi)}), r));
  out.add(cat.equal("coassociativity: (𝔯⊗R⊗R)∘(δ⊗R)∘δ = (R⊗δ)∘(𝔯⊗R)∘δ",
                    cat.then({d.delta, cat.tensor(d.delta, R), cat.tensor(r, R * R)}),
                    cat.then({d.delta, cat.tensor(r, R), cat.tensor(R, d.delta)})));
  const auto unit_cell = identity_cell(cat, EmKind::RC, d.cell.base);
  out.add_all(check_em_morphism(cat, {d.cell, unit_cell, d.xi}), "ξ/");
  out.add_all(check_em_morphism(cat, {d.cell, em_tensor(cat, d.cell, d.cell), d.delta}), "δ/");
  return out;
}

ComonoidData cowreath_product(const Category& cat, const CowreathData& d) {
  require(check_cowreath(cat, d), "cowreath");
  const auto& c = comonoid_base(d.cell);
  const auto& C = c.carrier;
  const auto& R = d.cell.carrier;
  ComonoidData p{C * R,
                 cat.then({cat.tensor(c.comul, R), cat.tensor(C, d.delta), cat.tensor({cat.id(C), d.cell.map, cat.id(R)})}),
                 cat.compose(c.counit, d.xi)};
  postcondition(check_comonoid(cat, p), "cowreath product");
  postcondition(check_comonoid_morphism(cat, d.xi, p, c), "ξ as comonoid morphism");
  return p;
}

CheckOutcome check_wreath(const Category& cat, const WreathData& d) {
  const auto& a = monoid_base(d.cell);
  const auto& A = a.carrier;
  const auto& T = d.cell.carrier;
  const auto& t = d.cell.map;
  expect_type(d.zeta, A, T * A, "ζ");
  expect_type(d.nu, T * T * A, T * A, "ν");
  CheckOutcome out;
  out.add_all(check_em_object(cat, d.cell), "entwining/");
  out.add(cat.equal("unit: ν∘(T⊗ζ) = T⊗A", cat.then({cat.tensor(T, d.zeta), d.nu}), cat.id(T * A)));
  out.add(cat.equal("twist: ν∘(T⊗𝔱)∘(ζ⊗T) = 𝔱", cat.then({cat.tensor(d.zeta, T), cat.tensor(T, t), d.nu}), t));
  out.add(cat.equal("associativity: ν∘(T⊗𝔱)∘(ν⊗T) = ν∘(T⊗ν)∘(T⊗T⊗𝔱)",
                    cat.then({cat.tensor(d.nu, T), cat.tensor(T, t), d.nu}),
                    cat.then({cat.tensor(T * T, t), cat.tensor(T, d.nu), d.nu})));
  const auto unit_cell = identity_cell(cat, EmKind::RA, d.cell.base);
  out.add_all(check_em_morphism(cat, {unit_cell, d.cell, d.zeta}), "ζ/");
  out.add_all(check_em_morphism(cat, {em_tensor(cat, d.cell, d.cell), d.cell, d.nu}), "ν/");
  return out;
}

MonoidData wreath_product(const Category& cat, const WreathData& d) {
  require(check_wreath(cat, d), "wreath");
  const auto& a = monoid_base(d.cell);
  const auto& A = a.carrier;
  const auto& T = d.cell.carrier;
  MonoidData p{T * A,
               cat.then({cat.tensor({cat.id(T), d.cell.map, cat.id(A)}), cat.tensor(d.nu, A), cat.tensor(T, a.mul)}),
               cat.compose(d.zeta, a.unit)};
  postcondition(check_monoid(cat, p), "wreath product");
  postcondition(check_monoid_morphism(cat, d.zeta, a, p), "ζ as monoid morphism");
  return p;
}

CheckOutcome check_comonoid_dl(const Category& cat, const ComonoidData& c, const ComonoidData& r,
                               const Morphism& map) {
  const auto& C = c.carrier;
  const auto& R = r.carrier;
  expect_type(map, C * R, R * C, "distributive law");
  CheckOutcome out;
  out.add(cat.equal("comul C: (R⊗Δ)∘𝔯 = (𝔯⊗C)∘(C⊗𝔯)∘(Δ⊗R)", cat.then({map, cat.tensor(R, c.comul)}),
                    cat.then({cat.tensor(c.comul, R), cat.tensor(C, map), cat.tensor(map, C)})));
  out.add(cat.equal("counit C: (R⊗ε)∘𝔯 = ε⊗R", cat.then({map, cat.tensor(R, c.counit)}), cat.tensor(c.counit, R)));
  out.add(cat.equal("comul R: (Δ′⊗C)∘𝔯 = (R⊗𝔯)∘(𝔯⊗R)∘(C⊗Δ′)", cat.then({map, cat.tensor(r.comul, C)}),
                    cat.then({cat.tensor(C, r.comul), cat.tensor(map, R), cat.tensor(R, map)})));
  out.add(cat.equal("counit R: (ε′⊗C)∘𝔯 = C⊗ε′", cat.then({map, cat.tensor(r.counit, C)}), cat.tensor(C, r.counit)));
  return out;
}

CheckOutcome check_monoid_dl(const Category& cat, const MonoidData& a, const MonoidData& t, const Morphism& map) {
  const auto& A = a.carrier;
  const auto& T = t.carrier;
  expect_type(map, A * T, T * A, "distributive law");
  CheckOutcome out;
  out.add(cat.equal("mul A: 𝔱∘(μ⊗T) = (T⊗μ)∘(𝔱⊗A)∘(A⊗𝔱)", cat.then({cat.tensor(a.mul, T), map}),
                    cat.then({cat.tensor(A, map), cat.tensor(map, A), cat.tensor(T, a.mul)})));
  out.add(cat.equal("unit A: 𝔱∘(η⊗T) = T⊗η", cat.then({cat.tensor(a.unit, T), map}), cat.tensor(T, a.unit)));
  out.add(cat.equal("mul T: 𝔱∘(A⊗μ′) = (μ′⊗A)∘(T⊗𝔱)∘(𝔱⊗T)", cat.then({cat.tensor(A, t.mul), map}),
                    cat.then({cat.tensor(map, T), cat.tensor(T, map), cat.tensor(t.mul, A)})));
  out.add(cat.equal("unit T: 𝔱∘(A⊗η′) = η′⊗A", cat.then({cat.tensor(A, t.unit), map}), cat.tensor(t.unit, A)));
  return out;
}

CowreathData dl_to_cowreath(const Category& cat, const ComonoidData& c, const ComonoidData& r, const Morphism& map) {
  require(check_comonoid_dl(cat, c, r, map), "comonoid distributive law");
  return {{EmKind::RC, c, r.carrier, map}, cat.tensor(c.carrier, r.counit), cat.tensor(c.carrier, r.comul)};
}

WreathData dl_to_wreath(const Category& cat, const MonoidData& a, const MonoidData& t, const Morphism& map) {
  require(check_monoid_dl(cat, a, t, map), "monoid distributive law");
  return {{EmKind::RA, a, t.carrier, map}, cat.tensor(t.unit, a.carrier), cat.tensor(t.mul, a.carrier)};
}

Morphism universal_cowreath_morphism(const Category& cat, const CowreathData& d, const ComonoidData& dd,
                                     const Morphism& alpha, const Morphism& beta) {
  const auto& c = comonoid_base(d.cell);
  const auto& C = c.carrier;
  const auto& R = d.cell.carrier;
  const auto& D = dd.carrier;
  expect_type(alpha, D, C, "α");
  expect_type(beta, D, R, "β");
  std::vector<std::string> failed;
  if (!check_comonoid_morphism(cat, alpha, dd, c).passed()) failed.emplace_back(kHypMorphism);
  if (!cat.equal("", cat.compose(d.xi, cat.tensor(C, beta)), cat.tensor(C, dd.counit)).passed)
    failed.emplace_back(kHypUnit);
  if (!cat.equal("", cat.compose(d.delta, cat.tensor(C, beta)),
                 cat.compose(cat.tensor({cat.id(C), beta, beta}), cat.tensor(C, dd.comul)))
           .passed)
    failed.emplace_back(kHypMul);
  if (!cat.equal("", cat.then({dd.comul, cat.tensor(alpha, beta), d.cell.map}),
                 cat.then({dd.comul, cat.tensor(beta, alpha)}))
           .passed)
    failed.emplace_back(kHypTwist);
  if (!failed.empty()) throw HypothesisFailed(failed);

  const auto gamma = cat.compose(cat.tensor(alpha, beta), dd.comul);
  CheckOutcome post;
  post.add(cat.equal("ξ∘γ = α", cat.compose(d.xi, gamma), alpha));
  post.add(cat.equal("(ε⊗R)∘γ = β", cat.compose(cat.tensor(c.counit, R), gamma), beta));
  post.add_all(check_comonoid_morphism(cat, gamma, dd, cowreath_product(cat, d)), "γ/");
  postcondition(post, "universal cowreath morphism");
  return gamma;
}

Morphism universal_wreath_morphism(const Category& cat, const WreathData& d, const MonoidData& l,
                                   const Morphism& phi, const Morphism& psi) {
  const auto& a = monoid_base(d.cell);
  const auto& A = a.carrier;
  const auto& T = d.cell.carrier;
  const auto& L = l.carrier;
  expect_type(phi, A, L, "φ");
  expect_type(psi, T, L, "ψ");
  std::vector<std::string> failed;
  if (!check_monoid_morphism(cat, phi, a, l).passed()) failed.emplace_back(kHypMorphism);
  if (!cat.equal("", cat.compose(cat.tensor(psi, A), d.zeta), cat.tensor(l.unit, A)).passed)
    failed.emplace_back(kHypUnit);
  if (!cat.equal("", cat.compose(cat.tensor(psi, A), d.nu),
                 cat.compose(cat.tensor(l.mul, A), cat.tensor({psi, psi, cat.id(A)})))
           .passed)
    failed.emplace_back(kHypMul);
  if (!cat.equal("", cat.compose(l.mul, cat.tensor(phi, psi)),
                 cat.then({d.cell.map, cat.tensor(psi, phi), l.mul}))
           .passed)
    failed.emplace_back(kHypTwist);
  if (!failed.empty()) throw HypothesisFailed(failed);

  const auto big_phi = cat.compose(l.mul, cat.tensor(psi, phi));
  CheckOutcome post;
  post.add(cat.equal("Φ∘ζ = φ", cat.compose(big_phi, d.zeta), phi));
  post.add(cat.equal("Φ∘(T⊗η) = ψ", cat.compose(big_phi, cat.tensor(T, a.unit)), psi));
  post.add_all(check_monoid_morphism(cat, big_phi, wreath_product(cat, d), l), "Φ/");
  postcondition(post, "universal wreath morphism");
  return big_phi;
}

}  // namespace bimon
