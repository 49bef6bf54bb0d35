#pragma once

#include <string>
#include <variant>

#include "bimon/algebra.hpp"

namespace bimon {

// RC: 𝔵: C⊗X → X⊗C    LC: 𝔭: P⊗C → C⊗P    over a comonoid C
// RA: 𝔲: A⊗U → U⊗A    LA: 𝔪: M⊗A → A⊗M    over a monoid A
enum class EmKind { RC, LC, RA, LA };

std::string kind_name(EmKind k);  // "rc", "lc", "ra", "la"
EmKind parse_kind(const std::string& s);
bool is_monoid_kind(EmKind k);

using EmBase = std::variant<MonoidData, ComonoidData>;

struct EmCell {
  EmKind kind;
  EmBase base;
  Obj carrier;
  Morphism map;
};

// map goes between the induced carriers: C⊗X → C⊗X′ (RC), X⊗C → X′⊗C (LC),
// U⊗A → U′⊗A (RA), A⊗M → A′⊗M (LA).
struct EmMorphism {
  EmCell src;
  EmCell dst;
  Morphism map;
};

// Object the induced bi(co)module lives on: C⊗X for RC/LA, X⊗C for LC/RA.
Obj em_carrier(const EmCell& cell);

// The free structure (Δ⊗X, μ⊗X or their mirrors) and the one built from
// the cell, sorted into left and right.
struct Bistructure {
  Morphism left;
  Morphism right;
};

CheckOutcome check_em_object(const Category& cat, const EmCell& cell);
EmCell identity_cell(const Category& cat, EmKind kind, const EmBase& base);

Bistructure em_structure(const Category& cat, const EmCell& cell);
// Recovers the cell from the structure map that is not free (ρ for RC, 𝗅 for RA).
// Throws PreconditionFailed unless the pair is a bi(co)module.
EmCell em_cell_from_structure(const Category& cat, EmKind kind, const EmBase& base, const Obj& x,
                              const Morphism& structure);
CheckOutcome check_em_structure(const Category& cat, const EmCell& cell, const Bistructure& s);

// λ = Δ⊗X, ρ = (C⊗𝔵)∘(Δ⊗X).
Bistructure coaction_from_entwining(const Category& cat, const EmCell& cell);
// 𝔵 = (ε⊗X⊗C)∘ρ.
EmCell entwining_from_coaction(const Category& cat, const ComonoidData& c, const Obj& x, const Morphism& rho);
// 𝗅 = (U⊗μ)∘(𝔲⊗A), 𝗋 = U⊗μ.
Bistructure action_from_entwining(const Category& cat, const EmCell& cell);
// 𝔲 = 𝗅∘(A⊗U⊗η).
EmCell entwining_from_action(const Category& cat, const MonoidData& a, const Obj& u, const Morphism& l);

CheckOutcome check_em_morphism(const Category& cat, const EmMorphism& m);
EmMorphism em_identity(const Category& cat, const EmCell& cell);

EmCell em_tensor(const Category& cat, const EmCell& a, const EmCell& b);
// Both displayed composites for the vertical product.
EmMorphism em_vertical(const Category& cat, const EmMorphism& alpha, const EmMorphism& beta);
EmMorphism em_vertical_alt(const Category& cat, const EmMorphism& alpha, const EmMorphism& beta);

}  // namespace bimon
