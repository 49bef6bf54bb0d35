#pragma once

#include <optional>

#include "bimon/category.hpp"

namespace bimon {

struct MonoidData {
  Obj carrier;
  Morphism mul;   // A⊗A → A
  Morphism unit;  // 𝕀 → A
};

struct ComonoidData {
  Obj carrier;
  Morphism comul;   // C → C⊗C
  Morphism counit;  // C → 𝕀
};

enum class Side { left, right, bi };

// λ: X → C⊗X and/or ρ: X → X⊗C.
struct Coactions {
  std::optional<Morphism> left;
  std::optional<Morphism> right;
};

// 𝗅: A⊗P → P and/or 𝗋: P⊗A → P.
struct Actions {
  std::optional<Morphism> left;
  std::optional<Morphism> right;
};

// Throws DimensionMismatch when a morphism does not have the given type.
void expect_type(const Morphism& f, const Obj& dom, const Obj& cod, const std::string& what);

CheckOutcome check_monoid(const Category& cat, const MonoidData& m);
CheckOutcome check_comonoid(const Category& cat, const ComonoidData& c);
CheckOutcome check_monoid_morphism(const Category& cat, const Morphism& psi, const MonoidData& src,
                                   const MonoidData& dst);
CheckOutcome check_comonoid_morphism(const Category& cat, const Morphism& phi, const ComonoidData& src,
                                     const ComonoidData& dst);
CheckOutcome check_comodule(const Category& cat, Side side, const ComonoidData& c, const Obj& x,
                            const Coactions& co);
CheckOutcome check_module(const Category& cat, Side side, const MonoidData& a, const Obj& p, const Actions& act);

// (𝕀, id, id): the monoid and comonoid structure of the unit object.
MonoidData trivial_monoid(const Category& cat);
ComonoidData trivial_comonoid(const Category& cat);

}  // namespace bimon
