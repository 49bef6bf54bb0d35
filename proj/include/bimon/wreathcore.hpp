#pragma once

#include "bimon/entwine.hpp"

namespace bimon {

// cell: (R, 𝔯: C⊗R → R⊗C) of kind RC.
struct CowreathData {
  EmCell cell;
  Morphism xi;     // C⊗R → C
  Morphism delta;  // C⊗R → C⊗R⊗R
};

// cell: (T, 𝔱: A⊗T → T⊗A) of kind RA.
struct WreathData {
  EmCell cell;
  Morphism zeta;  // A → T⊗A
  Morphism nu;    // T⊗T⊗A → T⊗A
};

CheckOutcome check_cowreath(const Category& cat, const CowreathData& d);
ComonoidData cowreath_product(const Category& cat, const CowreathData& d);
CheckOutcome check_wreath(const Category& cat, const WreathData& d);
MonoidData wreath_product(const Category& cat, const WreathData& d);

// 𝔯: C⊗R → R⊗C.
CheckOutcome check_comonoid_dl(const Category& cat, const ComonoidData& c, const ComonoidData& r, const Morphism& map);
// 𝔱: A⊗T → T⊗A.
CheckOutcome check_monoid_dl(const Category& cat, const MonoidData& a, const MonoidData& t, const Morphism& map);

CowreathData dl_to_cowreath(const Category& cat, const ComonoidData& c, const ComonoidData& r, const Morphism& map);
WreathData dl_to_wreath(const Category& cat, const MonoidData& a, const MonoidData& t, const Morphism& map);

// Hypothesis names reported by HypothesisFailed.
inline constexpr const char* kHypMorphism = "morphism";
inline constexpr const char* kHypUnit = "unit";
inline constexpr const char* kHypMul = "mul";
inline constexpr const char* kHypTwist = "twist";

// γ = (α⊗β)∘Δ_D : D → C⊗R.
Morphism universal_cowreath_morphism(const Category& cat, const CowreathData& d, const ComonoidData& dd,
                                     const Morphism& alpha, const Morphism& beta);
// Φ = μ_L∘(ψ⊗φ) : T⊗A → L.
Morphism universal_wreath_morphism(const Category& cat, const WreathData& d, const MonoidData& l,
                                   const Morphism& phi, const Morphism& psi);

}  // namespace bimon
