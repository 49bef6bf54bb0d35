#pragma once

#include "bimon/bimodcat.hpp"
#include "bimon/wreathcore.hpp"

namespace bimon {

struct DoubleDL {
  Obj carrier;
  MonoidData monoid;
  ComonoidData comonoid;
  Morphism hbar;  // B⊗B → B⊗B
};

CheckOutcome check_double_dl(const Category& cat, const DoubleDL& d);

struct InducedStructures {
  MonoidData monoid;      // ((μ⊗μ)∘(B⊗ħ⊗B), (η⊗B)∘η)
  ComonoidData comonoid;  // ((B⊗ħ⊗B)∘(Δ⊗Δ), ε∘(B⊗ε))
};

// Throws PreconditionFailed unless the monoid, comonoid and ħ all pass.
InducedStructures induced_structures(const Category& cat, const DoubleDL& d);

// The four compatibility identities between (μ, η) and (Δ, ε) through ħ.
CheckOutcome bimonoid_identities(const Category& cat, const DoubleDL& d);

struct BimonoidReport {
  CheckOutcome identities;   // the verdict
  CheckOutcome structure;    // Δ, ε monoid morphisms into the induced / trivial monoids
  CheckOutcome costructure;  // μ, η comonoid morphisms out of the induced / trivial comonoids
  bool consistent = true;    // all three agree

  bool passed() const { return identities.passed(); }
};

BimonoidReport check_bimonoid(const Category& cat, const DoubleDL& d);

// Ring extension ι: R → 𝔠 with a coring structure on 𝔠 over R. Ring data are
// plain 𝕜-level matrices; comul, counit and hbar are given on the quotient
// bases of 𝔠⊗_R 𝔠 (comul, hbar) and R (counit).
struct CoringCompatData {
  BaseRing base;
  LinMap ring_mul;   // 𝔠⊗𝔠 → 𝔠
  LinMap ring_unit;  // 𝕜 → 𝔠
  LinMap iota;       // R → 𝔠
  LinMap comul;      // 𝔠 → 𝔠⊗_R 𝔠
  LinMap counit;     // 𝔠 → R
  LinMap hbar;       // 𝔠⊗_R 𝔠 → 𝔠⊗_R 𝔠
};

// 𝔠 as an R-bimodule by restriction along ι.
Bimodule restricted_bimodule(const CoringCompatData& c);
// Registers 𝔠 as atom "C" and returns the double distributive law candidate
// in the bimodule category. Throws PreconditionFailed naming the prerequisite.
DoubleDL coring_ddl(BimoduleCategory& cat, const CoringCompatData& c);
CheckOutcome check_coring_compat(const CoringCompatData& c);

}  // namespace bimon
