#pragma once

#include "bimon/bimonoid.hpp"

namespace bimon {

// Every kmod structure below is built in this stateless category.
const ModuleCategory& kmod();

Obj atom(const std::string& name, std::size_t dim);
// τ: X⊗Y → Y⊗X in the k-module backend.
Morphism flip(const Obj& x, const Obj& y);

// B = 𝕜⊕L with L = 𝕜ⁿ, basis e0 = (1,0), e_i = (0, i-th basis vector of L).
DoubleDL build_kplusl(std::size_t n);
// Group algebra of the cyclic group of order n, Δ(g) = g⊗g, ε(g) = 1, ħ = τ.
DoubleDL build_flip_bialgebra(std::size_t n);
DoubleDL with_flip(DoubleDL d);

// Carries a kmod double distributive law along an invertible g: B → B.
DoubleDL transport(const DoubleDL& d, const LinMap& g);

BaseRing rationals_ring();
BaseRing qxq_ring();                // basis ε1, ε2 of orthogonal idempotents
BaseRing upper_triangular_ring();   // basis E11, E12, E22
// ℚ over ℚ×ℚ: ε1 acts as 1 on the left, ε2 acts as 1 on the right.
Bimodule qxq_split_bimodule();

CoringCompatData build_trivial_ring(const BaseRing& r);
// The k⊕L double distributive law read as a coring over R = ℚ with ι = η.
CoringCompatData kplusl_coring(std::size_t n);

// Two copies A, T of ℚ[C_n] with the flip as the distributive law both ways.
struct FlipPair {
  MonoidData a_monoid;
  ComonoidData a_comonoid;
  MonoidData t_monoid;
  ComonoidData t_comonoid;
  Morphism twist;  // A⊗T → T⊗A
};

FlipPair build_tensor_flip_pair(std::size_t n);

}  // namespace bimon
