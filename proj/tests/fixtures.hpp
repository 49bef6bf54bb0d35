#pragma once

#include "bimon/exactlin.hpp"

// k⊕L with dim L = 1, entered by hand. Basis e0 = (1,0), e1 = (0,1);
// B⊗B in the order e0⊗e0, e0⊗e1, e1⊗e0, e1⊗e1.
namespace fixture {

inline const bimon::FreeModule K{1, "I"};
inline const bimon::FreeModule B{2, "B"};
inline const bimon::FreeModule BB{4, "B⊗B"};

inline bimon::LinMap mu() { return bimon::LinMap::from_rows(BB, B, {{1, 0, 0, 0}, {0, 1, 1, 0}}); }
inline bimon::LinMap eta() { return bimon::LinMap::from_rows(K, B, {{1}, {0}}); }
inline bimon::LinMap delta() { return bimon::LinMap::from_rows(B, BB, {{1, 0}, {0, 1}, {0, 1}, {0, 0}}); }
inline bimon::LinMap eps() { return bimon::LinMap::from_rows(B, K, {{1, 0}}); }
inline bimon::LinMap hbar() {
  return bimon::LinMap::from_rows(BB, BB, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}});
}
inline bimon::LinMap tau() {
  return bimon::LinMap::from_rows(BB, BB, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
}

}  // namespace fixture
