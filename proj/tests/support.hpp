#pragma once

#include <random>
#include <vector>

#include "bimon/zoo.hpp"
#include "oracle.hpp"

namespace testsupport {

using bimon::LinMap;
using bimon::Rational;
using oracle::Bialg;

inline bimon::FreeModule mod(std::size_t n, const char* label = "B") { return {n, label}; }

inline Bialg read(const bimon::DoubleDL& d) {
  return oracle::read(d.monoid.mul.map, d.monoid.unit.map, d.comonoid.comul.map, d.comonoid.counit.map,
                      d.hbar.map);
}

// k⊕L straight from the (k,x) formulas, without going through the library.
inline Bialg kplusl_constants(std::size_t n) {
  Bialg b;
  const std::size_t N = n + 1;
  b.n = N;
  b.m = oracle::cube(N);
  b.d = oracle::cube(N);
  b.h = oracle::quad(N);
  b.u.assign(N, 0);
  b.e.assign(N, 0);
  b.u[0] = 1;
  b.e[0] = 1;
  // μ((k,x)⊗(l,y)) = (kl, ky+lx)
  b.m[0][0][0] = 1;
  for (std::size_t i = 1; i < N; ++i) {
    b.m[0][i][i] = 1;
    b.m[i][0][i] = 1;
  }
  // Δ(k,x) = (k,x)⊗(1,0) + (1,0)⊗(0,x)
  b.d[0][0][0] = 1;
  for (std::size_t i = 1; i < N; ++i) {
    b.d[i][i][0] += 1;
    b.d[i][0][i] += 1;
  }
  // ħ((k,x)⊗(l,y)) = (l,y)⊗(k,0) + (l,0)⊗(0,x) − (0,x)⊗(0,y)
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t c = 0; c < N; ++c) {
      // (k,x) = e_a, (l,y) = e_c
      if (a == 0) b.h[a][c][c][0] += 1;
      if (c == 0 && a != 0) b.h[a][c][0][a] += 1;
      if (a != 0 && c != 0) b.h[a][c][a][c] -= 1;
    }
  return b;
}

inline Bialg cyclic_constants(std::size_t n) {
  Bialg b;
  b.n = n;
  b.m = oracle::cube(n);
  b.d = oracle::cube(n);
  b.h = oracle::quad(n);
  b.u.assign(n, 0);
  b.e.assign(n, 1);
  b.u[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    b.d[i][i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      b.m[i][j][(i + j) % n] = 1;
      b.h[i][j][j][i] = 1;
    }
  }
  return b;
}

inline Rational small(std::mt19937_64& rng, int lo = -2, int hi = 2) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline LinMap random_map(std::mt19937_64& rng, const bimon::FreeModule& dom, const bimon::FreeModule& cod,
                         int lo = -2, int hi = 2) {
  LinMap f(dom, cod);
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) f(r, c) = small(rng, lo, hi);
  return f;
}

inline LinMap random_invertible(std::mt19937_64& rng, const bimon::FreeModule& m) {
  for (;;) {
    auto g = random_map(rng, m, m);
    if (bimon::rank(g) == m.dim) return g;
  }
}

// g acts on the carrier; the actions are conjugated accordingly.
inline bimon::Bimodule transport(const bimon::BaseRing& r, const bimon::Bimodule& m, const LinMap& g) {
  const auto gi = bimon::inverse(g);
  const auto idr = LinMap::identity(r.module());
  return {m.carrier, bimon::compose(g, bimon::compose(m.lact, bimon::tensor_map(idr, gi))),
          bimon::compose(g, bimon::compose(m.ract, bimon::tensor_map(gi, idr)))};
}

inline bimon::Bimodule direct_sum(const bimon::BaseRing& r, const std::vector<bimon::Bimodule>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.carrier.dim;
  const std::size_t k = r.dim();
  const bimon::FreeModule M{n, "M"};
  LinMap l(bimon::FreeModule{k * n, ""}, M), rr(bimon::FreeModule{n * k, ""}, M);
  std::size_t off = 0;
  for (const auto& p : parts) {
    const std::size_t d = p.carrier.dim;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t o = 0; o < d; ++o) {
          l(off + o, a * n + off + i) = p.lact(o, a * d + i);
          rr(off + o, (off + i) * k + a) = p.ract(o, i * k + a);
        }
    off += d;
  }
  return {M, l, rr};
}

// R⊗_𝕜 R with R acting on the outer factors.
inline bimon::Bimodule free_bimodule(const bimon::BaseRing& r) {
  const std::size_t k = r.dim();
  const bimon::FreeModule M{k * k, "M"};
  const auto id = LinMap::identity(r.module());
  auto l = bimon::tensor_map(r.mul, id);
  auto rr = bimon::tensor_map(id, r.mul);
  return {M, LinMap(bimon::FreeModule{k * k * k, ""}, M, l.entries()),
          LinMap(bimon::FreeModule{k * k * k, ""}, M, rr.entries())};
}

inline bimon::Bimodule random_bimodule(std::mt19937_64& rng, const bimon::BaseRing& r,
                                       const std::vector<bimon::Bimodule>& pieces, std::size_t max_dim) {
  std::vector<bimon::Bimodule> parts;
  std::size_t dim = 0;
  for (int tries = 0; tries < 8 && parts.size() < 2; ++tries) {
    const auto& p = pieces[std::uniform_int_distribution<std::size_t>(0, pieces.size() - 1)(rng)];
    if (dim + p.carrier.dim > max_dim) continue;
    parts.push_back(p);
    dim += p.carrier.dim;
    if (rng() % 2) break;
  }
  if (parts.empty()) parts.push_back(pieces.front());
  auto s = direct_sum(r, parts);
  return transport(r, s, random_invertible(rng, s.carrier));
}

// A monoid and a comonoid on ℚ[C_n] carried along independent isomorphisms,
// glued by the flip. The flip is natural, so this is always a double
// distributive law, but it is a bimonoid only when the two transports agree
// up to an automorphism of the bialgebra.
inline bimon::DoubleDL mixed_flip(std::mt19937_64& rng, const bimon::DoubleDL& base) {
  const auto& B = base.carrier;
  const auto g1 = random_invertible(rng, base.monoid.unit.map.cod());
  const auto g2 = random_invertible(rng, base.monoid.unit.map.cod());
  auto a = bimon::transport(base, g1);
  auto c = bimon::transport(base, g2);
  bimon::DoubleDL d;
  d.carrier = B;
  d.monoid = a.monoid;
  d.comonoid = c.comonoid;
  d.hbar = bimon::flip(B, B);
  return d;
}

// ħ(e_i⊗e_j) = c·e_i⊗e_j on L⊗L, the k⊕L formula elsewhere; a double
// distributive law for every c, a bimonoid only for c = −1.
inline bimon::DoubleDL scaled_square(std::size_t n, const Rational& c) {
  auto d = bimon::build_kplusl(n);
  const std::size_t N = n + 1;
  for (std::size_t i = 1; i < N; ++i)
    for (std::size_t j = 1; j < N; ++j) d.hbar.map(i * N + j, i * N + j) = c;
  return d;
}

inline std::vector<bimon::DoubleDL> ddl_corpus() {
  using namespace bimon;
  return {build_kplusl(1),           build_kplusl(2),           build_kplusl(3),
          with_flip(build_kplusl(1)), with_flip(build_kplusl(2)), with_flip(build_kplusl(3)),
          build_flip_bialgebra(1),   build_flip_bialgebra(2),   build_flip_bialgebra(3)};
}

// The corpus followed by 100 seeded perturbations that keep the double
// distributive law intact: transports of k⊕L with ħ or the flip, independent
// transports glued by the flip, the scaled-square family, and transports of ℚ[C2].
inline std::vector<bimon::DoubleDL> equivalence_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto suite = ddl_corpus();
  const std::size_t corpus_size = suite.size();
  while (suite.size() < corpus_size + 100) {
    switch ((suite.size() - corpus_size) % 4) {
      case 0: {
        const auto n = pick(1, 2);
        auto d = rng() % 2 ? bimon::build_kplusl(n) : bimon::with_flip(bimon::build_kplusl(n));
        suite.push_back(bimon::transport(d, random_invertible(rng, {n + 1, "B"})));
        break;
      }
      case 1:
        suite.push_back(mixed_flip(rng, bimon::build_flip_bialgebra(pick(2, 3))));
        break;
      case 2: {
        const auto n = pick(1, 2);
        suite.push_back(bimon::transport(scaled_square(n, small(rng, -3, 2)), random_invertible(rng, {n + 1, "B"})));
        break;
      }
      default:
        suite.push_back(bimon::transport(bimon::build_flip_bialgebra(2), random_invertible(rng, {2, "B"})));
        break;
    }
  }
  return suite;
}

// dim(M⊗_R N) = dim M·dim N − rank of the relations (m·r)⊗n − m⊗(r·n),
// enumerated over basis triples.
inline std::size_t r_tensor_dim(const bimon::BaseRing& r, const bimon::Bimodule& m, const bimon::Bimodule& n) {
  const std::size_t dm = m.carrier.dim, dn = n.carrier.dim, k = r.dim();
  LinMap rel(bimon::FreeModule{dm * dn, ""}, bimon::FreeModule{dm * k * dn, ""});
  std::size_t row = 0;
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t j = 0; j < dn; ++j, ++row) {
        for (std::size_t p = 0; p < dm; ++p) rel(row, p * dn + j) += m.ract(p, i * k + a);
        for (std::size_t q = 0; q < dn; ++q) rel(row, i * dn + q) -= n.lact(q, a * dn + j);
      }
  return dm * dn - bimon::rank(rel);
}

}  // namespace testsupport
