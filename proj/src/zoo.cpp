#include "bimon/zoo.hpp"

namespace bimon {

const ModuleCategory& kmod() {
  static const ModuleCategory cat;
  return cat;
}

Obj atom(const std::string& name, std::size_t dim) { return Obj(FreeModule{dim, name}); }

Morphism flip(const Obj& x, const Obj& y) {
  const auto& k = kmod();
  const std::size_t dx = k.dim(x), dy = k.dim(y);
  LinMap m(k.space(x * y), k.space(y * x));
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < dy; ++j) m(j * dx + i, i * dy + j) = 1;
  return k.make(x * y, y * x, m);
}

namespace {

// Structure map from a basis-level rule: out(col) lists (row, coefficient).
template <class Rule>
Morphism from_rule(const Obj& dom, const Obj& cod, Rule rule) {
  const auto& k = kmod();
  LinMap m(k.space(dom), k.space(cod));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : rule(c)) m(r, c) += v;
  return k.make(dom, cod, m);
}

using Terms = std::vector<std::pair<std::size_t, long>>;

}  // namespace

DoubleDL build_kplusl(std::size_t n) {
  if (n == 0) throw PreconditionFailed("dim L must be positive");
  const std::size_t d = n + 1;
  const Obj B = atom("B", d);
  DoubleDL out;
  out.carrier = B;
  out.monoid.carrier = B;
  out.monoid.mul = from_rule(B * B, B, [d](std::size_t c) {
    const std::size_t i = c / d, j = c % d;
    if (i == 0) return Terms{{j, 1}};
    if (j == 0) return Terms{{i, 1}};
    return Terms{};
  });
  out.monoid.unit = from_rule(Obj{}, B, [](std::size_t) { return Terms{{0, 1}}; });
  out.comonoid.carrier = B;
  out.comonoid.comul = from_rule(B, B * B, [d](std::size_t i) {
    if (i == 0) return Terms{{0, 1}};
    return Terms{{i * d, 1}, {i, 1}};
  });
  out.comonoid.counit = from_rule(B, Obj{}, [](std::size_t i) { return i == 0 ? Terms{{0, 1}} : Terms{}; });
  out.hbar = from_rule(B * B, B * B, [d](std::size_t c) {
    const std::size_t i = c / d, j = c % d;
    if (i == 0 || j == 0) return Terms{{j * d + i, 1}};
    return Terms{{c, -1}};
  });
  return out;
}

DoubleDL build_flip_bialgebra(std::size_t n) {
  if (n == 0) throw PreconditionFailed("group order must be positive");
  const Obj B = atom("B", n);
  DoubleDL out;
  out.carrier = B;
  out.monoid.carrier = B;
  out.monoid.mul = from_rule(B * B, B, [n](std::size_t c) { return Terms{{(c / n + c % n) % n, 1}}; });
  out.monoid.unit = from_rule(Obj{}, B, [](std::size_t) { return Terms{{0, 1}}; });
  out.comonoid.carrier = B;
  out.comonoid.comul = from_rule(B, B * B, [n](std::size_t i) { return Terms{{i * n + i, 1}}; });
  out.comonoid.counit = from_rule(B, Obj{}, [](std::size_t) { return Terms{{0, 1}}; });
  out.hbar = flip(B, B);
  return out;
}

DoubleDL with_flip(DoubleDL d) {
  d.hbar = flip(d.carrier, d.carrier);
  return d;
}

DoubleDL transport(const DoubleDL& d, const LinMap& g) {
  const auto& k = kmod();
  const auto& B = d.carrier;
  const auto G = k.make(B, B, g);
  const auto Gi = k.make(B, B, inverse(g));
  const auto GG = k.tensor(G, G);
  const auto GiGi = k.tensor(Gi, Gi);
  DoubleDL out = d;
  out.monoid.mul = k.then({GiGi, d.monoid.mul, G});
  out.monoid.unit = k.compose(G, d.monoid.unit);
  out.comonoid.comul = k.then({Gi, d.comonoid.comul, GG});
  out.comonoid.counit = k.compose(d.comonoid.counit, Gi);
  out.hbar = k.then({GiGi, d.hbar, GG});
  return out;
}

namespace {

BaseRing ring_from(std::size_t n, const std::vector<std::vector<long>>& mul, const std::vector<long>& unit) {
  std::vector<std::vector<long>> u;
  for (auto v : unit) u.push_back({v});
  return make_base_ring(LinMap::from_rows({n * n, ""}, {n, ""}, mul), LinMap::from_rows({1, ""}, {n, ""}, u));
}

}  // namespace

BaseRing rationals_ring() { return ring_from(1, {{1}}, {1}); }

BaseRing qxq_ring() {
  // ε_i ε_j = δ_ij ε_i
  return ring_from(2, {{1, 0, 0, 0}, {0, 0, 0, 1}}, {1, 1});
}

BaseRing upper_triangular_ring() {
  // E11 E11 = E11, E11 E12 = E12, E12 E22 = E12, E22 E22 = E22.
  std::vector<std::vector<long>> mul(3, std::vector<long>(9, 0));
  mul[0][0 * 3 + 0] = 1;
  mul[1][0 * 3 + 1] = 1;
  mul[1][1 * 3 + 2] = 1;
  mul[2][2 * 3 + 2] = 1;
  return ring_from(3, mul, {1, 0, 1});
}

Bimodule qxq_split_bimodule() {
  const FreeModule m{1, "M"};
  return {m, LinMap::from_rows({2, ""}, m, {{1, 0}}), LinMap::from_rows({2, ""}, m, {{0, 1}})};
}

CoringCompatData build_trivial_ring(const BaseRing& r) {
  if (!check_base_ring(r).passed()) throw PreconditionFailed("base ring fails its axioms");
  const std::size_t n = r.dim();
  CoringCompatData c;
  c.base = r;
  c.ring_mul = r.mul;
  c.ring_unit = r.unit;
  c.iota = LinMap::identity({n, ""});
  Bimodule self{{n, "C"}, r.mul, r.mul};
  const auto t = flatten(r, {self, self});
  // r ↦ 1⊗r
  c.comul = compose(t.proj, tensor_map(r.unit, LinMap::identity({n, ""})));
  c.counit = LinMap::identity({n, ""});
  c.hbar = LinMap::identity(t.quotient);
  return c;
}

CoringCompatData kplusl_coring(std::size_t n) {
  const auto d = build_kplusl(n);
  CoringCompatData c;
  c.base = rationals_ring();
  c.ring_mul = d.monoid.mul.map;
  c.ring_unit = d.monoid.unit.map;
  c.iota = d.monoid.unit.map;
  c.comul = d.comonoid.comul.map;
  c.counit = d.comonoid.counit.map;
  c.hbar = d.hbar.map;
  return c;
}

FlipPair build_tensor_flip_pair(std::size_t n) {
  const auto g = build_flip_bialgebra(n);
  const Obj A = atom("A", n);
  const Obj T = atom("T", n);
  const auto& k = kmod();
  auto on = [&k](const Morphism& f, const Obj& dom, const Obj& cod) { return k.make(dom, cod, f.map); };
  FlipPair p;
  p.a_monoid = {A, on(g.monoid.mul, A * A, A), on(g.monoid.unit, Obj{}, A)};
  p.a_comonoid = {A, on(g.comonoid.comul, A, A * A), on(g.comonoid.counit, A, Obj{})};
  p.t_monoid = {T, on(g.monoid.mul, T * T, T), on(g.monoid.unit, Obj{}, T)};
  p.t_comonoid = {T, on(g.comonoid.comul, T, T * T), on(g.comonoid.counit, T, Obj{})};
  p.twist = flip(A, T);
  return p;
}

}  // namespace bimon
