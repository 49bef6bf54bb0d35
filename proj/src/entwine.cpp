#include "bimon/entwine.hpp"

#include <array>

namespace bimon {

std::string kind_name(EmKind k) {
  switch (k) {
    case EmKind::RC: return "rc";
    case EmKind::LC: return "lc";
    case EmKind::RA: return "ra";
    case EmKind::LA: return "la";
  }
  return "?";
}

EmKind parse_kind(const std::string& s) {
  for (auto k : {EmKind::RC, EmKind::LC, EmKind::RA, EmKind::LA})
    if (kind_name(k) == s) return k;
  throw KindMismatch("unknown cell kind '" + s + "'");
}

bool is_monoid_kind(EmKind k) { return k == EmKind::RA || k == EmKind::LA; }

namespace {

// Formula text per kind, in the order RC, LC, RA, LA.
struct Texts {
  std::array<const char*, 4> object_mul, object_unit, morph_free, morph_twisted;
};

const Texts kTexts{
    {"comultiplicative: (X⊗Δ)∘𝔵 = (𝔵⊗C)∘(C⊗𝔵)∘(Δ⊗X)", "comultiplicative: (Δ⊗P)∘𝔭 = (C⊗𝔭)∘(𝔭⊗C)∘(P⊗Δ)",
     "multiplicative: 𝔲∘(μ⊗U) = (U⊗μ)∘(𝔲⊗A)∘(A⊗𝔲)", "multiplicative: 𝔪∘(M⊗μ) = (μ⊗M)∘(A⊗𝔪)∘(𝔪⊗A)"},
    {"counital: (X⊗ε)∘𝔵 = ε⊗X", "counital: (ε⊗P)∘𝔭 = P⊗ε", "unital: 𝔲∘(η⊗U) = U⊗η",
     "unital: 𝔪∘(M⊗η) = η⊗M"},
    {"free side: (Δ⊗X′)∘α = (C⊗α)∘(Δ⊗X)", "free side: (P′⊗Δ)∘α = (α⊗C)∘(P⊗Δ)",
     "free side: α∘(U⊗μ) = (U′⊗μ)∘(α⊗A)", "free side: α∘(μ⊗M) = (μ⊗M′)∘(A⊗α)"},
    {"twisted side: (C⊗𝔵′)∘(Δ⊗X′)∘α = (α⊗C)∘(C⊗𝔵)∘(Δ⊗X)",
     "twisted side: (𝔭′⊗C)∘(P′⊗Δ)∘α = (C⊗α)∘(𝔭⊗C)∘(P⊗Δ)",
     "twisted side: α∘(U⊗μ)∘(𝔲⊗A) = (U′⊗μ)∘(𝔲′⊗A)∘(A⊗α)",
     "twisted side: α∘(μ⊗M)∘(A⊗𝔪) = (μ⊗M′)∘(A⊗𝔪′)∘(α⊗A)"},
};

std::size_t kind_index(EmKind k) { return static_cast<std::size_t>(k); }

// Every kind is the RC case read through two switches: dual reverses all
// arrows (Δ, ε become μ, η), mirror reverses every tensor product.
struct Engine {
  const Category& cat;
  EmKind kind;
  bool dual;
  bool mirror;
  Obj c;
  Morphism d;  // Δ or μ
  Morphism e;  // ε or η

  Engine(const Category& cat_, EmKind k, const EmBase& base) : cat(cat_), kind(k) {
    dual = is_monoid_kind(k);
    mirror = k == EmKind::LC || k == EmKind::RA;
    if (dual) {
      const auto* m = std::get_if<MonoidData>(&base);
      if (!m) throw KindMismatch("cell of kind " + kind_name(k) + " needs a monoid base");
      c = m->carrier;
      d = m->mul;
      e = m->unit;
    } else {
      const auto* m = std::get_if<ComonoidData>(&base);
      if (!m) throw KindMismatch("cell of kind " + kind_name(k) + " needs a comonoid base");
      c = m->carrier;
      d = m->comul;
      e = m->counit;
    }
  }

  Obj tn(const Obj& a, const Obj& b) const { return mirror ? b * a : a * b; }
  Morphism tn(const Morphism& a, const Morphism& b) const { return mirror ? cat.tensor(b, a) : cat.tensor(a, b); }
  Morphism tn(const Morphism& a, const Obj& b) const { return tn(a, cat.id(b)); }
  Morphism tn(const Obj& a, const Morphism& b) const { return tn(cat.id(a), b); }

  // Steps listed in the order they apply in the RC case.
  Morphism chain(std::initializer_list<Morphism> steps) const {
    std::vector<Morphism> v(steps);
    if (dual) {
      Morphism acc = v.back();
      for (std::size_t i = v.size() - 1; i-- > 0;) acc = cat.compose(v[i], acc);
      return acc;
    }
    Morphism acc = v.front();
    for (std::size_t i = 1; i < v.size(); ++i) acc = cat.compose(v[i], acc);
    return acc;
  }

  void expect(const Morphism& f, const Obj& rc_dom, const Obj& rc_cod, const std::string& what) const {
    if (dual)
      expect_type(f, rc_cod, rc_dom, what);
    else
      expect_type(f, rc_dom, rc_cod, what);
  }

  void expect_cell(const EmCell& cell) const {
    expect(cell.map, tn(c, cell.carrier), tn(cell.carrier, c), "cell map");
  }

  Obj carrier_of(const Obj& x) const { return tn(c, x); }

  Morphism free_structure(const Obj& x) const { return tn(d, x); }
  Morphism twisted_structure(const EmCell& cell) const {
    return chain({tn(d, cell.carrier), tn(c, cell.map)});
  }
};

bool same_base(const EmBase& a, const EmBase& b) {
  if (a.index() != b.index()) return false;
  if (const auto* m = std::get_if<MonoidData>(&a)) {
    const auto& n = std::get<MonoidData>(b);
    return m->carrier == n.carrier && m->mul.map == n.mul.map && m->unit.map == n.unit.map;
  }
  const auto& m = std::get<ComonoidData>(a);
  const auto& n = std::get<ComonoidData>(b);
  return m.carrier == n.carrier && m.comul.map == n.comul.map && m.counit.map == n.counit.map;
}

Bistructure sort_sides(const Engine& en, Morphism free, Morphism twisted) {
  if (en.mirror) return {std::move(twisted), std::move(free)};
  return {std::move(free), std::move(twisted)};
}

}  // namespace

Obj em_carrier(const EmCell& cell) {
  const bool mirror = cell.kind == EmKind::LC || cell.kind == EmKind::RA;
  const Obj& c = is_monoid_kind(cell.kind) ? std::get<MonoidData>(cell.base).carrier
                                           : std::get<ComonoidData>(cell.base).carrier;
  return mirror ? cell.carrier * c : c * cell.carrier;
}

CheckOutcome check_em_object(const Category& cat, const EmCell& cell) {
  const Engine en(cat, cell.kind, cell.base);
  en.expect_cell(cell);
  const auto& x = cell.carrier;
  const auto& m = cell.map;
  const auto i = kind_index(cell.kind);
  CheckOutcome out;
  out.add(cat.equal(kTexts.object_mul[i], en.chain({m, en.tn(x, en.d)}),
                    en.chain({en.tn(en.d, x), en.tn(en.c, m), en.tn(m, en.c)})));
  out.add(cat.equal(kTexts.object_unit[i], en.chain({m, en.tn(x, en.e)}), en.tn(en.e, x)));
  return out;
}

EmCell identity_cell(const Category& cat, EmKind kind, const EmBase& base) {
  const Engine en(cat, kind, base);
  return {kind, base, Obj{}, cat.id(en.c)};
}

Bistructure em_structure(const Category& cat, const EmCell& cell) {
  const Engine en(cat, cell.kind, cell.base);
  en.expect_cell(cell);
  return sort_sides(en, en.free_structure(cell.carrier), en.twisted_structure(cell));
}

CheckOutcome check_em_structure(const Category& cat, const EmCell& cell, const Bistructure& s) {
  const Obj carrier = em_carrier(cell);
  if (is_monoid_kind(cell.kind))
    return check_module(cat, Side::bi, std::get<MonoidData>(cell.base), carrier, {s.left, s.right});
  return check_comodule(cat, Side::bi, std::get<ComonoidData>(cell.base), carrier, {s.left, s.right});
}

EmCell em_cell_from_structure(const Category& cat, EmKind kind, const EmBase& base, const Obj& x,
                              const Morphism& structure) {
  const Engine en(cat, kind, base);
  EmCell cell{kind, base, x, Morphism{}};
  const auto s = sort_sides(en, en.free_structure(x), structure);
  const auto outcome = check_em_structure(cat, cell, s);
  if (!outcome.passed())
    throw PreconditionFailed("not a bi" + std::string(en.dual ? "module" : "comodule") + ": " +
                             outcome.failed_names().front());
  cell.map = en.chain({structure, en.tn(en.tn(en.e, x), en.c)});
  return cell;
}

Bistructure coaction_from_entwining(const Category& cat, const EmCell& cell) {
  if (cell.kind != EmKind::RC) throw KindMismatch("coaction_from_entwining needs a cell of kind rc");
  return em_structure(cat, cell);
}

EmCell entwining_from_coaction(const Category& cat, const ComonoidData& c, const Obj& x, const Morphism& rho) {
  return em_cell_from_structure(cat, EmKind::RC, c, x, rho);
}

Bistructure action_from_entwining(const Category& cat, const EmCell& cell) {
  if (cell.kind != EmKind::RA) throw KindMismatch("action_from_entwining needs a cell of kind ra");
  return em_structure(cat, cell);
}

EmCell entwining_from_action(const Category& cat, const MonoidData& a, const Obj& u, const Morphism& l) {
  return em_cell_from_structure(cat, EmKind::RA, a, u, l);
}

CheckOutcome check_em_morphism(const Category& cat, const EmMorphism& m) {
  if (m.src.kind != m.dst.kind) throw KindMismatch("morphism between cells of different kinds");
  if (!same_base(m.src.base, m.dst.base)) throw KindMismatch("morphism between cells over different bases");
  const Engine en(cat, m.src.kind, m.src.base);
  en.expect_cell(m.src);
  en.expect_cell(m.dst);
  const auto& p = en.dual ? m.dst : m.src;
  const auto& q = en.dual ? m.src : m.dst;
  const auto& a = m.map;
  en.expect(a, en.carrier_of(p.carrier), en.carrier_of(q.carrier), "cell morphism");
  const auto i = kind_index(m.src.kind);
  CheckOutcome out;
  out.add(cat.equal(kTexts.morph_free[i], en.chain({a, en.tn(en.d, q.carrier)}),
                    en.chain({en.tn(en.d, p.carrier), en.tn(en.c, a)})));
  out.add(cat.equal(kTexts.morph_twisted[i], en.chain({a, en.tn(en.d, q.carrier), en.tn(en.c, q.map)}),
                    en.chain({en.tn(en.d, p.carrier), en.tn(en.c, p.map), en.tn(a, en.c)})));
  return out;
}

EmMorphism em_identity(const Category& cat, const EmCell& cell) { return {cell, cell, cat.id(em_carrier(cell))}; }

EmCell em_tensor(const Category& cat, const EmCell& a, const EmCell& b) {
  if (a.kind != b.kind) throw KindMismatch("em_tensor of cells of kinds " + kind_name(a.kind) + " and " +
                                           kind_name(b.kind));
  if (!same_base(a.base, b.base)) throw KindMismatch("em_tensor of cells over different bases");
  const Engine en(cat, a.kind, a.base);
  en.expect_cell(a);
  en.expect_cell(b);
  const auto& p = en.mirror ? b : a;
  const auto& q = en.mirror ? a : b;
  return {a.kind, a.base, a.carrier * b.carrier,
          en.chain({en.tn(p.map, q.carrier), en.tn(p.carrier, q.map)})};
}

namespace {

struct VerticalParts {
  const EmMorphism* a;
  const EmMorphism* b;
  const EmCell* x;   // source side of a, in the RC reading
  const EmCell* x2;  // target side of a
  const EmCell* y;
  const EmCell* y2;
};

VerticalParts vertical_parts(const Engine& en, const EmMorphism& alpha, const EmMorphism& beta) {
  if (alpha.src.kind != beta.src.kind) throw KindMismatch("em_vertical of morphisms of different kinds");
  if (!same_base(alpha.src.base, beta.src.base)) throw KindMismatch("em_vertical over different bases");
  VerticalParts v{};
  v.a = en.mirror ? &beta : &alpha;
  v.b = en.mirror ? &alpha : &beta;
  v.x = en.dual ? &v.a->dst : &v.a->src;
  v.x2 = en.dual ? &v.a->src : &v.a->dst;
  v.y = en.dual ? &v.b->dst : &v.b->src;
  v.y2 = en.dual ? &v.b->src : &v.b->dst;
  return v;
}

}  // namespace

EmMorphism em_vertical(const Category& cat, const EmMorphism& alpha, const EmMorphism& beta) {
  const Engine en(cat, alpha.src.kind, alpha.src.base);
  const auto v = vertical_parts(en, alpha, beta);
  const auto& X = v.x->carrier;
  const auto& X2 = v.x2->carrier;
  const auto& Y = v.y->carrier;
  const auto& Y2 = v.y2->carrier;
  const auto map = en.chain({en.tn(en.tn(en.d, X), Y), en.tn(en.tn(en.c, v.a->map), Y),
                             en.tn(en.tn(en.c, v.x2->map), Y), en.tn(en.tn(en.c, X2), v.b->map),
                             en.tn(en.tn(en.tn(en.c, X2), en.e), Y2)});
  return {em_tensor(cat, alpha.src, beta.src), em_tensor(cat, alpha.dst, beta.dst), map};
}

EmMorphism em_vertical_alt(const Category& cat, const EmMorphism& alpha, const EmMorphism& beta) {
  const Engine en(cat, alpha.src.kind, alpha.src.base);
  const auto v = vertical_parts(en, alpha, beta);
  const auto& X = v.x->carrier;
  const auto& X2 = v.x2->carrier;
  const auto& Y = v.y->carrier;
  const auto& Y2 = v.y2->carrier;
  const auto map = en.chain({en.tn(en.tn(en.d, X), Y), en.tn(en.tn(en.c, v.x->map), Y), en.tn(v.a->map, v.b->map),
                             en.tn(en.tn(en.tn(en.c, X2), en.e), Y2)});
  return {em_tensor(cat, alpha.src, beta.src), em_tensor(cat, alpha.dst, beta.dst), map};
}

}  // namespace bimon
